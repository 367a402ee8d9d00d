#include "oltrlab/regret.hpp"

#include <algorithm>
#include <numeric>

namespace oltr {

RankedList optimal_catalog_list(const ClickModel& model,
                                const AttractionTable& table, int K) {
  (void)model;  // both models maximize with the same sorted list
  if (K < 1 || K > table.catalog_size())
    throw std::invalid_argument("list length outside [1, catalog size]");
  std::vector<ItemId> order(static_cast<size_t>(table.catalog_size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
    return table.alpha(a) > table.alpha(b);
  });
  order.resize(static_cast<size_t>(K));
  return RankedList(std::move(order));
}

double optimal_expected_clicks(const ClickModel& model,
                               const AttractionTable& table, int K) {
  return model.expected_clicks(optimal_catalog_list(model, table, K), table);
}

double round_regret(const ClickModel& model, const AttractionTable& table,
                    const RankedList& displayed, double optimal_value) {
  return std::max(0.0, optimal_value - model.expected_clicks(displayed, table));
}

}  // namespace oltr
