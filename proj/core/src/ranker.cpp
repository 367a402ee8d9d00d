#include "oltrlab/ranker.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oltr {

std::vector<ItemId> Ranker::rank_by_score(const std::vector<double>& score) {
  std::vector<ItemId> order(score.size());
  std::iota(order.begin(), order.end(), 0);
  rng_->shuffle(order);
  std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
    return score[static_cast<size_t>(a)] > score[static_cast<size_t>(b)];
  });
  return order;
}

double exploration_budget(double t) {
  double lt = std::log(t);
  return lt + 3.0 * std::log(std::max(lt, 1.0));
}

}  // namespace oltr
