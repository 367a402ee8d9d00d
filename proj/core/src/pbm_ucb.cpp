#include "oltrlab/pbm_ucb.hpp"

#include <cmath>
#include <limits>

namespace oltr {

PbmUcb::PbmUcb(int items, int slots, std::int64_t horizon,
               std::vector<double> chi, RngStream& rng)
    : Ranker(items, slots, horizon, rng),
      chi_(std::move(chi)),
      effective_(static_cast<size_t>(items), 0.0),
      shows_(static_cast<size_t>(items), 0),
      clicks_(static_cast<size_t>(items), 0) {
  if (static_cast<int>(chi_.size()) != slots)
    throw std::invalid_argument("examination curve length must equal slots");
}

RankedList PbmUcb::propose(std::int64_t t) {
  double budget = exploration_budget(static_cast<double>(t));
  std::vector<double> score(static_cast<size_t>(L_));
  for (size_t a = 0; a < score.size(); ++a) {
    if (effective_[a] == 0.0) {
      score[a] = std::numeric_limits<double>::infinity();
      continue;
    }
    double mean = static_cast<double>(clicks_[a]) / effective_[a];
    double widen = static_cast<double>(shows_[a]) / effective_[a];
    score[a] = mean + std::sqrt(widen * budget / (2.0 * effective_[a]));
  }
  std::vector<ItemId> order = rank_by_score(score);
  order.resize(static_cast<size_t>(K_));
  return RankedList(std::move(order));
}

void PbmUcb::update(std::int64_t t, const RankedList& proposed,
                    const ClickVector& feedback) {
  (void)t;
  for (int k = 0; k < proposed.size(); ++k) {
    auto a = static_cast<size_t>(proposed.at(k));
    effective_[a] += chi_[static_cast<size_t>(k)];
    shows_[a] += 1;
    clicks_[a] += feedback.value(proposed.at(k));
  }
}

}  // namespace oltr
