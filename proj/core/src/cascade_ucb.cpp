#include "oltrlab/cascade_ucb.hpp"

#include <cmath>

#include "oltrlab/kl_bounds.hpp"

namespace oltr {

CascadeBandit::CascadeBandit(int items, int slots, std::int64_t horizon,
                             RngStream& rng)
    : Ranker(items, slots, horizon, rng),
      pulls_(static_cast<size_t>(items), 0),
      mean_(static_cast<size_t>(items), 0.0),
      uninitialized_(items) {}

RankedList CascadeBandit::propose(std::int64_t t) {
  if (uninitialized_ > 0) {
    std::vector<ItemId> fresh, seen;
    for (ItemId a = 0; a < L_; ++a)
      (pulls_[static_cast<size_t>(a)] == 0 ? fresh : seen).push_back(a);
    std::vector<ItemId> out;
    out.reserve(static_cast<size_t>(K_));
    for (ItemId a : fresh) {
      if (static_cast<int>(out.size()) == K_) break;
      out.push_back(a);
    }
    for (ItemId a : seen) {
      if (static_cast<int>(out.size()) == K_) break;
      out.push_back(a);
    }
    return RankedList(std::move(out));
  }
  std::vector<double> score(static_cast<size_t>(L_));
  for (ItemId a = 0; a < L_; ++a) score[static_cast<size_t>(a)] = index(a, t);
  std::vector<ItemId> order = rank_by_score(score);
  order.resize(static_cast<size_t>(K_));
  return RankedList(std::move(order));
}

void CascadeBandit::update(std::int64_t t, const RankedList& proposed,
                           const ClickVector& feedback) {
  (void)t;
  int last_examined = proposed.size() - 1;
  for (int k = 0; k < proposed.size(); ++k) {
    if (feedback.clicked(proposed.at(k))) {
      last_examined = k;
      break;
    }
  }
  for (int k = 0; k <= last_examined; ++k) {
    auto a = static_cast<size_t>(proposed.at(k));
    double click = feedback.clicked(proposed.at(k)) ? 1.0 : 0.0;
    if (pulls_[a] == 0) {
      pulls_[a] = 1;
      mean_[a] = click;
      --uninitialized_;
    } else {
      pulls_[a] += 1;
      mean_[a] += (click - mean_[a]) / static_cast<double>(pulls_[a]);
    }
  }
}

double CascadeUcb1::index(ItemId a, std::int64_t t) const {
  double n = static_cast<double>(observations(a));
  return estimate(a) + 3.0 * std::sqrt(std::log(static_cast<double>(t - 1)) / n);
}

double CascadeKlUcb::index(ItemId a, std::int64_t t) const {
  return kl_upper_bound(estimate(a), static_cast<double>(observations(a)),
                        exploration_budget(static_cast<double>(t)));
}

}  // namespace oltr
