#pragma once

#include "oltrlab/ranker.hpp"

namespace oltr {

// Shared skeleton of the two cascade bandits. Feedback semantics: the user
// examined every position up to and including the first clicked one (all K
// when nothing was clicked), so exactly those positions update their item's
// click estimate. An item is initialized by the first round it is examined;
// until every item has been examined once, proposals lead with fresh items
// (padded at the tail with already-seen ones) instead of consulting indices.
class CascadeBandit : public Ranker {
 public:
  CascadeBandit(int items, int slots, std::int64_t horizon, RngStream& rng);

  RankedList propose(std::int64_t t) override;
  void update(std::int64_t t, const RankedList& proposed,
              const ClickVector& feedback) override;

  std::int64_t observations(ItemId a) const {
    return pulls_[static_cast<size_t>(a)];
  }
  double estimate(ItemId a) const { return mean_[static_cast<size_t>(a)]; }

 protected:
  virtual double index(ItemId a, std::int64_t t) const = 0;

 private:
  std::vector<std::int64_t> pulls_;
  std::vector<double> mean_;
  int uninitialized_;
};

// UCB1-style index alpha_hat + 3 sqrt(ln(t-1) / n).
class CascadeUcb1 final : public CascadeBandit {
 public:
  using CascadeBandit::CascadeBandit;

 protected:
  double index(ItemId a, std::int64_t t) const override;
};

// KL-UCB index: largest q with n * D(alpha_hat || q) <= ln t + 3 ln ln t.
class CascadeKlUcb final : public CascadeBandit {
 public:
  using CascadeBandit::CascadeBandit;

 protected:
  double index(ItemId a, std::int64_t t) const override;
};

}  // namespace oltr
