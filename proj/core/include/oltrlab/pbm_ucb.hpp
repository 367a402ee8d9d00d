#pragma once

#include "oltrlab/ranker.hpp"

namespace oltr {

// UCB ranker for the position-based model. The examination curve is known to
// the policy; each display of item a at position k contributes chi[k] to a's
// effective sample count, and the index widens by the ratio of raw to
// effective displays. An item never shown has an infinite index, which
// forces one round of exploration before the estimate is trusted.
class PbmUcb final : public Ranker {
 public:
  PbmUcb(int items, int slots, std::int64_t horizon, std::vector<double> chi,
         RngStream& rng);

  RankedList propose(std::int64_t t) override;
  void update(std::int64_t t, const RankedList& proposed,
              const ClickVector& feedback) override;

 private:
  std::vector<double> chi_;
  std::vector<double> effective_;  // sum of chi over shown positions
  std::vector<std::int64_t> shows_;
  std::vector<std::int64_t> clicks_;
};

}  // namespace oltr
