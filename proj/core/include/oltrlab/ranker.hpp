#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oltrlab/rng.hpp"
#include "oltrlab/types.hpp"

namespace oltr {

// Online learning-to-rank policy over a fixed item universe. Each round the
// harness calls propose(t), shows some (possibly perturbed) list to the user,
// and feeds the clicks back through update(t). A ranker owns no RNG; it draws
// from the run-wide stream handed in at construction so that a whole run
// replays from one seed.
class Ranker {
 public:
  Ranker(int items, int slots, std::int64_t horizon, RngStream& rng)
      : L_(items), K_(slots), T_(horizon), rng_(&rng) {
    if (items < 1 || slots < 1 || slots > items)
      throw std::invalid_argument("need 1 <= slots <= items");
    if (horizon < 1) throw std::invalid_argument("horizon must be positive");
  }
  virtual ~Ranker() = default;

  virtual RankedList propose(std::int64_t t) = 0;
  virtual void update(std::int64_t t, const RankedList& proposed,
                      const ClickVector& feedback) = 0;

  // Some rankers can reach an internally inconsistent state (e.g. a cycle in
  // a comparison graph). The harness aborts the run when this turns true.
  virtual bool failed() const { return false; }
  virtual std::string failure_reason() const { return {}; }

  int items() const { return L_; }
  int slots() const { return K_; }

 protected:
  // All items ordered by descending score with uniformly random tie-breaks:
  // shuffle first, then a stable sort keeps the shuffled order among equals.
  std::vector<ItemId> rank_by_score(const std::vector<double>& score);

  int L_, K_;
  std::int64_t T_;
  RngStream* rng_;
};

// Exploration budget ln t + 3 ln ln t used by the KL-confidence rankers,
// clamped so the log-log term never goes negative for tiny t.
double exploration_budget(double t);

}  // namespace oltr
