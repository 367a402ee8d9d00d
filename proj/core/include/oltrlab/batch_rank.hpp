#pragma once

#include <map>

#include "oltrlab/ranker.hpp"

namespace oltr {

// Elimination ranker that partitions the K positions into contiguous
// intervals, each owned by a batch of candidate items. A batch displays its
// least-shown items, and once every member has been displayed a stage-quota
// number of times it compares KL confidence intervals: a clean separation
// splits the batch across its interval, otherwise items that cannot reach
// the interval are dropped and the batch advances to the next stage with a
// quadrupled quota. A batch whose candidate set already fits its interval
// and does not separate simply stops updating.
class BatchRank final : public Ranker {
 public:
  BatchRank(int items, int slots, std::int64_t horizon, RngStream& rng);

  RankedList propose(std::int64_t t) override;
  void update(std::int64_t t, const RankedList& proposed,
              const ClickVector& feedback) override;

  int active_batches() const { return static_cast<int>(batches_.size()); }
  // Batch owning position `pos` and its candidate items (for inspection).
  std::vector<ItemId> batch_items_at(int pos) const;

 private:
  struct Batch {
    std::vector<ItemId> items;
    int stage = 0;
    int first = 0, last = 0;  // inclusive position interval
    std::int64_t quota = 0;   // displays per item that end the stage
    std::vector<std::int64_t> displays;  // aligned with items
    std::vector<std::int64_t> clicks;
    std::vector<ItemId> shown;  // members displayed this round

    int width() const { return last - first + 1; }
    void reset_counters() {
      displays.assign(items.size(), 0);
      clicks.assign(items.size(), 0);
    }
  };

  std::int64_t stage_quota(int stage) const;
  void conclude_stage(int id, Batch& b);

  std::map<int, Batch> batches_;  // iteration in creation order
  int next_id_ = 0;
};

}  // namespace oltr
