#pragma once

#include "oltrlab/ranker.hpp"

namespace oltr {

// Divide-and-conquer ranker that maintains pairwise click tallies and a
// directed comparison graph. Items are partitioned into ordered blocks by
// repeatedly peeling the set of items with no known superior; blocks fill
// positions in order (items within a block in uniformly random order) and
// only same-block pairs accumulate evidence. Once the click surplus of one
// item over another clears a confidence radius, an edge records the loser,
// and the partition is rebuilt. A cycle in the graph is an unrecoverable
// contradiction: the ranker flags itself failed and the run stops.
class TopRank final : public Ranker {
 public:
  // `confidence` is the constant c in the edge threshold
  // sqrt(2 N ln(c sqrt(N) / delta)) with delta = 1/horizon.
  TopRank(int items, int slots, std::int64_t horizon, double confidence,
          RngStream& rng);

  RankedList propose(std::int64_t t) override;
  void update(std::int64_t t, const RankedList& proposed,
              const ClickVector& feedback) override;

  bool failed() const override { return failed_; }
  std::string failure_reason() const override { return reason_; }

  bool has_edge(ItemId loser, ItemId winner) const {
    return edge_[pair(loser, winner)] != 0;
  }
  std::int64_t surplus(ItemId i, ItemId j) const { return s_[pair(i, j)]; }
  const std::vector<std::vector<ItemId>>& blocks() const { return blocks_; }

 private:
  size_t pair(ItemId i, ItemId j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(L_) +
           static_cast<size_t>(j);
  }
  bool crossed(ItemId i, ItemId j) const;  // surplus of i over j significant?
  void rebuild_blocks();

  double log_c_over_delta_;
  std::vector<std::int64_t> s_;  // antisymmetric click surplus
  std::vector<std::int64_t> n_;  // symmetric decisive-comparison count
  std::vector<std::uint8_t> edge_;  // edge_[loser][winner]
  std::vector<std::vector<ItemId>> blocks_;
  std::vector<int> block_of_;
  bool failed_ = false;
  std::string reason_;
};

}  // namespace oltr
