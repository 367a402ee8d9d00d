#include "oltrlab/top_rank.hpp"

#include <cmath>
#include <numeric>

namespace oltr {

TopRank::TopRank(int items, int slots, std::int64_t horizon, double confidence,
                 RngStream& rng)
    : Ranker(items, slots, horizon, rng),
      s_(static_cast<size_t>(items) * static_cast<size_t>(items), 0),
      n_(s_.size(), 0),
      edge_(s_.size(), 0),
      block_of_(static_cast<size_t>(items), 0) {
  if (!(confidence > 0.0))
    throw std::invalid_argument("confidence constant must be positive");
  // delta = 1/T, so c/delta = c*T.
  log_c_over_delta_ = std::log(confidence * static_cast<double>(horizon));
  blocks_.emplace_back(static_cast<size_t>(items));
  std::iota(blocks_[0].begin(), blocks_[0].end(), 0);
}

RankedList TopRank::propose(std::int64_t t) {
  (void)t;
  std::vector<ItemId> flat;
  flat.reserve(static_cast<size_t>(L_));
  for (const auto& block : blocks_) {
    std::vector<ItemId> shuffled = block;
    rng_->shuffle(shuffled);
    flat.insert(flat.end(), shuffled.begin(), shuffled.end());
  }
  flat.resize(static_cast<size_t>(K_));
  return RankedList(std::move(flat));
}

bool TopRank::crossed(ItemId i, ItemId j) const {
  std::int64_t n = n_[pair(i, j)];
  if (n <= 0) return false;
  double nd = static_cast<double>(n);
  double radius =
      std::sqrt(2.0 * nd * (log_c_over_delta_ + 0.5 * std::log(nd)));
  return static_cast<double>(s_[pair(i, j)]) >= radius;
}

void TopRank::update(std::int64_t t, const RankedList& proposed,
                     const ClickVector& feedback) {
  (void)t;
  (void)proposed;
  // Unshown items count as unclicked, so a pair contributes evidence exactly
  // when the two items disagree — it suffices to scan clicked items' blocks.
  bool inserted = false;
  for (ItemId i = 0; i < L_; ++i) {
    if (!feedback.clicked(i)) continue;
    for (ItemId j : blocks_[static_cast<size_t>(block_of_[static_cast<size_t>(i)])]) {
      if (j == i || feedback.clicked(j)) continue;
      s_[pair(i, j)] += 1;
      s_[pair(j, i)] -= 1;
      n_[pair(i, j)] += 1;
      n_[pair(j, i)] += 1;
      if (!edge_[pair(j, i)] && crossed(i, j)) {
        edge_[pair(j, i)] = 1;  // j has a known superior: i
        inserted = true;
      }
    }
  }
  if (inserted) rebuild_blocks();
}

void TopRank::rebuild_blocks() {
  blocks_.clear();
  std::vector<std::uint8_t> placed(static_cast<size_t>(L_), 0);
  int remaining = L_;
  while (remaining > 0) {
    std::vector<ItemId> peel;
    for (ItemId j = 0; j < L_; ++j) {
      if (placed[static_cast<size_t>(j)]) continue;
      bool dominated = false;
      for (ItemId i = 0; i < L_; ++i) {
        if (!placed[static_cast<size_t>(i)] && edge_[pair(j, i)]) {
          dominated = true;
          break;
        }
      }
      if (!dominated) peel.push_back(j);
    }
    if (peel.empty()) {
      failed_ = true;
      reason_ = "comparison graph contains a cycle";
      return;
    }
    for (ItemId a : peel) {
      placed[static_cast<size_t>(a)] = 1;
      block_of_[static_cast<size_t>(a)] = static_cast<int>(blocks_.size());
    }
    remaining -= static_cast<int>(peel.size());
    blocks_.push_back(std::move(peel));
  }
}

}  // namespace oltr
