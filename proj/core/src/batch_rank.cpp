#include "oltrlab/batch_rank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oltrlab/kl_bounds.hpp"

namespace oltr {

BatchRank::BatchRank(int items, int slots, std::int64_t horizon,
                     RngStream& rng)
    : Ranker(items, slots, horizon, rng) {
  Batch root;
  root.items.resize(static_cast<size_t>(items));
  std::iota(root.items.begin(), root.items.end(), 0);
  root.first = 0;
  root.last = slots - 1;
  root.quota = stage_quota(0);
  root.reset_counters();
  batches_.emplace(next_id_++, std::move(root));
}

std::int64_t BatchRank::stage_quota(int stage) const {
  // 16 * 4^stage * ln T displays per item: the per-stage target gap halves,
  // so the sample size quadruples.
  double q = 16.0 * std::pow(4.0, stage) * std::log(static_cast<double>(T_));
  return static_cast<std::int64_t>(std::ceil(q));
}

std::vector<ItemId> BatchRank::batch_items_at(int pos) const {
  for (const auto& [id, b] : batches_)
    if (b.first <= pos && pos <= b.last) return b.items;
  throw std::out_of_range("no batch owns that position");
}

RankedList BatchRank::propose(std::int64_t t) {
  (void)t;
  std::vector<ItemId> out(static_cast<size_t>(K_), -1);
  for (auto& [id, b] : batches_) {
    // The width(b) least-displayed members, ties uniformly random…
    std::vector<size_t> idx(b.items.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    rng_->shuffle(idx);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t i, size_t j) {
      return b.displays[i] < b.displays[j];
    });
    idx.resize(static_cast<size_t>(b.width()));
    b.shown.clear();
    for (size_t i : idx) b.shown.push_back(b.items[i]);
    // …in uniformly random order over the batch's interval.
    rng_->shuffle(b.shown);
    for (int k = 0; k < b.width(); ++k)
      out[static_cast<size_t>(b.first + k)] = b.shown[static_cast<size_t>(k)];
  }
  return RankedList(std::move(out));
}

void BatchRank::update(std::int64_t t, const RankedList& proposed,
                       const ClickVector& feedback) {
  (void)t;
  (void)proposed;
  // Children created by a split join in from the next round; iterate over a
  // snapshot of the ids that existed when the round started.
  std::vector<int> ids;
  ids.reserve(batches_.size());
  for (const auto& [id, b] : batches_) ids.push_back(id);
  for (int id : ids) {
    Batch& b = batches_.at(id);
    // Clicks only credit members still at the batch-wide minimum display
    // count, so every estimate averages an identical number of displays.
    std::int64_t fewest =
        *std::min_element(b.displays.begin(), b.displays.end());
    for (ItemId a : b.shown) {
      size_t i = static_cast<size_t>(
          std::find(b.items.begin(), b.items.end(), a) - b.items.begin());
      if (b.displays[i] != fewest) continue;
      b.clicks[i] += feedback.value(a);
      b.displays[i] += 1;
    }
    if (*std::min_element(b.displays.begin(), b.displays.end()) == b.quota)
      conclude_stage(id, b);
  }
}

void BatchRank::conclude_stage(int id, Batch& b) {
  size_t count = b.items.size();
  int len = b.width();
  double n = static_cast<double>(b.quota);
  double budget = exploration_budget(static_cast<double>(T_));

  std::vector<double> upper(count), lower(count);
  for (size_t i = 0; i < count; ++i) {
    double p = static_cast<double>(b.clicks[i]) / n;
    upper[i] = kl_upper_bound(p, n, budget);
    lower[i] = kl_lower_bound(p, n, budget);
  }

  // Members by descending lower bound, ties uniformly random.
  std::vector<size_t> order(count);
  std::iota(order.begin(), order.end(), size_t{0});
  rng_->shuffle(order);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t i, size_t j) { return lower[i] > lower[j]; });

  std::vector<double> suffix_upper(count + 1, 0.0);
  for (size_t i = count; i-- > 0;)
    suffix_upper[i] = std::max(suffix_upper[i + 1], upper[order[i]]);

  // Largest split point whose prefix provably beats everything after it.
  int split = 0;
  for (int k = len - 1; k >= 1; --k) {
    if (lower[order[static_cast<size_t>(k - 1)]] >
        suffix_upper[static_cast<size_t>(k)]) {
      split = k;
      break;
    }
  }

  if (split > 0) {
    Batch head, tail;
    for (int i = 0; i < split; ++i)
      head.items.push_back(b.items[order[static_cast<size_t>(i)]]);
    for (size_t i = static_cast<size_t>(split); i < count; ++i)
      tail.items.push_back(b.items[order[i]]);
    head.first = b.first;
    head.last = b.first + split - 1;
    tail.first = b.first + split;
    tail.last = b.last;
    for (Batch* child : {&head, &tail}) {
      child->stage = 0;
      child->quota = stage_quota(0);
      child->reset_counters();
    }
    batches_.erase(id);
    batches_.emplace(next_id_++, std::move(head));
    batches_.emplace(next_id_++, std::move(tail));
    return;
  }

  if (static_cast<int>(count) > len) {
    // No separation: drop items that cannot reach the interval anymore,
    // i.e. keep those whose upper bound meets the len-th lower bound.
    double bar = lower[order[static_cast<size_t>(len - 1)]];
    std::vector<ItemId> kept;
    for (size_t i = 0; i < count; ++i)
      if (upper[order[i]] >= bar) kept.push_back(b.items[order[i]]);
    b.items = std::move(kept);
    b.stage += 1;
    b.quota = stage_quota(b.stage);
    b.reset_counters();
  }
  // count == len with no split: the batch is settled; its display counts sit
  // at the quota and the stage never concludes again.
}

}  // namespace oltr
