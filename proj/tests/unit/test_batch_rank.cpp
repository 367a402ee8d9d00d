#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include <doctest.h>

#include "oltrlab/batch_rank.hpp"
#include "oltrlab/kl_bounds.hpp"

using oltr::BatchRank;
using oltr::ClickVector;
using oltr::RankedList;
using oltr::RngStream;

namespace {

ClickVector clicks_on(int items, const std::vector<oltr::ItemId>& clicked) {
  ClickVector c(items);
  for (oltr::ItemId a : clicked) c.set(a, true);
  return c;
}

std::int64_t quota_for(std::int64_t T, int stage) {
  return static_cast<std::int64_t>(
      std::ceil(16.0 * std::pow(4.0, stage) * std::log(static_cast<double>(T))));
}

}  // namespace

TEST_CASE("starts as one batch of all items over all positions") {
  RngStream rng(1);
  BatchRank r(6, 3, 100000, rng);
  CHECK(r.active_batches() == 1);
  for (int pos = 0; pos < 3; ++pos) {
    auto items = r.batch_items_at(pos);
    CHECK(items.size() == 6);
  }
  RankedList list = r.propose(1);
  CHECK(list.size() == 3);
  std::set<oltr::ItemId> distinct(list.items().begin(), list.items().end());
  CHECK(distinct.size() == 3);
}

TEST_CASE("rotation displays every member equally often") {
  RngStream rng(2);
  const int L = 6, K = 2;
  const std::int64_t T = 100000;
  BatchRank r(L, K, T, rng);
  std::map<oltr::ItemId, int> displays;
  std::int64_t quota = quota_for(T, 0);
  // Each round shows the two least-displayed of six members, so counts climb
  // in lockstep and everyone reaches the stage quota on the same round.
  std::int64_t rounds = quota * L / K;
  for (std::int64_t t = 1; t <= rounds; ++t) {
    RankedList list = r.propose(t);
    for (int k = 0; k < K; ++k) ++displays[list.at(k)];
    r.update(t, list, ClickVector(L));
  }
  for (const auto& [a, n] : displays) CHECK(n == quota);
  // Clickless feedback separates nothing and eliminates nobody.
  CHECK(r.active_batches() == 1);
  CHECK(r.batch_items_at(0).size() == 6);
}

TEST_CASE("a clear winner splits off exactly at the stage quota") {
  RngStream rng(3);
  const int L = 4, K = 2;
  const std::int64_t T = 100000;
  BatchRank r(L, K, T, rng);
  std::int64_t quota = quota_for(T, 0);
  CHECK(quota == 185);  // ceil(16 ln 1e5)

  // Item 0 clicks whenever shown; the others never do. Two of four members
  // are shown per round, so the batch minimum hits the quota at round
  // 2*quota, concluding the stage there and not a round earlier.
  std::int64_t conclude_round = 2 * quota;
  for (std::int64_t t = 1; t <= conclude_round; ++t) {
    CHECK(r.active_batches() == 1);
    RankedList list = r.propose(t);
    ClickVector c(L);
    if (list.contains(0)) c.set(0, true);
    r.update(t, list, c);
  }
  CHECK(r.active_batches() == 2);
  CHECK(r.batch_items_at(0) == std::vector<oltr::ItemId>{0});
  CHECK(r.batch_items_at(1).size() == 3);

  // The winner owns the top position from then on; losers rotate below and,
  // with one slot for three items, can never split further.
  for (std::int64_t t = conclude_round + 1; t <= conclude_round + 50; ++t) {
    RankedList list = r.propose(t);
    CHECK(list.at(0) == 0);
    r.update(t, list, clicks_on(L, {0}));
  }
  CHECK(r.active_batches() == 2);
}

TEST_CASE("without separation the batch keeps reachable items and advances") {
  RngStream rng(4);
  const int L = 4, K = 2;
  const std::int64_t T = 100000;
  BatchRank r(L, K, T, rng);
  std::int64_t quota = quota_for(T, 0);

  // Items 0 and 1 always click, 2 and 3 never. Upper(always) = lower(always)
  // = 1 while upper(never) stays positive, so no split point separates a
  // prefix, and the elimination keeps exactly the two clickers.
  for (std::int64_t t = 1; t <= 2 * quota; ++t) {
    RankedList list = r.propose(t);
    ClickVector c(L);
    for (int k = 0; k < K; ++k)
      if (list.at(k) <= 1) c.set(list.at(k), true);
    r.update(t, list, c);
  }
  CHECK(r.active_batches() == 1);
  auto kept = r.batch_items_at(0);
  std::sort(kept.begin(), kept.end());
  CHECK(kept == std::vector<oltr::ItemId>{0, 1});

  // The survivors fit the interval exactly; the next stage ends frozen with
  // both members intact, and proposals keep alternating the pair.
  std::int64_t second = quota_for(T, 1);
  for (std::int64_t t = 1; t <= second + 50; ++t) {
    RankedList list = r.propose(t);
    std::set<oltr::ItemId> shown(list.items().begin(), list.items().end());
    CHECK(shown == std::set<oltr::ItemId>{0, 1});
    r.update(t, list, clicks_on(L, {0, 1}));
  }
  CHECK(r.active_batches() == 1);
}

TEST_CASE("proposals are deterministic per seed") {
  RngStream ra(5), rb(5);
  BatchRank a(6, 3, 1000, ra), b(6, 3, 1000, rb);
  RngStream ua(9), ub(9);
  for (std::int64_t t = 1; t <= 400; ++t) {
    RankedList la = a.propose(t), lb = b.propose(t);
    CHECK(la == lb);
    ClickVector ca(6), cb(6);
    if (ua.bernoulli(0.5)) ca.set(la.at(0), true);
    if (ub.bernoulli(0.5)) cb.set(lb.at(0), true);
    a.update(t, la, ca);
    b.update(t, lb, cb);
  }
}
