#include <cmath>
#include <set>
#include <vector>

#include <doctest.h>

#include "oltrlab/cascade_ucb.hpp"
#include "oltrlab/kl_bounds.hpp"

using oltr::CascadeKlUcb;
using oltr::CascadeUcb1;
using oltr::ClickVector;
using oltr::RankedList;
using oltr::RngStream;

namespace {

ClickVector clicks_on(int items, std::vector<oltr::ItemId> clicked) {
  ClickVector c(items);
  for (oltr::ItemId a : clicked) c.set(a, true);
  return c;
}

}  // namespace

TEST_CASE("initialization pass shows every item before trusting indices") {
  RngStream rng(1);
  CascadeUcb1 r(6, 3, 1000, rng);
  std::set<oltr::ItemId> seen;
  // With clickless feedback all K slots examine, so two rounds initialize
  // all six items.
  for (std::int64_t t = 1; t <= 2; ++t) {
    RankedList list = r.propose(t);
    for (int k = 0; k < list.size(); ++k) {
      CHECK_FALSE(seen.count(list.at(k)));  // fresh items lead
      seen.insert(list.at(k));
    }
    r.update(t, list, ClickVector(6));
  }
  CHECK(seen.size() == 6);
  for (oltr::ItemId a = 0; a < 6; ++a) {
    CHECK(r.observations(a) == 1);
    CHECK(r.estimate(a) == 0.0);
  }
}

TEST_CASE("a click cuts the examined prefix") {
  RngStream rng(2);
  CascadeUcb1 r(4, 4, 1000, rng);
  RankedList list = r.propose(1);
  // Click the second position: positions 0-1 examined, 2-3 not.
  r.update(1, list, clicks_on(4, {list.at(1)}));
  CHECK(r.observations(list.at(0)) == 1);
  CHECK(r.estimate(list.at(0)) == 0.0);
  CHECK(r.observations(list.at(1)) == 1);
  CHECK(r.estimate(list.at(1)) == 1.0);
  CHECK(r.observations(list.at(2)) == 0);
  CHECK(r.observations(list.at(3)) == 0);
}

TEST_CASE("only the first of several clicks counts") {
  RngStream rng(3);
  CascadeUcb1 r(4, 4, 1000, rng);
  RankedList list = r.propose(1);
  r.update(1, list, clicks_on(4, {list.at(1), list.at(3)}));
  CHECK(r.observations(list.at(1)) == 1);
  CHECK(r.estimate(list.at(1)) == 1.0);
  CHECK(r.observations(list.at(2)) == 0);
  CHECK(r.observations(list.at(3)) == 0);
}

TEST_CASE("estimates are incremental means over examined displays") {
  RngStream rng(4);
  CascadeUcb1 r(2, 2, 1000, rng);
  // Feed item ids directly: propose order during init is 0,1.
  r.update(1, RankedList({0, 1}), clicks_on(2, {}));      // 0: miss
  r.update(2, RankedList({0, 1}), clicks_on(2, {0}));     // 0: hit, 1 unseen
  r.update(3, RankedList({0, 1}), clicks_on(2, {1}));     // both seen
  CHECK(r.observations(0) == 3);
  CHECK(r.estimate(0) == doctest::Approx(1.0 / 3.0));
  CHECK(r.observations(1) == 2);
  CHECK(r.estimate(1) == doctest::Approx(0.5));
}

TEST_CASE("ucb index orders proposals once initialized") {
  RngStream rng(5);
  CascadeUcb1 r(3, 2, 1000, rng);
  // Initialize with scripted feedback: item 0 clicks, 1 and 2 miss.
  r.update(1, RankedList({0, 1}), clicks_on(3, {0}));  // 0 examined only
  r.update(2, RankedList({1, 2}), clicks_on(3, {}));   // 1 and 2 examined
  r.update(3, RankedList({0, 1}), clicks_on(3, {0}));
  // t=1 list (0,1): click at 0, so only position 0 examined; t=2 list (1,2):
  // clickless, both examined; t=3 list (0,1): click at 0, position 0 only.
  // Stats: item 0 -> n=2 mean=1; items 1,2 -> n=1 mean=0.
  CHECK(r.observations(0) == 2);
  CHECK(r.observations(1) == 1);
  CHECK(r.observations(2) == 1);

  // Index at t: mean + 3 sqrt(ln(t-1)/n); item 0 dominates both on mean and
  // pulls, so it must lead the next proposal.
  double i0 = 1.0 + 3.0 * std::sqrt(std::log(3.0) / 2.0);
  double i1 = 0.0 + 3.0 * std::sqrt(std::log(3.0) / 1.0);
  CHECK(i0 > i1);
  RankedList list = r.propose(4);
  CHECK(list.at(0) == 0);
}

TEST_CASE("kl variant uses the confidence ceiling as its index") {
  RngStream rng(6);
  CascadeKlUcb r(2, 2, 200, rng);
  r.update(1, RankedList({0, 1}), clicks_on(2, {0}));
  r.update(2, RankedList({1, 0}), clicks_on(2, {}));
  // Stats: 0 -> n=1 mean=1 (t=1 pos 0 examined; t=2 list (1,0) clickless so
  // both examined -> 0: n=2 mean=0.5; 1: n=1 mean=0).
  CHECK(r.observations(0) == 2);
  CHECK(r.estimate(0) == doctest::Approx(0.5));
  CHECK(r.observations(1) == 1);
  CHECK(r.estimate(1) == 0.0);

  double budget = oltr::exploration_budget(3.0);
  double i0 = oltr::kl_upper_bound(0.5, 2.0, budget);
  double i1 = oltr::kl_upper_bound(0.0, 1.0, budget);
  RankedList list = r.propose(3);
  CHECK(list.at(0) == (i0 > i1 ? 0 : 1));
}

TEST_CASE("proposals are deterministic per seed") {
  for (std::uint64_t seed : std::vector<std::uint64_t>{1, 9}) {
    RngStream ra(seed), rb(seed);
    CascadeUcb1 a(5, 2, 500, ra), b(5, 2, 500, rb);
    RngStream clicks_a(seed + 100), clicks_b(seed + 100);
    for (std::int64_t t = 1; t <= 200; ++t) {
      RankedList la = a.propose(t), lb = b.propose(t);
      CHECK(la == lb);
      ClickVector c(5);
      if (clicks_a.bernoulli(0.4)) c.set(la.at(0), true);
      ClickVector cb(5);
      if (clicks_b.bernoulli(0.4)) cb.set(lb.at(0), true);
      a.update(t, la, c);
      b.update(t, lb, cb);
    }
  }
}

TEST_CASE("constructor validates its arguments") {
  RngStream rng(7);
  CHECK_THROWS(CascadeUcb1(0, 1, 10, rng));
  CHECK_THROWS(CascadeUcb1(3, 4, 10, rng));
  CHECK_THROWS(CascadeUcb1(3, 2, 0, rng));
}
