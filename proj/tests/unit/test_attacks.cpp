#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "oltrlab/attacks.hpp"
#include "oltrlab/types.hpp"

using oltr::AttackLedger;
using oltr::AttractionTable;
using oltr::ClickPoisonAttack;
using oltr::ClickVector;
using oltr::ListPoisonAttack;
using oltr::NullAttacker;
using oltr::PromoteTargetAttack;
using oltr::RankedList;
using oltr::SuppressOthersAttack;

namespace {

// Catalog of five with 2K-1 = 5 planted decoys for K = 3.
AttractionTable ga_table() {
  return AttractionTable({0.9, 0.8, 0.7, 0.6, 0.5})
      .augmented({0.4, 0.35, 0.3, 0.25, 0.2});
}

ClickVector clicks_on(int items, const std::vector<oltr::ItemId>& clicked) {
  ClickVector c(items);
  for (oltr::ItemId a : clicked) c.set(a, true);
  return c;
}

}  // namespace

TEST_CASE("ledger accumulates and rejects out-of-range increments") {
  AttackLedger ledger(3.0);
  ledger.add(0.0);
  ledger.add(3.0);
  ledger.add(1.5);
  CHECK(ledger.total() == 4.5);
  CHECK_THROWS_AS(ledger.add(-0.1), std::logic_error);
  CHECK_THROWS_AS(ledger.add(3.1), std::logic_error);
  CHECK(ledger.total() == 4.5);
}

TEST_CASE("null attacker passes everything through at zero cost") {
  NullAttacker atk(3);
  RankedList list({2, 0, 4});
  ClickVector obs = clicks_on(5, {0});
  CHECK(atk.perturb_list(1, list) == list);
  CHECK(atk.perturb_clicks(1, list, obs) == obs);
  CHECK(atk.total_cost() == 0.0);
  CHECK(atk.quiet_after() == 0);
  CHECK(atk.protected_items().empty());
}

TEST_CASE("list poisoning maps decoy ids after the catalog") {
  ListPoisonAttack atk(ga_table(), 2, 3);
  CHECK(atk.filler(1) == 5);
  CHECK(atk.filler(2) == 6);
  CHECK(atk.substitute(3) == 7);
  CHECK(atk.substitute(4) == 8);
  CHECK(atk.substitute(5) == 9);
  CHECK_THROWS_AS(atk.filler(0), std::out_of_range);
  CHECK_THROWS_AS(atk.filler(3), std::out_of_range);
  CHECK_THROWS_AS(atk.substitute(2), std::out_of_range);
  CHECK_THROWS_AS(atk.substitute(6), std::out_of_range);
  CHECK(atk.protected_items() == std::vector<oltr::ItemId>{2, 5, 6});
}

TEST_CASE("list poisoning substitutes exactly the non-promoted positions") {
  ListPoisonAttack atk(ga_table(), 2, 3);

  SUBCASE("promoted set passes untouched") {
    RankedList proposed({2, 5, 6});
    CHECK(atk.perturb_list(1, proposed) == proposed);
    CHECK(atk.total_cost() == 0.0);
  }

  SUBCASE("every foreign item is swapped for its position's decoy") {
    RankedList shown = atk.perturb_list(1, RankedList({0, 1, 3}));
    CHECK(shown == RankedList({7, 8, 9}));
    CHECK(atk.total_cost() == 3.0);
  }

  SUBCASE("a substitute already at its own slot costs nothing") {
    RankedList shown = atk.perturb_list(1, RankedList({7, 1, 2}));
    CHECK(shown == RankedList({7, 8, 2}));
    CHECK(atk.total_cost() == 1.0);
  }

  SUBCASE("a substitute at a foreign slot is swapped like any other") {
    RankedList shown = atk.perturb_list(1, RankedList({9, 5, 2}));
    CHECK(shown == RankedList({7, 5, 2}));
    CHECK(atk.total_cost() == 1.0);
  }

  SUBCASE("cost accumulates across rounds") {
    atk.perturb_list(1, RankedList({0, 1, 3}));
    atk.perturb_list(2, RankedList({2, 5, 6}));
    atk.perturb_list(3, RankedList({0, 5, 6}));
    CHECK(atk.total_cost() == 4.0);
  }
}

TEST_CASE("list poisoning validates its table and target") {
  AttractionTable bare({0.9, 0.8, 0.7, 0.6, 0.5});
  CHECK_THROWS_AS(ListPoisonAttack(bare, 2, 3), std::invalid_argument);
  AttractionTable short_aux =
      AttractionTable({0.9, 0.8, 0.7, 0.6, 0.5}).augmented({0.4, 0.3, 0.2});
  CHECK_THROWS_AS(ListPoisonAttack(short_aux, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(ListPoisonAttack(ga_table(), 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(ListPoisonAttack(ga_table(), -1, 3), std::invalid_argument);
}

TEST_CASE("default decoy curve is evenly spaced below the catalog minimum") {
  std::vector<double> decoys = oltr::default_decoy_alphas(0.7, 3);
  REQUIRE(decoys.size() == 5);
  std::vector<double> expected{0.5, 0.4, 0.3, 0.2, 0.1};
  for (size_t i = 0; i < decoys.size(); ++i)
    CHECK(decoys[i] == doctest::Approx(expected[i]).epsilon(1e-14));
  for (size_t i = 1; i < decoys.size(); ++i) CHECK(decoys[i] < decoys[i - 1]);
  CHECK(decoys.front() < 0.7);
  CHECK(decoys.back() > 0.0);
}

TEST_CASE("click poisoning rewrites shown feedback until its horizon") {
  ClickPoisonAttack atk(1, 10, 3);
  RankedList shown({0, 1, 2});

  SUBCASE("unclicks others and clicks the target") {
    ClickVector forged = atk.perturb_clicks(1, shown, clicks_on(5, {0}));
    CHECK(forged == clicks_on(5, {1}));
    CHECK(atk.total_cost() == 2.0);
  }

  SUBCASE("already-perfect feedback costs nothing") {
    ClickVector forged = atk.perturb_clicks(1, shown, clicks_on(5, {1}));
    CHECK(forged == clicks_on(5, {1}));
    CHECK(atk.total_cost() == 0.0);
  }

  SUBCASE("unshown clicks pass through untouched") {
    ClickVector forged = atk.perturb_clicks(1, shown, clicks_on(5, {4}));
    CHECK(forged == clicks_on(5, {1, 4}));
    CHECK(atk.total_cost() == 1.0);
  }

  SUBCASE("silent after the horizon") {
    ClickVector obs = clicks_on(5, {0, 2});
    CHECK(atk.perturb_clicks(11, shown, obs) == obs);
    CHECK(atk.total_cost() == 0.0);
    CHECK(atk.quiet_after() == 10);
  }

  SUBCASE("an unshown target is simply never clicked") {
    RankedList without({0, 2, 3});
    ClickVector forged = atk.perturb_clicks(1, without, clicks_on(5, {0}));
    CHECK(forged == ClickVector(5));
    CHECK(atk.total_cost() == 1.0);
  }
}

TEST_CASE("click poisoning rejects a negative horizon") {
  CHECK_THROWS_AS(ClickPoisonAttack(0, -1, 3), std::invalid_argument);
}

TEST_CASE("suppression zeroes shown non-target clicks for its duration") {
  SuppressOthersAttack atk(1, 5, 3);
  RankedList shown({0, 1, 2});
  ClickVector forged = atk.perturb_clicks(1, shown, clicks_on(5, {0, 1, 2}));
  CHECK(forged == clicks_on(5, {1}));
  CHECK(atk.total_cost() == 2.0);
  // The target's own clicks are never suppressed, and after the window the
  // attack is identity.
  ClickVector obs = clicks_on(5, {0, 2});
  CHECK(atk.perturb_clicks(6, shown, obs) == obs);
  CHECK(atk.total_cost() == 2.0);
  CHECK(atk.quiet_after() == 5);
  CHECK_THROWS_AS(SuppressOthersAttack(0, -2, 3), std::invalid_argument);
}

TEST_CASE("promotion forces a shown target click and nothing else") {
  PromoteTargetAttack atk(2, 5, 3);
  RankedList shown({0, 1, 2});

  SUBCASE("adds the target click on top of genuine feedback") {
    // Careless by design: the forged vector carries two clicks, which a
    // cascade-model user could never produce.
    ClickVector forged = atk.perturb_clicks(1, shown, clicks_on(5, {0}));
    CHECK(forged == clicks_on(5, {0, 2}));
    CHECK(atk.total_cost() == 1.0);
  }

  SUBCASE("a clicked target costs nothing") {
    ClickVector forged = atk.perturb_clicks(1, shown, clicks_on(5, {2}));
    CHECK(forged == clicks_on(5, {2}));
    CHECK(atk.total_cost() == 0.0);
  }

  SUBCASE("an unshown target is left alone") {
    RankedList without({0, 1, 3});
    ClickVector obs = clicks_on(5, {0});
    CHECK(atk.perturb_clicks(1, without, obs) == obs);
    CHECK(atk.total_cost() == 0.0);
  }

  SUBCASE("silent after the window") {
    ClickVector obs = clicks_on(5, {0});
    CHECK(atk.perturb_clicks(6, shown, obs) == obs);
    CHECK(atk.total_cost() == 0.0);
    CHECK(atk.quiet_after() == 5);
  }

  CHECK_THROWS_AS(PromoteTargetAttack(0, -1, 3), std::invalid_argument);
}

TEST_CASE("poisoning horizons match their closed forms") {
  // ceil(16 L ln T)
  CHECK(oltr::poison_rounds_batchrank(50, 100000) == 9211);
  CHECK(oltr::poison_rounds_batchrank(10, 100000) == 1843);
  CHECK(oltr::poison_rounds_batchrank(1, 3) ==
        static_cast<std::int64_t>(std::ceil(16.0 * std::log(3.0))));
  // ceil(4 ln(c/delta) / (K/L + (1 - sqrt(1 + 8K/L)) / 4))
  CHECK(oltr::poison_rounds_toprank(50, 5, 100000, 1e-5, 3.43) == 3495);
  double ratio = 0.1;
  double denom = ratio + (1.0 - std::sqrt(1.0 + 8.0 * ratio)) / 4.0;
  std::int64_t expected = static_cast<std::int64_t>(
      std::ceil(4.0 * std::log(3.43 / 1e-5) / denom));
  CHECK(oltr::poison_rounds_toprank(50, 5, 100000, 1e-5, 3.43) == expected);

  CHECK_THROWS_AS(oltr::poison_rounds_batchrank(0, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(oltr::poison_rounds_batchrank(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(oltr::poison_rounds_toprank(5, 6, 100, 0.01, 3.43),
                  std::invalid_argument);
  CHECK_THROWS_AS(oltr::poison_rounds_toprank(5, 2, 100, 0.0, 3.43),
                  std::invalid_argument);
  CHECK_THROWS_AS(oltr::poison_rounds_toprank(5, 2, 100, 1.0, 3.43),
                  std::invalid_argument);
  CHECK_THROWS_AS(oltr::poison_rounds_toprank(5, 2, 100, 0.01, 0.0),
                  std::invalid_argument);
}
