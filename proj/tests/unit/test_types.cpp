#include <stdexcept>

#include <doctest.h>

#include "oltrlab/types.hpp"

using oltr::AttractionTable;
using oltr::ClickVector;
using oltr::RankedList;

TEST_CASE("attraction table accepts a distinct catalog in range") {
  AttractionTable t({0.9, 0.2, 0.5});
  CHECK(t.catalog_size() == 3);
  CHECK(t.total_size() == 3);
  CHECK_FALSE(t.has_auxiliary());
  CHECK(t.alpha(0) == 0.9);
  CHECK(t.alpha(2) == 0.5);
  CHECK(t.min_catalog_alpha() == 0.2);
}

TEST_CASE("attraction table rejects bad catalogs") {
  CHECK_THROWS_AS(AttractionTable({}), std::invalid_argument);
  CHECK_THROWS_AS(AttractionTable({0.5, 1.5}), std::invalid_argument);
  CHECK_THROWS_AS(AttractionTable({0.5, -0.1}), std::invalid_argument);
  CHECK_THROWS_AS(AttractionTable({0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("augmentation appends strictly smaller decreasing values") {
  AttractionTable t({0.9, 0.2, 0.5});
  AttractionTable aug = t.augmented({0.15, 0.1, 0.05});
  CHECK(aug.catalog_size() == 3);
  CHECK(aug.total_size() == 6);
  CHECK(aug.has_auxiliary());
  CHECK(aug.alpha(3) == 0.15);
  CHECK(aug.alpha(5) == 0.05);
  CHECK(aug.min_catalog_alpha() == 0.2);

  CHECK_THROWS_AS(t.augmented({0.25}), std::invalid_argument);   // above min
  CHECK_THROWS_AS(t.augmented({0.2}), std::invalid_argument);    // ties min
  CHECK_THROWS_AS(t.augmented({0.1, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(t.augmented({0.05, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(aug.augmented({0.01}), std::logic_error);  // twice
}

TEST_CASE("ranked list lookups") {
  RankedList list({4, 1, 3});
  CHECK(list.size() == 3);
  CHECK(list.at(0) == 4);
  CHECK(list.contains(3));
  CHECK_FALSE(list.contains(0));
  CHECK(list.position_of(1) == 1);
  CHECK(list.position_of(9) == -1);

  RankedList same({4, 1, 3});
  CHECK(list == same);
  same.set(2, 0);
  CHECK_FALSE(list == same);
}

TEST_CASE("ranked list validation against a table") {
  AttractionTable t({0.9, 0.2, 0.5, 0.7});
  RankedList ok({3, 0});
  CHECK_NOTHROW(ok.validate(t));
  CHECK_THROWS(RankedList({0, 0}).validate(t));
  CHECK_THROWS(RankedList({0, 4}).validate(t));
  CHECK_THROWS(RankedList({-1, 2}).validate(t));
}

TEST_CASE("click vector tracks totals incrementally") {
  ClickVector c(5);
  CHECK(c.size() == 5);
  CHECK(c.total_clicks() == 0);
  c.set(2, true);
  c.set(4, true);
  CHECK(c.total_clicks() == 2);
  c.set(2, true);  // idempotent
  CHECK(c.total_clicks() == 2);
  c.set(2, false);
  CHECK(c.total_clicks() == 1);
  CHECK_FALSE(c.clicked(2));
  CHECK(c.clicked(4));
}

TEST_CASE("click vector knows whether clicks sit on shown items") {
  ClickVector c(5);
  c.set(1, true);
  c.set(3, true);
  CHECK(c.valid_for(RankedList({1, 3, 0})));
  CHECK_FALSE(c.valid_for(RankedList({1, 0})));  // click on unshown 3
  ClickVector empty(5);
  CHECK(empty.valid_for(RankedList({0, 1})));
}
