#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oltr {

using ItemId = std::int32_t;

// Attractiveness table for a catalog, optionally extended with auxiliary
// items that an attacker uploads. Catalog entries must be pairwise distinct
// so that "the optimal list" is unambiguous; auxiliary entries must sit
// strictly below the catalog minimum and strictly descend among themselves.
class AttractionTable {
 public:
  explicit AttractionTable(std::vector<double> catalog_alphas);

  // Returns a copy of this table with auxiliary items appended. The base
  // table must not already carry auxiliary items.
  AttractionTable augmented(const std::vector<double>& aux_alphas) const;

  double alpha(ItemId a) const { return alphas_.at(static_cast<size_t>(a)); }
  int catalog_size() const { return catalog_size_; }
  int total_size() const { return static_cast<int>(alphas_.size()); }
  bool has_auxiliary() const { return total_size() > catalog_size_; }
  double min_catalog_alpha() const { return min_catalog_alpha_; }
  const std::vector<double>& alphas() const { return alphas_; }

 private:
  std::vector<double> alphas_;
  int catalog_size_;
  double min_catalog_alpha_;
};

// A ranked list of exactly K distinct items; position 0 is the top slot.
class RankedList {
 public:
  RankedList() = default;
  explicit RankedList(std::vector<ItemId> items) : items_(std::move(items)) {}

  int size() const { return static_cast<int>(items_.size()); }
  ItemId at(int pos) const { return items_[static_cast<size_t>(pos)]; }
  void set(int pos, ItemId a) { items_[static_cast<size_t>(pos)] = a; }
  const std::vector<ItemId>& items() const { return items_; }

  bool contains(ItemId a) const {
    for (ItemId b : items_)
      if (b == a) return true;
    return false;
  }

  // Position of `a`, or -1 when absent.
  int position_of(ItemId a) const {
    for (int k = 0; k < size(); ++k)
      if (items_[static_cast<size_t>(k)] == a) return k;
    return -1;
  }

  bool operator==(const RankedList& o) const { return items_ == o.items_; }

  // Distinct entries, all valid ids for `table`. Cheap for the small K
  // used here, so the harness can afford it every round.
  void validate(const AttractionTable& table) const;

 private:
  std::vector<ItemId> items_;
};

// Binary click feedback indexed by item over the full (augmented) table.
// Clicks may only sit on items that were actually shown.
class ClickVector {
 public:
  explicit ClickVector(int total_items)
      : clicks_(static_cast<size_t>(total_items), 0) {}

  int size() const { return static_cast<int>(clicks_.size()); }
  int value(ItemId a) const { return clicks_[static_cast<size_t>(a)]; }
  bool clicked(ItemId a) const { return value(a) != 0; }

  void set(ItemId a, bool on) {
    auto& c = clicks_[static_cast<size_t>(a)];
    total_ += (on ? 1 : 0) - c;
    c = on ? 1 : 0;
  }

  int total_clicks() const { return total_; }

  // True when every click lies on an item of `shown`.
  bool valid_for(const RankedList& shown) const {
    int on_shown = 0;
    for (ItemId a : shown.items()) on_shown += value(a);
    return on_shown == total_;
  }

  bool operator==(const ClickVector& o) const { return clicks_ == o.clicks_; }

 private:
  std::vector<std::uint8_t> clicks_;
  int total_ = 0;
};

}  // namespace oltr
