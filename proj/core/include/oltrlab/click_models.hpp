#pragma once

#include <memory>
#include <vector>

#include "oltrlab/rng.hpp"
#include "oltrlab/types.hpp"

namespace oltr {

// User feedback model: samples binary clicks for a shown list and exposes the
// matching closed-form click probabilities.
class ClickModel {
 public:
  virtual ~ClickModel() = default;

  virtual ClickVector sample(const RankedList& shown,
                             const AttractionTable& table,
                             RngStream& rng) const = 0;

  // Probability that the item at `pos` receives a click.
  virtual double click_probability(const RankedList& shown,
                                   const AttractionTable& table,
                                   int pos) const = 0;

  // Expected total clicks on the shown list.
  virtual double expected_clicks(const RankedList& shown,
                                 const AttractionTable& table) const = 0;
};

// Cascade user: scans top-down, clicks the first attractive item, then
// leaves. At most one click; a clickless round means every slot was examined.
class CascadeModel final : public ClickModel {
 public:
  ClickVector sample(const RankedList& shown, const AttractionTable& table,
                     RngStream& rng) const override;
  double click_probability(const RankedList& shown,
                           const AttractionTable& table,
                           int pos) const override;
  double expected_clicks(const RankedList& shown,
                         const AttractionTable& table) const override;
};

// Position-based user: slot k is examined with probability chi[k]
// independently of the other slots, so every shown item can be clicked.
class PositionBasedModel final : public ClickModel {
 public:
  // `chi` must be strictly decreasing with values in (0,1].
  explicit PositionBasedModel(std::vector<double> chi);

  // The conventional 1/rank examination curve for K slots.
  static std::vector<double> reciprocal_rank_chi(int K);

  const std::vector<double>& chi() const { return chi_; }

  ClickVector sample(const RankedList& shown, const AttractionTable& table,
                     RngStream& rng) const override;
  double click_probability(const RankedList& shown,
                           const AttractionTable& table,
                           int pos) const override;
  double expected_clicks(const RankedList& shown,
                         const AttractionTable& table) const override;

 private:
  std::vector<double> chi_;
};

}  // namespace oltr
