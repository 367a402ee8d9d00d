#include "oltrlab/click_models.hpp"

#include <limits>

namespace oltr {

ClickVector CascadeModel::sample(const RankedList& shown,
                                 const AttractionTable& table,
                                 RngStream& rng) const {
  ClickVector clicks(table.total_size());
  for (int k = 0; k < shown.size(); ++k) {
    ItemId a = shown.at(k);
    if (rng.bernoulli(table.alpha(a))) {
      clicks.set(a, true);
      break;
    }
  }
  return clicks;
}

double CascadeModel::click_probability(const RankedList& shown,
                                       const AttractionTable& table,
                                       int pos) const {
  double p = table.alpha(shown.at(pos));
  for (int s = 0; s < pos; ++s) p *= 1.0 - table.alpha(shown.at(s));
  return p;
}

double CascadeModel::expected_clicks(const RankedList& shown,
                                     const AttractionTable& table) const {
  double none = 1.0;
  for (ItemId a : shown.items()) none *= 1.0 - table.alpha(a);
  return 1.0 - none;
}

PositionBasedModel::PositionBasedModel(std::vector<double> chi)
    : chi_(std::move(chi)) {
  if (chi_.empty()) throw std::invalid_argument("empty examination curve");
  double prev = std::numeric_limits<double>::infinity();
  for (double x : chi_) {
    if (!(x > 0.0 && x <= 1.0))
      throw std::invalid_argument("examination probability outside (0,1]");
    if (!(x < prev))
      throw std::invalid_argument("examination curve must strictly decrease");
    prev = x;
  }
}

std::vector<double> PositionBasedModel::reciprocal_rank_chi(int K) {
  std::vector<double> chi(static_cast<size_t>(K));
  for (int k = 0; k < K; ++k) chi[static_cast<size_t>(k)] = 1.0 / (k + 1);
  return chi;
}

ClickVector PositionBasedModel::sample(const RankedList& shown,
                                       const AttractionTable& table,
                                       RngStream& rng) const {
  if (shown.size() > static_cast<int>(chi_.size()))
    throw std::invalid_argument("shown list longer than examination curve");
  ClickVector clicks(table.total_size());
  for (int k = 0; k < shown.size(); ++k) {
    ItemId a = shown.at(k);
    if (rng.bernoulli(chi_[static_cast<size_t>(k)] * table.alpha(a)))
      clicks.set(a, true);
  }
  return clicks;
}

double PositionBasedModel::click_probability(const RankedList& shown,
                                             const AttractionTable& table,
                                             int pos) const {
  return chi_[static_cast<size_t>(pos)] * table.alpha(shown.at(pos));
}

double PositionBasedModel::expected_clicks(const RankedList& shown,
                                           const AttractionTable& table) const {
  double sum = 0.0;
  for (int k = 0; k < shown.size(); ++k)
    sum += click_probability(shown, table, k);
  return sum;
}

}  // namespace oltr
