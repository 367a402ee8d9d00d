#include "oltrlab/types.hpp"

#include <algorithm>
#include <limits>

namespace oltr {

AttractionTable::AttractionTable(std::vector<double> catalog_alphas)
    : alphas_(std::move(catalog_alphas)),
      catalog_size_(static_cast<int>(alphas_.size())) {
  if (alphas_.empty()) throw std::invalid_argument("empty attraction table");
  min_catalog_alpha_ = std::numeric_limits<double>::infinity();
  for (double a : alphas_) {
    if (!(a >= 0.0 && a <= 1.0))
      throw std::invalid_argument("attraction outside [0,1]");
    min_catalog_alpha_ = std::min(min_catalog_alpha_, a);
  }
  std::vector<double> sorted = alphas_;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw std::invalid_argument("attraction values must be distinct");
}

AttractionTable AttractionTable::augmented(
    const std::vector<double>& aux_alphas) const {
  if (has_auxiliary())
    throw std::logic_error("table already carries auxiliary items");
  AttractionTable out = *this;
  double prev = std::numeric_limits<double>::infinity();
  for (double a : aux_alphas) {
    if (!(a > 0.0 && a < min_catalog_alpha_))
      throw std::invalid_argument(
          "auxiliary attraction must lie in (0, min catalog alpha)");
    if (!(a < prev))
      throw std::invalid_argument("auxiliary attractions must strictly decrease");
    prev = a;
    out.alphas_.push_back(a);
  }
  return out;
}

void RankedList::validate(const AttractionTable& table) const {
  for (int k = 0; k < size(); ++k) {
    ItemId a = items_[static_cast<size_t>(k)];
    if (a < 0 || a >= table.total_size())
      throw std::out_of_range("ranked list references unknown item " +
                              std::to_string(a));
    for (int j = k + 1; j < size(); ++j)
      if (items_[static_cast<size_t>(j)] == a)
        throw std::invalid_argument("ranked list repeats item " +
                                    std::to_string(a));
  }
}

}  // namespace oltr
