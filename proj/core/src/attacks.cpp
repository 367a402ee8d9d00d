#include "oltrlab/attacks.hpp"

#include <cmath>
#include <stdexcept>

namespace oltr {

ListPoisonAttack::ListPoisonAttack(const AttractionTable& table, ItemId target,
                                   int slots)
    : Attacker(slots),
      target_(target),
      catalog_(table.catalog_size()),
      K_(slots) {
  if (table.total_size() != catalog_ + 2 * slots - 1)
    throw std::invalid_argument("table must carry exactly 2K-1 decoys");
  if (target < 0 || target >= catalog_)
    throw std::invalid_argument("target must be a catalog item");
}

ItemId ListPoisonAttack::filler(int rank) const {
  if (rank < 1 || rank > K_ - 1) throw std::out_of_range("filler rank");
  return catalog_ + rank - 1;
}

ItemId ListPoisonAttack::substitute(int rank) const {
  if (rank < K_ || rank > 2 * K_ - 1) throw std::out_of_range("substitute rank");
  return catalog_ + rank - 1;
}

RankedList ListPoisonAttack::perturb_list(std::int64_t t,
                                          const RankedList& proposed) {
  (void)t;
  RankedList shown = proposed;
  double swapped = 0.0;
  for (int k = 0; k < shown.size(); ++k) {
    ItemId a = shown.at(k);
    bool promoted = a == target_ || (a >= catalog_ && a < catalog_ + K_ - 1);
    if (promoted) continue;
    ItemId sub = substitute(K_ + k);
    if (sub == a) continue;  // a decoy proposed at its own slot stays free
    shown.set(k, sub);
    swapped += 1.0;
  }
  ledger_.add(swapped);
  return shown;
}

std::vector<ItemId> ListPoisonAttack::protected_items() const {
  std::vector<ItemId> out{target_};
  for (int rank = 1; rank <= K_ - 1; ++rank) out.push_back(filler(rank));
  return out;
}

std::vector<double> default_decoy_alphas(double min_catalog_alpha, int slots) {
  // eta_k = alpha_min (2K - k) / (2K + 1), k = 1..2K-1: evenly spaced in
  // (0, alpha_min), strictly decreasing.
  std::vector<double> out;
  for (int k = 1; k <= 2 * slots - 1; ++k)
    out.push_back(min_catalog_alpha * static_cast<double>(2 * slots - k) /
                  static_cast<double>(2 * slots + 1));
  return out;
}

ClickPoisonAttack::ClickPoisonAttack(ItemId target, std::int64_t horizon1,
                                     int slots)
    : Attacker(slots), target_(target), horizon1_(horizon1) {
  if (horizon1 < 0) throw std::invalid_argument("negative poisoning horizon");
}

ClickVector ClickPoisonAttack::perturb_clicks(std::int64_t t,
                                              const RankedList& shown,
                                              const ClickVector& observed) {
  if (t > horizon1_) return observed;
  ClickVector forged = observed;
  double flips = 0.0;
  for (ItemId a : shown.items()) {
    bool want = a == target_;
    if (forged.clicked(a) != want) {
      forged.set(a, want);
      flips += 1.0;
    }
  }
  ledger_.add(flips);
  return forged;
}

SuppressOthersAttack::SuppressOthersAttack(ItemId target, std::int64_t rounds,
                                           int slots)
    : Attacker(slots), target_(target), rounds_(rounds) {
  if (rounds < 0) throw std::invalid_argument("negative attack duration");
}

ClickVector SuppressOthersAttack::perturb_clicks(std::int64_t t,
                                                 const RankedList& shown,
                                                 const ClickVector& observed) {
  if (t > rounds_) return observed;
  ClickVector forged = observed;
  double flips = 0.0;
  for (ItemId a : shown.items()) {
    if (a != target_ && forged.clicked(a)) {
      forged.set(a, false);
      flips += 1.0;
    }
  }
  ledger_.add(flips);
  return forged;
}

PromoteTargetAttack::PromoteTargetAttack(ItemId target, std::int64_t rounds,
                                         int slots)
    : Attacker(slots), target_(target), rounds_(rounds) {
  if (rounds < 0) throw std::invalid_argument("negative attack duration");
}

ClickVector PromoteTargetAttack::perturb_clicks(std::int64_t t,
                                                const RankedList& shown,
                                                const ClickVector& observed) {
  if (t > rounds_) return observed;
  ClickVector forged = observed;
  double flips = 0.0;
  if (shown.contains(target_) && !forged.clicked(target_)) {
    forged.set(target_, true);
    flips = 1.0;
  }
  ledger_.add(flips);
  return forged;
}

std::int64_t poison_rounds_batchrank(int catalog, std::int64_t horizon) {
  if (catalog < 1 || horizon < 2)
    throw std::invalid_argument("need catalog >= 1 and horizon >= 2");
  return static_cast<std::int64_t>(
      std::ceil(16.0 * static_cast<double>(catalog) *
                std::log(static_cast<double>(horizon))));
}

std::int64_t poison_rounds_toprank(int catalog, int slots,
                                   std::int64_t horizon, double delta,
                                   double confidence) {
  if (catalog < 1 || slots < 1 || slots > catalog)
    throw std::invalid_argument("need 1 <= slots <= catalog");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0,1)");
  if (!(confidence > 0.0))
    throw std::invalid_argument("confidence constant must be positive");
  double ratio = static_cast<double>(slots) / static_cast<double>(catalog);
  double denom = ratio + (1.0 - std::sqrt(1.0 + 8.0 * ratio)) / 4.0;
  return static_cast<std::int64_t>(
      std::ceil(4.0 * std::log(confidence / delta) / denom));
}

}  // namespace oltr
