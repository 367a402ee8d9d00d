#pragma once

#include <cstdint>
#include <vector>

#include "oltrlab/types.hpp"

namespace oltr {

// Running total of attack effort. List poisoning pays one unit per
// substituted position, click poisoning one unit per flipped click; either
// way a single round can cost at most the list length.
class AttackLedger {
 public:
  explicit AttackLedger(double max_per_round) : cap_(max_per_round) {}

  void add(double increment) {
    if (!(increment >= 0.0 && increment <= cap_))
      throw std::logic_error("per-round attack cost outside [0, K]");
    total_ += increment;
  }
  double total() const { return total_; }

 private:
  double cap_;
  double total_ = 0.0;
};

// Adversary interposed between ranker and user. The list hook rewrites what
// the user sees; the click hook rewrites what the ranker sees. Both default
// to identity so an attack overrides only its own channel.
class Attacker {
 public:
  explicit Attacker(int slots) : ledger_(static_cast<double>(slots)) {}
  virtual ~Attacker() = default;

  virtual RankedList perturb_list(std::int64_t t, const RankedList& proposed) {
    (void)t;
    return proposed;
  }
  // `shown` is the list the clicks refer to; `observed` the user's clicks.
  virtual ClickVector perturb_clicks(std::int64_t t, const RankedList& shown,
                                     const ClickVector& observed) {
    (void)t;
    (void)shown;
    return observed;
  }

  double total_cost() const { return ledger_.total(); }

  // Items whose positions the attack pledges never to touch; the harness
  // audits the pledge every round.
  virtual std::vector<ItemId> protected_items() const { return {}; }
  // Last round the attack may incur cost, or -1 for no such promise; the
  // harness audits that later rounds cost nothing.
  virtual std::int64_t quiet_after() const { return -1; }

 protected:
  AttackLedger ledger_;
};

// No attack: both hooks identity, cost forever zero.
class NullAttacker final : public Attacker {
 public:
  using Attacker::Attacker;
  std::int64_t quiet_after() const override { return 0; }
};

// List poisoning with auxiliary items. The attacker plants 2K-1 decoys below
// the catalog's minimum attractiveness: the top K-1 decoys plus the target
// form the promoted set, and whenever the ranker proposes anything else at
// position k it is swapped for the (K+k)-th decoy — so every non-promoted
// item is observed with nearly zero attractiveness and the promoted set
// inherits the top of the ranking.
class ListPoisonAttack final : public Attacker {
 public:
  // `table` must already carry the 2K-1 auxiliary items; `target` is a
  // suboptimal catalog item.
  ListPoisonAttack(const AttractionTable& table, ItemId target, int slots);

  RankedList perturb_list(std::int64_t t, const RankedList& proposed) override;
  std::vector<ItemId> protected_items() const override;

  // Decoy ids: promoted fillers occupy ranks 1..K-1, substitutes K..2K-1.
  ItemId filler(int rank) const;      // rank in [1, K-1]
  ItemId substitute(int rank) const;  // rank in [K, 2K-1]

 private:
  ItemId target_;
  int catalog_;
  int K_;
};

// Default decoy attractiveness curve for a catalog minimum: 2K-1 values
// strictly below the minimum, strictly decreasing.
std::vector<double> default_decoy_alphas(double min_catalog_alpha, int slots);

// Click poisoning, attack-then-quit: until round `horizon1` every shown
// click is rewritten — 1 for the target, 0 for everything else — after which
// the attacker goes silent. Unshown items pass through untouched.
class ClickPoisonAttack final : public Attacker {
 public:
  ClickPoisonAttack(ItemId target, std::int64_t horizon1, int slots);

  ClickVector perturb_clicks(std::int64_t t, const RankedList& shown,
                             const ClickVector& observed) override;
  std::int64_t quiet_after() const override { return horizon1_; }

 private:
  ItemId target_;
  std::int64_t horizon1_;
};

// Naive baseline: zero out clicks of shown non-target items for the first
// `rounds` rounds.
class SuppressOthersAttack final : public Attacker {
 public:
  SuppressOthersAttack(ItemId target, std::int64_t rounds, int slots);

  ClickVector perturb_clicks(std::int64_t t, const RankedList& shown,
                             const ClickVector& observed) override;
  std::int64_t quiet_after() const override { return rounds_; }

 private:
  ItemId target_;
  std::int64_t rounds_;
};

// Naive baseline: force the shown target's click to 1 for the first `rounds`
// rounds. Deliberately careless about the click model's shape: under the
// cascade model the forwarded vector can carry two clicks.
class PromoteTargetAttack final : public Attacker {
 public:
  PromoteTargetAttack(ItemId target, std::int64_t rounds, int slots);

  ClickVector perturb_clicks(std::int64_t t, const RankedList& shown,
                             const ClickVector& observed) override;
  std::int64_t quiet_after() const override { return rounds_; }

 private:
  ItemId target_;
  std::int64_t rounds_;
};

// Rounds of poisoned feedback after which an elimination ranker is committed
// to the target: ceil(16 L ln T).
std::int64_t poison_rounds_batchrank(int catalog, std::int64_t horizon);

// Same commitment point for the comparison-graph ranker:
// ceil(4 ln(c/delta) / (K/L + (1 - sqrt(1 + 8K/L)) / 4)).
std::int64_t poison_rounds_toprank(int catalog, int slots,
                                   std::int64_t horizon, double delta,
                                   double confidence);

}  // namespace oltr
