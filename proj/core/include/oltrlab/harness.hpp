#pragma once

#include <memory>

#include "oltrlab/attacks.hpp"
#include "oltrlab/click_models.hpp"
#include "oltrlab/config.hpp"
#include "oltrlab/environment.hpp"
#include "oltrlab/metrics.hpp"
#include "oltrlab/ranker.hpp"

namespace oltr {

// Per-run conformance checks the harness performs while it drives the loop.
struct RunAudit {
  int max_round_clicks = 0;     // most clicks forwarded in any single round
  bool pledge_violated = false; // a protected item's slot was rewritten
  bool quiet_violated = false;  // cost accrued past the attack's quiet point
};

struct RunOutput {
  RunMetrics metrics;
  RunAudit audit;
  std::vector<Checkpoint> rounds;  // full per-round trace when requested
};

struct ExperimentResult {
  std::vector<RunOutput> runs;      // one per seed, in config order
  std::vector<AggregateRow> curve;  // over the successful runs
};

// Factories keyed off the config; the ranker's item universe is the full
// table (catalog plus any decoys the attack planted).
std::unique_ptr<ClickModel> make_model(const ExperimentConfig& cfg);
std::unique_ptr<Ranker> make_ranker(const ExperimentConfig& cfg,
                                    const Environment& env, RngStream& rng);
std::unique_ptr<Attacker> make_attacker(const ExperimentConfig& cfg,
                                        const Environment& env);

// Drives one seeded run: propose, perturb the list, sample the user, remap
// clicks onto the proposed positions, perturb the feedback, update. Records
// cumulative target-at-first counts, attack cost, and displayed-list regret
// at t = 1, every cadence rounds, and t = T. A ranker failure ends the run
// early with the partial trace kept.
RunOutput run_one(const ExperimentConfig& cfg, const Environment& env,
                  std::uint64_t seed);

// All seeds plus the aggregate curve over the successful runs.
ExperimentResult run_repetitions(const ExperimentConfig& cfg,
                                 const Environment& env);

// Promotion guarantee for the list-poisoning attack: a lower bound on the
// expected number of rounds the target heads the proposed list. `table` must
// carry the decoys. A non-positive value means the bound is vacuous at this
// horizon.
double promotion_bound(const AttractionTable& table, ItemId target, int K,
                       std::int64_t T);

}  // namespace oltr
