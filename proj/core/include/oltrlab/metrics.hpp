#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oltr {

// Cumulative quantities sampled at one round.
struct Checkpoint {
  std::int64_t t = 0;
  std::int64_t n_target_first = 0;  // rounds with the target proposed at slot 0
  double cost = 0.0;                // cumulative attack cost
  double regret = 0.0;              // cumulative regret of the displayed lists
};

// Trace of a single (config, seed) run. A failed run keeps the checkpoints
// recorded up to the failure but is excluded from aggregate curves.
struct RunMetrics {
  std::uint64_t seed = 0;
  std::vector<Checkpoint> checkpoints;
  bool failed = false;
  std::int64_t failed_at = 0;
  std::string failure_reason;

  void push(const Checkpoint& c);
};

// One row of the aggregate curve: mean and population variance over the
// successful runs at a common checkpoint time.
struct AggregateRow {
  std::int64_t t = 0;
  double n_target_first_mean = 0.0, n_target_first_var = 0.0;
  double cost_mean = 0.0, cost_var = 0.0;
  double regret_mean = 0.0, regret_var = 0.0;
  int runs_ok = 0;
  int runs_failed = 0;
};

// Aligns successful runs on their shared checkpoint grid. Throws if two
// successful runs disagree on checkpoint times; requires at least one
// successful run.
std::vector<AggregateRow> aggregate(const std::vector<RunMetrics>& runs);

}  // namespace oltr
