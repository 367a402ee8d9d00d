#pragma once

#include "oltrlab/results.hpp"

namespace oltr {

struct ExperimentOutcome {
  Environment env;
  ExperimentResult result;
  std::string output_dir;  // where the files actually landed
};

// Resolves the environment, runs every seed, and emits the result files.
// The OLTR_LAB_OUTPUT environment variable, when set, overrides the config's
// output directory.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg);

// Runs the same environment against each attack kind (comma-separated ids:
// e.g. "ga,atq,none"), emitting under <output dir>/<attack id>/. Parameters
// carry over from the base config where they apply; the click-poisoning
// horizon falls back to its calculator when the base config has none.
std::vector<ExperimentOutcome> run_sweep(const ExperimentConfig& base,
                                         const std::string& attack_list);

}  // namespace oltr
