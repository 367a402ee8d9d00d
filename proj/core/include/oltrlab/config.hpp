#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "oltrlab/types.hpp"

namespace oltr {

enum class ModelKind { kCascade, kPbm };
enum class RankerKind {
  kCascadeUcb1,
  kCascadeKlUcb,
  kPbmUcb,
  kBatchRank,
  kTopRank,
};
enum class AttackKind {
  kNone,
  kListPoison,    // "ga"
  kClickPoison,   // "atq"
  kReduceOthers,  // "attack_reduce"
  kPromoteTarget, // "attack_increase"
};

const char* to_string(ModelKind k);
const char* to_string(RankerKind k);
const char* to_string(AttackKind k);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A fully-resolved experiment description: defaults applied, the click-
// poisoning horizon computed from "auto", the examination curve materialized.
// The target may remain the "random_suboptimal" sentinel (-1); it resolves
// against the attractiveness table when the environment is built.
struct ExperimentConfig {
  std::string name;
  ModelKind model = ModelKind::kCascade;
  std::vector<double> chi;  // per-slot examination curve; empty for cascade
  RankerKind ranker = RankerKind::kCascadeUcb1;
  AttackKind attack = AttackKind::kNone;
  ItemId target = -1;  // -1 = pick a random suboptimal item per environment
  std::int64_t t1 = -1;  // click-poisoning horizon; -1 when not applicable
  std::int64_t baseline_rounds = 2000;
  std::vector<double> decoy_alphas;  // list-poisoning override; empty = default
  int L = 0;
  int K = 0;
  std::int64_t T = 0;
  std::string alphas_path;  // empty = synthetic uniform draw
  std::vector<std::uint64_t> seeds;
  std::string output_dir;
  std::int64_t cadence = 100;
  bool per_run = false;
  bool log_rounds = false;
  double toprank_confidence = 3.43;

  bool operator==(const ExperimentConfig&) const = default;
};

// Parses and validates a config document. Unknown keys anywhere in the
// document are rejected; every diagnostic names the offending key.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

// Canonical JSON for a resolved config; load of the render reproduces the
// identical struct.
std::string render_config(const ExperimentConfig& cfg);

}  // namespace oltr
