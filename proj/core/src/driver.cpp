#include "oltrlab/driver.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "oltrlab/attacks.hpp"

namespace oltr {

namespace {

std::string effective_output_dir(const ExperimentConfig& cfg) {
  const char* override_dir = std::getenv("OLTR_LAB_OUTPUT");
  return override_dir && *override_dir ? override_dir : cfg.output_dir;
}

}  // namespace

ExperimentOutcome run_experiment(const ExperimentConfig& cfg) {
  Environment env = resolve_environment(cfg);
  ExperimentResult result = run_repetitions(cfg, env);
  std::string dir = effective_output_dir(cfg);
  emit_results(cfg, env, result, dir);
  return {std::move(env), std::move(result), std::move(dir)};
}

std::vector<ExperimentOutcome> run_sweep(const ExperimentConfig& base,
                                         const std::string& attack_list) {
  std::vector<AttackKind> kinds;
  std::stringstream ss(attack_list);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (id == "none") kinds.push_back(AttackKind::kNone);
    else if (id == "ga") kinds.push_back(AttackKind::kListPoison);
    else if (id == "atq") kinds.push_back(AttackKind::kClickPoison);
    else if (id == "attack_reduce") kinds.push_back(AttackKind::kReduceOthers);
    else if (id == "attack_increase")
      kinds.push_back(AttackKind::kPromoteTarget);
    else
      throw ConfigError("unknown attack id \"" + id + "\" in sweep list");
  }
  if (kinds.empty()) throw ConfigError("sweep needs at least one attack id");

  std::string root = effective_output_dir(base);
  std::vector<ExperimentOutcome> outcomes;
  for (AttackKind kind : kinds) {
    ExperimentConfig cfg = base;
    cfg.attack = kind;
    // Only parameters meaningful to the variant survive; the rest reset so
    // every variant validates exactly like a standalone config.
    if (kind != AttackKind::kListPoison) cfg.decoy_alphas.clear();
    if (kind == AttackKind::kClickPoison) {
      if (base.attack != AttackKind::kClickPoison || base.t1 < 0) {
        if (cfg.ranker == RankerKind::kBatchRank)
          cfg.t1 = poison_rounds_batchrank(cfg.L, cfg.T);
        else if (cfg.ranker == RankerKind::kTopRank)
          cfg.t1 = poison_rounds_toprank(cfg.L, cfg.K, cfg.T,
                                         1.0 / static_cast<double>(cfg.T),
                                         cfg.toprank_confidence);
        else
          throw ConfigError(
              "sweep: atq needs an explicit T1 in the base config for this "
              "ranker");
      }
    } else {
      cfg.t1 = -1;
    }

    Environment env = resolve_environment(cfg);
    ExperimentResult result = run_repetitions(cfg, env);
    std::string dir =
        (std::filesystem::path(root) / to_string(kind)).string();
    cfg.output_dir = dir;
    emit_results(cfg, env, result, dir);
    outcomes.push_back({std::move(env), std::move(result), std::move(dir)});
  }
  return outcomes;
}

}  // namespace oltr
