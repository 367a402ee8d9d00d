// Command-line front end: run experiments, validate configs, print the
// click-poisoning horizon calculators, and sweep one environment across
// several attacks.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "oltrlab/attacks.hpp"
#include "oltrlab/config.hpp"
#include "oltrlab/driver.hpp"

namespace {

int count_failed(const oltr::ExperimentResult& result) {
  int failed = 0;
  for (const auto& run : result.runs)
    if (run.metrics.failed) ++failed;
  return failed;
}

void report_outcome(const oltr::ExperimentOutcome& outcome) {
  int failed = count_failed(outcome.result);
  std::cout << "wrote " << outcome.output_dir << " ("
            << outcome.result.runs.size() << " runs, " << failed
            << " failed)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisoning-attack laboratory for online learning-to-rank "
               "bandits"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run_cmd =
      app.add_subcommand("run", "Execute a config and emit result files");
  run_cmd->add_option("config", config_path, "experiment config (JSON)")
      ->required();

  auto* validate_cmd =
      app.add_subcommand("validate", "Schema-check a config without running");
  validate_cmd->add_option("config", config_path, "experiment config (JSON)")
      ->required();

  std::string ranker_id;
  int L = 0;
  int K = 0;
  std::int64_t T = 0;
  double delta = -1.0;
  double confidence = 3.43;
  auto* thresholds_cmd = app.add_subcommand(
      "thresholds",
      "Print the click-poisoning horizon for a batch or tournament ranker");
  thresholds_cmd->add_option("--ranker", ranker_id, "batchrank | toprank")
      ->required();
  thresholds_cmd->add_option("-L", L, "catalog size")->required();
  thresholds_cmd->add_option("-K", K, "list length (toprank only)");
  thresholds_cmd->add_option("-T", T, "horizon")->required();
  thresholds_cmd->add_option("--delta", delta,
                             "tournament failure rate (default 1/T)");
  thresholds_cmd->add_option("--c", confidence,
                             "tournament confidence constant");

  std::string attack_list;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Run the same environment against several attacks");
  sweep_cmd->add_option("config", config_path, "experiment config (JSON)")
      ->required();
  sweep_cmd
      ->add_option("--attacks", attack_list,
                   "comma-separated attack ids, e.g. ga,atq,none")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      report_outcome(oltr::run_experiment(oltr::load_config(config_path)));
    } else if (*validate_cmd) {
      oltr::load_config(config_path);
      std::cout << "ok\n";
    } else if (*thresholds_cmd) {
      if (ranker_id == "batchrank") {
        std::cout << oltr::poison_rounds_batchrank(L, T) << "\n";
      } else if (ranker_id == "toprank") {
        if (K <= 0)
          throw oltr::ConfigError("thresholds: toprank needs -K");
        if (delta <= 0.0) delta = 1.0 / static_cast<double>(T);
        std::cout << oltr::poison_rounds_toprank(L, K, T, delta, confidence)
                  << "\n";
      } else {
        throw oltr::ConfigError("no click-poisoning horizon is defined for "
                                "ranker \"" +
                                ranker_id + "\"");
      }
    } else if (*sweep_cmd) {
      for (const auto& outcome :
           oltr::run_sweep(oltr::load_config(config_path), attack_list))
        report_outcome(outcome);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
