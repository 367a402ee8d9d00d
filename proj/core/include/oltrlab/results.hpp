#pragma once

#include <string>
#include <vector>

#include "oltrlab/harness.hpp"

namespace oltr {

// Plain-text renderers; emission composes these and writes files. Numbers
// use 6 significant digits so output is stable across platforms.
std::string render_aggregate_csv(const std::vector<AggregateRow>& curve);
std::string render_run_csv(const std::vector<Checkpoint>& points);
std::string render_summary_json(const ExperimentConfig& cfg,
                                const Environment& env,
                                const ExperimentResult& result);

// Minimal self-contained line chart: mean polyline with a ±1 std band.
struct ChartSeries {
  std::string title;
  std::vector<double> x, mean, stddev;
};
std::string render_band_chart(const ChartSeries& series);

// Writes aggregate.csv, summary.json, the two charts, and (per config flags)
// run_<seed>.csv / rounds_<seed>.csv under `dir`. All contents are composed
// in memory first; if any write fails, files from this emission are removed
// so a broken directory never holds a partial result set.
void emit_results(const ExperimentConfig& cfg, const Environment& env,
                  const ExperimentResult& result, const std::string& dir);

}  // namespace oltr
