#include "oltrlab/results.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

namespace oltr {

namespace {

using nlohmann::json;

std::string num6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

constexpr char kAggregateHeader[] =
    "t,n_target_first_mean,n_target_first_var,cost_mean,cost_var,"
    "regret_mean,regret_var,runs_ok,runs_failed";

}  // namespace

std::string render_aggregate_csv(const std::vector<AggregateRow>& curve) {
  std::string out = kAggregateHeader;
  out += '\n';
  for (const AggregateRow& r : curve) {
    out += std::to_string(r.t);
    out += ',';
    out += num6(r.n_target_first_mean);
    out += ',';
    out += num6(r.n_target_first_var);
    out += ',';
    out += num6(r.cost_mean);
    out += ',';
    out += num6(r.cost_var);
    out += ',';
    out += num6(r.regret_mean);
    out += ',';
    out += num6(r.regret_var);
    out += ',';
    out += std::to_string(r.runs_ok);
    out += ',';
    out += std::to_string(r.runs_failed);
    out += '\n';
  }
  return out;
}

std::string render_run_csv(const std::vector<Checkpoint>& points) {
  std::string out = "t,n_target_first,cost,regret\n";
  for (const Checkpoint& c : points) {
    out += std::to_string(c.t);
    out += ',';
    out += std::to_string(c.n_target_first);
    out += ',';
    out += num6(c.cost);
    out += ',';
    out += num6(c.regret);
    out += '\n';
  }
  return out;
}

std::string render_summary_json(const ExperimentConfig& cfg,
                                const Environment& env,
                                const ExperimentResult& result) {
  json doc;
  doc["experiment"] = cfg.name;
  doc["config"] = json::parse(render_config(cfg));

  json environment;
  std::vector<double> catalog(env.table.alphas().begin(),
                              env.table.alphas().begin() +
                                  env.table.catalog_size());
  environment["catalog_alphas"] = catalog;
  if (env.table.has_auxiliary())
    environment["decoy_alphas"] = std::vector<double>(
        env.table.alphas().begin() + env.table.catalog_size(),
        env.table.alphas().end());
  if (env.target >= 0) environment["target"] = env.target;
  if (cfg.t1 >= 0) environment["t1"] = cfg.t1;
  doc["environment"] = environment;

  int failed = 0;
  json failures = json::array();
  double max_cost = 0.0;
  for (const RunOutput& r : result.runs) {
    if (r.metrics.failed) {
      ++failed;
      failures.push_back({{"seed", r.metrics.seed},
                          {"round", r.metrics.failed_at},
                          {"reason", r.metrics.failure_reason}});
    }
    if (!r.metrics.checkpoints.empty())
      max_cost = std::max(max_cost, r.metrics.checkpoints.back().cost);
  }
  doc["runs"] = {{"ok", static_cast<int>(result.runs.size()) - failed},
                 {"failed", failed},
                 {"failures", failures}};

  if (!result.curve.empty()) {
    const AggregateRow& last = result.curve.back();
    doc["final"] = {{"t", last.t},
                    {"n_target_first_mean", last.n_target_first_mean},
                    {"cost_mean", last.cost_mean},
                    {"regret_mean", last.regret_mean}};
  }

  json verdicts = json::object();
  if (cfg.attack == AttackKind::kClickPoison) {
    std::int64_t required = cfg.T - cfg.t1;
    int satisfying = 0;
    for (const RunOutput& r : result.runs)
      if (!r.metrics.failed && !r.metrics.checkpoints.empty() &&
          r.metrics.checkpoints.back().n_target_first >= required)
        ++satisfying;
    verdicts["target_first_guarantee"] = {
        {"required_rounds", required},
        {"runs_satisfying", satisfying},
        {"runs_total", static_cast<int>(result.runs.size())},
        {"verdict", satisfying == static_cast<int>(result.runs.size())
                        ? "pass"
                        : "fail"}};
    double limit = static_cast<double>(cfg.K) * static_cast<double>(cfg.t1);
    verdicts["cost_budget"] = {
        {"limit", limit},
        {"max_run_cost", max_cost},
        {"verdict", max_cost <= limit ? "pass" : "fail"}};
  } else if (cfg.attack == AttackKind::kListPoison) {
    double bound = promotion_bound(env.table, env.target, cfg.K, cfg.T);
    json entry = {{"value", bound}};
    if (!result.curve.empty()) {
      double mean = result.curve.back().n_target_first_mean;
      entry["empirical_mean"] = mean;
      entry["verdict"] = mean >= bound ? "pass" : "fail";
    } else {
      entry["verdict"] = "no successful runs";
    }
    verdicts["promotion_bound"] = entry;
  } else if (cfg.attack == AttackKind::kReduceOthers ||
             cfg.attack == AttackKind::kPromoteTarget) {
    double limit = static_cast<double>(cfg.K) *
                   static_cast<double>(cfg.baseline_rounds);
    verdicts["cost_budget"] = {
        {"limit", limit},
        {"max_run_cost", max_cost},
        {"verdict", max_cost <= limit ? "pass" : "fail"}};
  }
  doc["verdicts"] = verdicts;
  return doc.dump(2) + "\n";
}

std::string render_band_chart(const ChartSeries& series) {
  const double width = 640, height = 420;
  const double left = 70, right = 610, top = 48, bottom = 380;
  size_t n = series.x.size();

  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  if (n > 0) {
    xmax = series.x.back();
    if (xmax <= xmin) xmax = xmin + 1.0;
    for (size_t i = 0; i < n; ++i) {
      ymin = std::min(ymin, series.mean[i] - series.stddev[i]);
      ymax = std::max(ymax, series.mean[i] + series.stddev[i]);
    }
    if (ymax <= ymin) ymax = ymin + 1.0;
    ymax += 0.05 * (ymax - ymin);
  }
  auto px = [&](double x) {
    return left + (x - xmin) / (xmax - xmin) * (right - left);
  };
  auto py = [&](double y) {
    return bottom - (y - ymin) / (ymax - ymin) * (bottom - top);
  };
  auto point = [&](double x, double y) {
    return num6(px(x)) + "," + num6(py(y)) + " ";
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num6(width) +
         "\" height=\"" + num6(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"320\" y=\"26\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" +
         series.title + "</text>\n";

  if (n > 0) {
    std::string band;
    for (size_t i = 0; i < n; ++i)
      band += point(series.x[i], series.mean[i] + series.stddev[i]);
    for (size_t i = n; i-- > 0;)
      band += point(series.x[i], series.mean[i] - series.stddev[i]);
    svg += "<polygon points=\"" + band +
           "\" fill=\"#4a90d9\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
    std::string line;
    for (size_t i = 0; i < n; ++i) line += point(series.x[i], series.mean[i]);
    svg += "<polyline points=\"" + line +
           "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\"/>\n";
  }

  svg += "<line x1=\"" + num6(left) + "\" y1=\"" + num6(bottom) + "\" x2=\"" +
         num6(right) + "\" y2=\"" + num6(bottom) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + num6(left) + "\" y1=\"" + num6(top) + "\" x2=\"" +
         num6(left) + "\" y2=\"" + num6(bottom) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    double fx = xmin + (xmax - xmin) * i / 4.0;
    double fy = ymin + (ymax - ymin) * i / 4.0;
    svg += "<text x=\"" + num6(px(fx)) + "\" y=\"" + num6(bottom + 16) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           num6(fx) + "</text>\n";
    svg += "<text x=\"" + num6(left - 6) + "\" y=\"" + num6(py(fy) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           num6(fy) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void emit_results(const ExperimentConfig& cfg, const Environment& env,
                  const ExperimentResult& result, const std::string& dir) {
  namespace fs = std::filesystem;

  std::vector<std::pair<std::string, std::string>> files;
  files.emplace_back("aggregate.csv", render_aggregate_csv(result.curve));
  files.emplace_back("summary.json", render_summary_json(cfg, env, result));

  if (!result.curve.empty()) {
    ChartSeries cost{"attack cost (mean +/- 1 std)", {}, {}, {}};
    ChartSeries ntf{"rounds with target first (mean +/- 1 std)", {}, {}, {}};
    for (const AggregateRow& r : result.curve) {
      cost.x.push_back(static_cast<double>(r.t));
      cost.mean.push_back(r.cost_mean);
      cost.stddev.push_back(std::sqrt(r.cost_var));
      ntf.x.push_back(static_cast<double>(r.t));
      ntf.mean.push_back(r.n_target_first_mean);
      ntf.stddev.push_back(std::sqrt(r.n_target_first_var));
    }
    files.emplace_back("cost.svg", render_band_chart(cost));
    files.emplace_back("n_target.svg", render_band_chart(ntf));
  }

  for (const RunOutput& r : result.runs) {
    std::string seed = std::to_string(r.metrics.seed);
    if (cfg.per_run)
      files.emplace_back("run_" + seed + ".csv",
                         render_run_csv(r.metrics.checkpoints));
    if (cfg.log_rounds)
      files.emplace_back("rounds_" + seed + ".csv", render_run_csv(r.rounds));
  }

  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw std::runtime_error("cannot create output directory " + dir + ": " +
                             ec.message());

  std::vector<fs::path> written;
  try {
    for (const auto& [name, content] : files) {
      fs::path path = fs::path(dir) / name;
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open " + path.string());
      out << content;
      out.close();
      if (!out) throw std::runtime_error("write failed for " + path.string());
      written.push_back(path);
    }
  } catch (...) {
    for (const fs::path& p : written) fs::remove(p, ec);
    throw;
  }
}

}  // namespace oltr
