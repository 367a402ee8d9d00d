#include "oltrlab/metrics.hpp"

namespace oltr {

void RunMetrics::push(const Checkpoint& c) {
  if (!checkpoints.empty()) {
    const Checkpoint& prev = checkpoints.back();
    if (c.t <= prev.t) throw std::logic_error("checkpoint times must increase");
    if (c.n_target_first < prev.n_target_first || c.cost < prev.cost ||
        c.regret < prev.regret)
      throw std::logic_error("cumulative metrics decreased");
  }
  checkpoints.push_back(c);
}

namespace {

struct Moments {
  double mean = 0.0, var = 0.0;
};

// Population variance (divides by n): one run yields variance zero.
Moments moments(const std::vector<double>& xs) {
  Moments m;
  double n = static_cast<double>(xs.size());
  for (double x : xs) m.mean += x;
  m.mean /= n;
  for (double x : xs) m.var += (x - m.mean) * (x - m.mean);
  m.var /= n;
  return m;
}

}  // namespace

std::vector<AggregateRow> aggregate(const std::vector<RunMetrics>& runs) {
  std::vector<const RunMetrics*> ok;
  int failed = 0;
  for (const RunMetrics& r : runs) {
    if (r.failed)
      ++failed;
    else
      ok.push_back(&r);
  }
  if (ok.empty()) throw std::runtime_error("no successful runs to aggregate");

  size_t rows = ok.front()->checkpoints.size();
  for (const RunMetrics* r : ok)
    if (r->checkpoints.size() != rows)
      throw std::logic_error("successful runs disagree on checkpoint count");

  std::vector<AggregateRow> out(rows);
  std::vector<double> nt(ok.size()), cost(ok.size()), regret(ok.size());
  for (size_t i = 0; i < rows; ++i) {
    std::int64_t t = ok.front()->checkpoints[i].t;
    for (size_t j = 0; j < ok.size(); ++j) {
      const Checkpoint& c = ok[j]->checkpoints[i];
      if (c.t != t)
        throw std::logic_error("successful runs disagree on checkpoint times");
      nt[j] = static_cast<double>(c.n_target_first);
      cost[j] = c.cost;
      regret[j] = c.regret;
    }
    AggregateRow& row = out[i];
    row.t = t;
    Moments m = moments(nt);
    row.n_target_first_mean = m.mean;
    row.n_target_first_var = m.var;
    m = moments(cost);
    row.cost_mean = m.mean;
    row.cost_var = m.var;
    m = moments(regret);
    row.regret_mean = m.mean;
    row.regret_var = m.var;
    row.runs_ok = static_cast<int>(ok.size());
    row.runs_failed = failed;
  }
  return out;
}

}  // namespace oltr
