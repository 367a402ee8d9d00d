// Microbenchmarks for the hot paths: one simulated round per ranker, click
// sampling, and the KL bound bisection.

#include <benchmark/benchmark.h>

#include "oltrlab/click_models.hpp"
#include "oltrlab/config.hpp"
#include "oltrlab/environment.hpp"
#include "oltrlab/harness.hpp"
#include "oltrlab/kl_bounds.hpp"
#include "oltrlab/ranker.hpp"
#include "oltrlab/rng.hpp"

namespace {

oltr::ExperimentConfig desk_config(oltr::RankerKind ranker,
                                   oltr::ModelKind model) {
  oltr::ExperimentConfig cfg;
  cfg.name = "bench";
  cfg.model = model;
  if (model == oltr::ModelKind::kPbm)
    cfg.chi = oltr::PositionBasedModel::reciprocal_rank_chi(5);
  cfg.ranker = ranker;
  cfg.L = 50;
  cfg.K = 5;
  cfg.T = 100000;
  cfg.seeds = {1};
  return cfg;
}

void run_rounds(benchmark::State& state, oltr::RankerKind kind,
                oltr::ModelKind model_kind) {
  auto cfg = desk_config(kind, model_kind);
  auto env = oltr::resolve_environment(cfg);
  auto model = oltr::make_model(cfg);
  oltr::RngStream rng(7);
  auto ranker = oltr::make_ranker(cfg, env, rng);
  std::int64_t t = 0;
  for (auto _ : state) {
    ++t;
    auto list = ranker->propose(t);
    auto clicks = model->sample(list, env.table, rng);
    ranker->update(t, list, clicks);
    benchmark::DoNotOptimize(clicks.total_clicks());
  }
}

void BM_CascadeUcb1Round(benchmark::State& state) {
  run_rounds(state, oltr::RankerKind::kCascadeUcb1, oltr::ModelKind::kCascade);
}
void BM_CascadeKlUcbRound(benchmark::State& state) {
  run_rounds(state, oltr::RankerKind::kCascadeKlUcb,
             oltr::ModelKind::kCascade);
}
void BM_PbmUcbRound(benchmark::State& state) {
  run_rounds(state, oltr::RankerKind::kPbmUcb, oltr::ModelKind::kPbm);
}
void BM_BatchRankRound(benchmark::State& state) {
  run_rounds(state, oltr::RankerKind::kBatchRank, oltr::ModelKind::kCascade);
}
void BM_TopRankRound(benchmark::State& state) {
  run_rounds(state, oltr::RankerKind::kTopRank, oltr::ModelKind::kCascade);
}

void BM_CascadeSample(benchmark::State& state) {
  oltr::RngStream rng(11);
  auto table = oltr::generate_synthetic_alphas(50, rng);
  oltr::CascadeModel model;
  oltr::RankedList list({0, 1, 2, 3, 4});
  for (auto _ : state) {
    auto clicks = model.sample(list, table, rng);
    benchmark::DoNotOptimize(clicks.total_clicks());
  }
}

void BM_KlUpperBound(benchmark::State& state) {
  double budget = oltr::exploration_budget(100000);
  double p = 0.0;
  for (auto _ : state) {
    p += 0.001;
    if (p > 0.999) p = 0.0;
    benchmark::DoNotOptimize(oltr::kl_upper_bound(p, 185, budget));
  }
}

}  // namespace

BENCHMARK(BM_CascadeUcb1Round);
BENCHMARK(BM_CascadeKlUcbRound);
BENCHMARK(BM_PbmUcbRound);
BENCHMARK(BM_BatchRankRound);
BENCHMARK(BM_TopRankRound);
BENCHMARK(BM_CascadeSample);
BENCHMARK(BM_KlUpperBound);

BENCHMARK_MAIN();
