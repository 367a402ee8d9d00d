#include "oltrlab/harness.hpp"

#include <cmath>

#include "oltrlab/batch_rank.hpp"
#include "oltrlab/cascade_ucb.hpp"
#include "oltrlab/kl_bounds.hpp"
#include "oltrlab/pbm_ucb.hpp"
#include "oltrlab/regret.hpp"
#include "oltrlab/top_rank.hpp"

namespace oltr {

std::unique_ptr<ClickModel> make_model(const ExperimentConfig& cfg) {
  if (cfg.model == ModelKind::kCascade)
    return std::make_unique<CascadeModel>();
  return std::make_unique<PositionBasedModel>(cfg.chi);
}

std::unique_ptr<Ranker> make_ranker(const ExperimentConfig& cfg,
                                    const Environment& env, RngStream& rng) {
  int universe = env.table.total_size();
  switch (cfg.ranker) {
    case RankerKind::kCascadeUcb1:
      return std::make_unique<CascadeUcb1>(universe, cfg.K, cfg.T, rng);
    case RankerKind::kCascadeKlUcb:
      return std::make_unique<CascadeKlUcb>(universe, cfg.K, cfg.T, rng);
    case RankerKind::kPbmUcb:
      return std::make_unique<PbmUcb>(universe, cfg.K, cfg.T, cfg.chi, rng);
    case RankerKind::kBatchRank:
      return std::make_unique<BatchRank>(universe, cfg.K, cfg.T, rng);
    case RankerKind::kTopRank:
      return std::make_unique<TopRank>(universe, cfg.K, cfg.T,
                                       cfg.toprank_confidence, rng);
  }
  throw std::logic_error("unhandled ranker kind");
}

std::unique_ptr<Attacker> make_attacker(const ExperimentConfig& cfg,
                                        const Environment& env) {
  switch (cfg.attack) {
    case AttackKind::kNone:
      return std::make_unique<NullAttacker>(cfg.K);
    case AttackKind::kListPoison:
      return std::make_unique<ListPoisonAttack>(env.table, env.target, cfg.K);
    case AttackKind::kClickPoison:
      return std::make_unique<ClickPoisonAttack>(env.target, cfg.t1, cfg.K);
    case AttackKind::kReduceOthers:
      return std::make_unique<SuppressOthersAttack>(env.target,
                                                    cfg.baseline_rounds, cfg.K);
    case AttackKind::kPromoteTarget:
      return std::make_unique<PromoteTargetAttack>(env.target,
                                                   cfg.baseline_rounds, cfg.K);
  }
  throw std::logic_error("unhandled attack kind");
}

RunOutput run_one(const ExperimentConfig& cfg, const Environment& env,
                  std::uint64_t seed) {
  RngStream rng(seed);
  auto model = make_model(cfg);
  auto ranker = make_ranker(cfg, env, rng);
  auto attacker = make_attacker(cfg, env);

  int total = env.table.total_size();
  double best = optimal_expected_clicks(*model, env.table, cfg.K);
  std::vector<std::uint8_t> pledged(static_cast<size_t>(total), 0);
  for (ItemId a : attacker->protected_items())
    pledged[static_cast<size_t>(a)] = 1;

  RunOutput out;
  out.metrics.seed = seed;
  std::int64_t first_count = 0;
  double regret_total = 0.0;
  double prev_cost = 0.0;

  for (std::int64_t t = 1; t <= cfg.T; ++t) {
    RankedList proposed = ranker->propose(t);
    proposed.validate(env.table);
    RankedList displayed = attacker->perturb_list(t, proposed);
    displayed.validate(env.table);
    for (int k = 0; k < proposed.size(); ++k)
      if (pledged[static_cast<size_t>(proposed.at(k))] &&
          displayed.at(k) != proposed.at(k))
        out.audit.pledge_violated = true;

    ClickVector observed = model->sample(displayed, env.table, rng);

    // The user clicked positions; the ranker believes the positions still
    // hold its own items, so feedback rides home on the proposed ids.
    ClickVector remapped(total);
    for (int k = 0; k < proposed.size(); ++k)
      if (observed.clicked(displayed.at(k)))
        remapped.set(proposed.at(k), true);

    ClickVector forwarded = attacker->perturb_clicks(t, proposed, remapped);
    if (!forwarded.valid_for(proposed))
      throw std::logic_error("forwarded clicks reference unshown items");
    out.audit.max_round_clicks =
        std::max(out.audit.max_round_clicks, forwarded.total_clicks());

    double cost = attacker->total_cost();
    std::int64_t quiet = attacker->quiet_after();
    if (quiet >= 0 && t > quiet && cost > prev_cost)
      out.audit.quiet_violated = true;
    prev_cost = cost;

    ranker->update(t, proposed, forwarded);

    if (proposed.at(0) == env.target) ++first_count;
    regret_total += round_regret(*model, env.table, displayed, best);

    bool broke = ranker->failed();
    if (cfg.log_rounds)
      out.rounds.push_back({t, first_count, cost, regret_total});
    if (t == 1 || t % cfg.cadence == 0 || t == cfg.T || broke)
      out.metrics.push({t, first_count, cost, regret_total});
    if (broke) {
      out.metrics.failed = true;
      out.metrics.failed_at = t;
      out.metrics.failure_reason = ranker->failure_reason();
      break;
    }
  }
  return out;
}

ExperimentResult run_repetitions(const ExperimentConfig& cfg,
                                 const Environment& env) {
  ExperimentResult result;
  result.runs.reserve(cfg.seeds.size());
  for (std::uint64_t seed : cfg.seeds)
    result.runs.push_back(run_one(cfg, env, seed));

  std::vector<RunMetrics> traces;
  traces.reserve(result.runs.size());
  for (const RunOutput& r : result.runs) traces.push_back(r.metrics);
  bool any_ok = false;
  for (const RunMetrics& m : traces) any_ok |= !m.failed;
  if (any_ok) result.curve = aggregate(traces);
  return result;
}

double promotion_bound(const AttractionTable& table, ItemId target, int K,
                       std::int64_t T) {
  int L = table.catalog_size();
  if (table.total_size() != L + 2 * K - 1)
    throw std::invalid_argument("table must carry exactly 2K-1 decoys");
  if (target < 0 || target >= L)
    throw std::invalid_argument("target must be a catalog item");
  double log_T = std::log(static_cast<double>(T));
  double displaced = 0.0;
  auto term = [&](double gap) {
    if (!(gap > 0.0))
      throw std::invalid_argument(
          "target must be strictly more attractive than every decoy");
    return 3.0 + 81.0 * log_T / (gap * gap);
  };
  // The K-1 promoted decoys each cost their own gap; the remaining L+K-1
  // items are all observed at or below the first substitute's level.
  for (int rank = 1; rank <= K - 1; ++rank)
    displaced += term(table.alpha(target) - table.alpha(L + rank - 1));
  displaced += static_cast<double>(L + K - 1) *
               term(table.alpha(target) - table.alpha(L + K - 1));
  return static_cast<double>(T) - displaced;
}

}  // namespace oltr
