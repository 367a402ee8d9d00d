#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oltrlab/attacks.hpp"
#include "oltrlab/click_models.hpp"
#include "oltrlab/config.hpp"

namespace oltr {

using nlohmann::json;

const char* to_string(ModelKind k) {
  switch (k) {
    case ModelKind::kCascade: return "cascade";
    case ModelKind::kPbm: return "pbm";
  }
  return "?";
}

const char* to_string(RankerKind k) {
  switch (k) {
    case RankerKind::kCascadeUcb1: return "cascade_ucb1";
    case RankerKind::kCascadeKlUcb: return "cascade_klucb";
    case RankerKind::kPbmUcb: return "pbm_ucb";
    case RankerKind::kBatchRank: return "batchrank";
    case RankerKind::kTopRank: return "toprank";
  }
  return "?";
}

const char* to_string(AttackKind k) {
  switch (k) {
    case AttackKind::kNone: return "none";
    case AttackKind::kListPoison: return "ga";
    case AttackKind::kClickPoison: return "atq";
    case AttackKind::kReduceOthers: return "attack_reduce";
    case AttackKind::kPromoteTarget: return "attack_increase";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

// Rejects keys outside the allowed set so typos never pass silently.
void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
  if (!obj.is_object()) fail(where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      fail("unknown key \"" + it.key() + "\" in " + where);
}

const json& require(const json& obj, const std::string& where,
                    const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + " is missing \"" + std::string(key) + "\"");
  return *it;
}

std::string get_string(const json& v, const std::string& what) {
  if (!v.is_string()) fail(what + " must be a string");
  return v.get<std::string>();
}

std::int64_t get_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) fail(what + " must be an integer");
  return v.get<std::int64_t>();
}

double get_number(const json& v, const std::string& what) {
  if (!v.is_number()) fail(what + " must be a number");
  return v.get<double>();
}

std::vector<double> get_number_array(const json& v, const std::string& what) {
  if (!v.is_array()) fail(what + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) out.push_back(get_number(e, what + " entry"));
  return out;
}

ModelKind parse_model_kind(const std::string& s) {
  if (s == "cascade") return ModelKind::kCascade;
  if (s == "pbm") return ModelKind::kPbm;
  fail("unknown model.kind \"" + s + "\" (expected cascade | pbm)");
}

RankerKind parse_ranker_kind(const std::string& s) {
  if (s == "cascade_ucb1") return RankerKind::kCascadeUcb1;
  if (s == "cascade_klucb") return RankerKind::kCascadeKlUcb;
  if (s == "pbm_ucb") return RankerKind::kPbmUcb;
  if (s == "batchrank") return RankerKind::kBatchRank;
  if (s == "toprank") return RankerKind::kTopRank;
  fail("unknown ranker \"" + s +
       "\" (expected cascade_ucb1 | cascade_klucb | pbm_ucb | batchrank | "
       "toprank)");
}

AttackKind parse_attack_kind(const std::string& s) {
  if (s == "none") return AttackKind::kNone;
  if (s == "ga") return AttackKind::kListPoison;
  if (s == "atq") return AttackKind::kClickPoison;
  if (s == "attack_reduce") return AttackKind::kReduceOthers;
  if (s == "attack_increase") return AttackKind::kPromoteTarget;
  fail("unknown attack.kind \"" + s +
       "\" (expected none | ga | atq | attack_reduce | attack_increase)");
}

void parse_env(const json& v, ExperimentConfig& cfg) {
  check_keys(v, "env", {"L", "K", "T", "alphas"});
  std::int64_t L = get_int(require(v, "env", "L"), "env.L");
  std::int64_t K = get_int(require(v, "env", "K"), "env.K");
  cfg.T = get_int(require(v, "env", "T"), "env.T");
  if (L < 1) fail("env.L must be at least 1");
  if (K < 1) fail("env.K must be at least 1");
  if (K > L) fail("env.K exceeds env.L: cannot rank more slots than items");
  if (cfg.T < 1) fail("env.T must be at least 1");
  cfg.L = static_cast<int>(L);
  cfg.K = static_cast<int>(K);
  const json& alphas = require(v, "env", "alphas");
  std::string s = get_string(alphas, "env.alphas");
  if (s == "uniform")
    cfg.alphas_path.clear();
  else if (s.empty())
    fail("env.alphas must be \"uniform\" or a file path");
  else
    cfg.alphas_path = s;
}

void parse_seeds(const json& v, ExperimentConfig& cfg) {
  if (v.is_array()) {
    if (v.empty()) fail("seeds array must not be empty");
    std::set<std::uint64_t> seen;
    for (const auto& e : v) {
      std::uint64_t s;
      if (e.is_number_unsigned()) {
        s = e.get<std::uint64_t>();
      } else if (e.is_number_integer() && e.get<std::int64_t>() >= 0) {
        s = static_cast<std::uint64_t>(e.get<std::int64_t>());
      } else {
        fail("seeds entries must be non-negative integers");
      }
      if (!seen.insert(s).second)
        fail("duplicate seed " + std::to_string(s));
      cfg.seeds.push_back(s);
    }
    return;
  }
  check_keys(v, "seeds", {"count", "base"});
  std::int64_t count = get_int(require(v, "seeds", "count"), "seeds.count");
  std::int64_t base = get_int(require(v, "seeds", "base"), "seeds.base");
  if (count < 1) fail("seeds.count must be at least 1");
  if (base < 0) fail("seeds.base must be non-negative");
  for (std::int64_t i = 0; i < count; ++i)
    cfg.seeds.push_back(static_cast<std::uint64_t>(base + i));
}

void parse_attack(const json& v, ExperimentConfig& cfg) {
  check_keys(v, "attack", {"kind", "params"});
  cfg.attack =
      parse_attack_kind(get_string(require(v, "attack", "kind"), "attack.kind"));
  json params = v.value("params", json::object());

  std::set<std::string> allowed;
  switch (cfg.attack) {
    case AttackKind::kNone: allowed = {}; break;
    case AttackKind::kListPoison: allowed = {"target", "aux_alphas"}; break;
    case AttackKind::kClickPoison: allowed = {"target", "T1"}; break;
    case AttackKind::kReduceOthers:
    case AttackKind::kPromoteTarget: allowed = {"target", "N"}; break;
  }
  check_keys(params, "attack.params", allowed);

  if (params.contains("target")) {
    const json& t = params["target"];
    if (t.is_string()) {
      if (t.get<std::string>() != "random_suboptimal")
        fail("attack.params.target must be an item index or "
             "\"random_suboptimal\"");
      cfg.target = -1;
    } else {
      std::int64_t id = get_int(t, "attack.params.target");
      if (id < 0 || id >= cfg.L)
        fail("attack.params.target out of range [0, L)");
      cfg.target = static_cast<ItemId>(id);
    }
  }

  if (cfg.attack == AttackKind::kClickPoison) {
    const json& t1 = require(params, "attack.params", "T1");
    if (t1.is_string()) {
      if (t1.get<std::string>() != "auto")
        fail("attack.params.T1 must be an integer or \"auto\"");
      if (cfg.ranker == RankerKind::kBatchRank)
        cfg.t1 = poison_rounds_batchrank(cfg.L, cfg.T);
      else if (cfg.ranker == RankerKind::kTopRank)
        cfg.t1 = poison_rounds_toprank(cfg.L, cfg.K, cfg.T,
                                       1.0 / static_cast<double>(cfg.T),
                                       cfg.toprank_confidence);
      else
        fail("attack.params.T1 \"auto\" has a calculator only for batchrank "
             "and toprank");
    } else {
      cfg.t1 = get_int(t1, "attack.params.T1");
      if (cfg.t1 < 0) fail("attack.params.T1 must be non-negative");
    }
  }

  if (cfg.attack == AttackKind::kReduceOthers ||
      cfg.attack == AttackKind::kPromoteTarget) {
    if (params.contains("N")) {
      cfg.baseline_rounds = get_int(params["N"], "attack.params.N");
      if (cfg.baseline_rounds < 0) fail("attack.params.N must be non-negative");
    }
  }

  if (cfg.attack == AttackKind::kListPoison && params.contains("aux_alphas")) {
    cfg.decoy_alphas =
        get_number_array(params["aux_alphas"], "attack.params.aux_alphas");
    if (static_cast<int>(cfg.decoy_alphas.size()) != 2 * cfg.K - 1)
      fail("attack.params.aux_alphas must list exactly 2K-1 values");
    double prev = std::numeric_limits<double>::infinity();
    for (double a : cfg.decoy_alphas) {
      if (!(a > 0.0 && a < 1.0))
        fail("attack.params.aux_alphas values must lie in (0,1)");
      if (!(a < prev))
        fail("attack.params.aux_alphas must strictly decrease");
      prev = a;
    }
  }
}

void parse_output(const json& v, ExperimentConfig& cfg) {
  check_keys(v, "output", {"dir", "cadence", "per_run", "log_rounds"});
  cfg.output_dir = get_string(require(v, "output", "dir"), "output.dir");
  if (cfg.output_dir.empty()) fail("output.dir must not be empty");
  if (v.contains("cadence")) {
    cfg.cadence = get_int(v["cadence"], "output.cadence");
    if (cfg.cadence < 1) fail("output.cadence must be at least 1");
  }
  if (v.contains("per_run")) {
    if (!v["per_run"].is_boolean()) fail("output.per_run must be a boolean");
    cfg.per_run = v["per_run"].get<bool>();
  }
  if (v.contains("log_rounds")) {
    if (!v["log_rounds"].is_boolean())
      fail("output.log_rounds must be a boolean");
    cfg.log_rounds = v["log_rounds"].get<bool>();
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(doc, "config",
             {"experiment", "model", "ranker", "attack", "env", "seeds",
              "output"});

  ExperimentConfig cfg;

  const json& experiment = require(doc, "config", "experiment");
  check_keys(experiment, "experiment", {"name"});
  cfg.name = get_string(require(experiment, "experiment", "name"),
                        "experiment.name");
  if (cfg.name.empty()) fail("experiment.name must not be empty");

  parse_env(require(doc, "config", "env"), cfg);

  const json& model = require(doc, "config", "model");
  check_keys(model, "model", {"kind", "chi"});
  cfg.model = parse_model_kind(
      get_string(require(model, "model", "kind"), "model.kind"));
  if (model.contains("chi")) {
    if (cfg.model != ModelKind::kPbm)
      fail("model.chi is only meaningful for the pbm model");
    cfg.chi = get_number_array(model["chi"], "model.chi");
    if (static_cast<int>(cfg.chi.size()) != cfg.K)
      fail("model.chi must list exactly K values");
  } else if (cfg.model == ModelKind::kPbm) {
    cfg.chi = PositionBasedModel::reciprocal_rank_chi(cfg.K);
  }
  if (cfg.model == ModelKind::kPbm) {
    try {
      PositionBasedModel probe(cfg.chi);
    } catch (const std::exception& e) {
      fail(std::string("model.chi invalid: ") + e.what());
    }
  }

  cfg.ranker = parse_ranker_kind(
      get_string(require(doc, "config", "ranker"), "ranker"));
  if ((cfg.ranker == RankerKind::kCascadeUcb1 ||
       cfg.ranker == RankerKind::kCascadeKlUcb) &&
      cfg.model != ModelKind::kCascade)
    fail("ranker " + std::string(to_string(cfg.ranker)) +
         " requires model.kind = cascade");
  if (cfg.ranker == RankerKind::kPbmUcb && cfg.model != ModelKind::kPbm)
    fail("ranker pbm_ucb requires model.kind = pbm");

  parse_attack(require(doc, "config", "attack"), cfg);
  parse_seeds(require(doc, "config", "seeds"), cfg);
  parse_output(require(doc, "config", "output"), cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string render_config(const ExperimentConfig& cfg) {
  json doc;
  doc["experiment"]["name"] = cfg.name;
  doc["model"]["kind"] = to_string(cfg.model);
  if (cfg.model == ModelKind::kPbm) doc["model"]["chi"] = cfg.chi;
  doc["ranker"] = to_string(cfg.ranker);
  doc["attack"]["kind"] = to_string(cfg.attack);
  json params = json::object();
  if (cfg.attack != AttackKind::kNone) {
    if (cfg.target >= 0)
      params["target"] = cfg.target;
    else
      params["target"] = "random_suboptimal";
  }
  if (cfg.attack == AttackKind::kClickPoison) params["T1"] = cfg.t1;
  if (cfg.attack == AttackKind::kReduceOthers ||
      cfg.attack == AttackKind::kPromoteTarget)
    params["N"] = cfg.baseline_rounds;
  if (cfg.attack == AttackKind::kListPoison && !cfg.decoy_alphas.empty())
    params["aux_alphas"] = cfg.decoy_alphas;
  if (!params.empty()) doc["attack"]["params"] = params;
  doc["env"]["L"] = cfg.L;
  doc["env"]["K"] = cfg.K;
  doc["env"]["T"] = cfg.T;
  doc["env"]["alphas"] =
      cfg.alphas_path.empty() ? std::string("uniform") : cfg.alphas_path;
  doc["seeds"] = cfg.seeds;
  doc["output"]["dir"] = cfg.output_dir;
  doc["output"]["cadence"] = cfg.cadence;
  doc["output"]["per_run"] = cfg.per_run;
  doc["output"]["log_rounds"] = cfg.log_rounds;
  return doc.dump(2) + "\n";
}

}  // namespace oltr
