#include "oltrlab/environment.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "oltrlab/attacks.hpp"

namespace oltr {

namespace {

constexpr std::uint64_t kEnvironmentStream = 0x656e76;  // decorrelation tag

}  // namespace

AttractionTable generate_synthetic_alphas(int L, RngStream& rng) {
  if (L < 1) throw std::invalid_argument("need at least one item");
  std::vector<double> alphas;
  std::set<double> seen;
  alphas.reserve(static_cast<size_t>(L));
  while (static_cast<int>(alphas.size()) < L) {
    double a = rng.next_double();
    if (a == 0.0 || !seen.insert(a).second) continue;  // redraw exact ties
    alphas.push_back(a);
  }
  return AttractionTable(std::move(alphas));
}

AttractionTable parse_attractiveness_file(const std::string& path, int L) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open attractiveness file " + path);
  std::vector<double> alphas(static_cast<size_t>(L), -1.0);
  std::vector<bool> present(static_cast<size_t>(L), false);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream row(line);
    long long index;
    char comma;
    double alpha;
    if (!(row >> index >> comma >> alpha) || comma != ',')
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected `item_index,alpha`");
    std::string rest;
    if (row >> rest)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": trailing content after alpha");
    if (index < 0 || index >= L)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": item index outside 0.." + std::to_string(L - 1));
    if (present[static_cast<size_t>(index)])
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": duplicate item index " + std::to_string(index));
    if (!(alpha >= 0.0 && alpha <= 1.0))
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": alpha outside [0,1]");
    present[static_cast<size_t>(index)] = true;
    alphas[static_cast<size_t>(index)] = alpha;
  }
  for (int i = 0; i < L; ++i)
    if (!present[static_cast<size_t>(i)])
      throw ConfigError(path + ": missing item index " + std::to_string(i));
  try {
    return AttractionTable(std::move(alphas));
  } catch (const std::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

Environment resolve_environment(const ExperimentConfig& cfg) {
  RngStream rng(cfg.seeds.front(), kEnvironmentStream);

  AttractionTable catalog =
      cfg.alphas_path.empty()
          ? generate_synthetic_alphas(cfg.L, rng)
          : parse_attractiveness_file(cfg.alphas_path, cfg.L);

  // Uniform over the items ranked K+1..L by attractiveness: the target is
  // guaranteed to sit outside every optimal list. Drawn even for no-attack
  // runs so an attack sweep shares one environment across its variants.
  ItemId target = cfg.target;
  if (target < 0 && cfg.L > cfg.K) {
    std::vector<ItemId> order(static_cast<size_t>(cfg.L));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
      return catalog.alpha(a) > catalog.alpha(b);
    });
    size_t pick = static_cast<size_t>(cfg.K) +
                  static_cast<size_t>(rng.next_below(
                      static_cast<std::uint64_t>(cfg.L - cfg.K)));
    target = order[pick];
  }
  if (target < 0 && cfg.attack != AttackKind::kNone)
    throw ConfigError(
        "random_suboptimal target needs L > K; give an explicit target");

  if (cfg.attack != AttackKind::kListPoison)
    return Environment{std::move(catalog), target};

  std::vector<double> decoys =
      cfg.decoy_alphas.empty()
          ? default_decoy_alphas(catalog.min_catalog_alpha(), cfg.K)
          : cfg.decoy_alphas;
  try {
    return Environment{catalog.augmented(decoys), target};
  } catch (const std::exception& e) {
    throw ConfigError(std::string("aux_alphas rejected: ") + e.what());
  }
}

}  // namespace oltr
