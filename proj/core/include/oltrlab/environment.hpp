#pragma once

#include "oltrlab/config.hpp"
#include "oltrlab/rng.hpp"
#include "oltrlab/types.hpp"

namespace oltr {

// One concrete world for an experiment: the attractiveness table (with the
// list-poisoning decoys appended when that attack is configured) and the
// resolved target item. Shared by every seed of the experiment.
struct Environment {
  AttractionTable table;
  ItemId target = -1;  // -1 only when no attack needs one
};

// L independent uniform(0,1) attractiveness draws; exact ties redrawn.
AttractionTable generate_synthetic_alphas(int L, RngStream& rng);

// Parses `item_index,alpha` lines ('#' comments and blank lines skipped).
// Indices 0..L-1 must each appear exactly once; duplicate alpha values are
// rejected because a unique optimal list is part of the experiment contract.
AttractionTable parse_attractiveness_file(const std::string& path, int L);

// Builds the environment from the config. All randomness (the uniform table
// draw, the random-suboptimal target) comes from a stream derived from the
// first seed, so the environment is a pure function of the config.
Environment resolve_environment(const ExperimentConfig& cfg);

}  // namespace oltr
