#pragma once

#include "oltrlab/click_models.hpp"
#include "oltrlab/types.hpp"

namespace oltr {

// The catalog's best K-list under `model`: top-K catalog items by
// attractiveness in descending order. Auxiliary items are deliberately
// excluded — the reference point is the clean environment, before any
// attacker touched it.
RankedList optimal_catalog_list(const ClickModel& model,
                                const AttractionTable& table, int K);

// Expected clicks of that list.
double optimal_expected_clicks(const ClickModel& model,
                               const AttractionTable& table, int K);

// Per-round regret of a displayed list, clamped at zero: a display can never
// earn negative regret even if rounding says otherwise.
double round_regret(const ClickModel& model, const AttractionTable& table,
                    const RankedList& displayed, double optimal_value);

}  // namespace oltr
