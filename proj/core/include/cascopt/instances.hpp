// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "cascopt/cascade.hpp"
#include "cascopt/graph.hpp"

namespace cascopt {

// The canonical greedy trap: four unit-cost actions off one free source.
// a0 and a1 each pay 2 immediately, a2 pays 1, and a3 pays c but only
// through a2's node. At budget 2 the greedy picks {a0, a1} for 4 while the
// optimum {a2, a3} is worth c + 1. All edge probabilities are 1; the
// budget is left at 0 for the caller to set.
Instance figure2(uint32_t c);

struct SpatialParams {
    uint32_t n_patches = 100;
    uint32_t n_parcels = 20;
    double width = 30000.0;  // square side, meters
    double occupancy_rate = 0.5;
    double conserved_fraction = 0.25;
    Kernel kernel;
    double extinction = 0.29;
    int horizon = 10;
    double cost_base = 1.0;  // parcel cost = base * patch_count * (1 +/- 20% noise)
    uint64_t seed = 1;
};

// Patches placed uniformly at random in a square, grouped into spatially
// coherent parcels by grid-bucket order. A cluster of parcels around a
// seeded anchor is conserved and its patches seeded with the occupied
// population.
MetapopSpec spatial_metapop(const SpatialParams& params);

// Re-labels conservation so that a large free block sits far from the
// occupied patches and everything in between is priced: the only way to
// the reservoir is to buy a corridor. Dispersal, horizon and geometry are
// untouched.
MetapopSpec distant_reservoir(const MetapopSpec& spec, uint64_t seed,
                              double reservoir_fraction = 0.25);

}  // namespace cascopt
