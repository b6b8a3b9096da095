// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cascopt/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cascopt/rng.hpp"

namespace cascopt {

Instance figure2(uint32_t c) {
    if (c < 1) throw std::invalid_argument("figure2: c must be >= 1");
    Instance inst;
    // 0: source; 1,2: a0's targets; 3,4: a1's targets; 5: a2's node;
    // 6..5+c: a3's payoff chain heads.
    inst.n_nodes = 6 + c;
    inst.base.assign(inst.n_nodes, 0);
    inst.base[0] = 1;
    inst.rewards.assign(inst.n_nodes, 1.0);
    inst.rewards[0] = 0.0;
    inst.sources = {0};

    for (NodeId v = 1; v <= 5; ++v) inst.edges.push_back({0, v, 1.0});
    for (uint32_t i = 0; i < c; ++i) inst.edges.push_back({5, 6 + i, 1.0});

    inst.actions.push_back({{1, 2}, 1.0});
    inst.actions.push_back({{3, 4}, 1.0});
    inst.actions.push_back({{5}, 1.0});
    Action a3;
    a3.cost = 1.0;
    for (uint32_t i = 0; i < c; ++i) a3.nodes.push_back(6 + i);
    inst.actions.push_back(std::move(a3));

    inst.budget = 0.0;
    inst.finalize();
    return inst;
}

namespace {

double cost_of_parcel(std::size_t patch_count, double cost_base, uint64_t seed,
                      std::size_t parcel_index) {
    double noise =
        rng::u01(rng::hash3(rng::derive(seed, rng::Stream::costs), parcel_index, 0)) * 0.4 - 0.2;
    return cost_base * static_cast<double>(patch_count) * (1.0 + noise);
}

}  // namespace

MetapopSpec spatial_metapop(const SpatialParams& params) {
    if (params.n_patches < 1) throw std::invalid_argument("spatial_metapop: need patches");
    if (params.n_parcels < 1 || params.n_parcels > params.n_patches) {
        throw std::invalid_argument("spatial_metapop: need 1 <= parcels <= patches");
    }
    if (params.width <= 0.0) throw std::invalid_argument("spatial_metapop: degenerate area");

    MetapopSpec spec;
    spec.kernel = params.kernel;
    spec.horizon = params.horizon;
    spec.extinction.assign(params.n_patches, params.extinction);

    uint64_t geom = rng::derive(params.seed, rng::Stream::geometry);
    spec.patches.resize(params.n_patches);
    for (uint32_t i = 0; i < params.n_patches; ++i) {
        spec.patches[i].x = rng::u01(rng::hash2(geom, 2 * i)) * params.width;
        spec.patches[i].y = rng::u01(rng::hash2(geom, 2 * i + 1)) * params.width;
    }

    // Spatially coherent parcels: order patches by grid bucket (row-major)
    // and chop the order into n_parcels contiguous chunks.
    uint32_t g = static_cast<uint32_t>(std::ceil(std::sqrt(static_cast<double>(params.n_parcels))));
    std::vector<uint32_t> order(params.n_patches);
    std::iota(order.begin(), order.end(), 0);
    auto bucket = [&](uint32_t i) {
        auto cell = [&](double v) {
            uint32_t b = static_cast<uint32_t>(v / params.width * g);
            return std::min(b, g - 1);
        };
        return cell(spec.patches[i].y) * g + cell(spec.patches[i].x);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](uint32_t a, uint32_t b) { return bucket(a) < bucket(b); });

    spec.parcels.resize(params.n_parcels);
    for (uint32_t i = 0; i < params.n_patches; ++i) {
        uint32_t p = static_cast<uint32_t>(static_cast<uint64_t>(i) * params.n_parcels /
                                           params.n_patches);
        spec.parcels[p].patches.push_back(order[i]);
    }
    for (auto& parcel : spec.parcels) {
        if (parcel.patches.empty()) {
            throw std::runtime_error("spatial_metapop: internal parcel assignment failure");
        }
        std::sort(parcel.patches.begin(), parcel.patches.end());
    }

    // Conserve the parcels nearest a seeded anchor, then seed the occupied
    // population inside the conserved cluster.
    double ax = rng::u01(rng::hash2(geom, 1000003)) * params.width;
    double ay = rng::u01(rng::hash2(geom, 1000004)) * params.width;
    auto centroid = [&](const Parcel& parcel) {
        double cx = 0.0, cy = 0.0;
        for (uint32_t i : parcel.patches) {
            cx += spec.patches[i].x;
            cy += spec.patches[i].y;
        }
        return std::pair<double, double>{cx / parcel.patches.size(), cy / parcel.patches.size()};
    };
    std::vector<uint32_t> by_anchor(params.n_parcels);
    std::iota(by_anchor.begin(), by_anchor.end(), 0);
    std::stable_sort(by_anchor.begin(), by_anchor.end(), [&](uint32_t a, uint32_t b) {
        auto [axa, aya] = centroid(spec.parcels[a]);
        auto [axb, ayb] = centroid(spec.parcels[b]);
        double da = (axa - ax) * (axa - ax) + (aya - ay) * (aya - ay);
        double db = (axb - ax) * (axb - ax) + (ayb - ay) * (ayb - ay);
        return da < db;
    });
    uint32_t n_conserved = std::max<uint32_t>(
        1, static_cast<uint32_t>(std::llround(params.conserved_fraction * params.n_parcels)));
    n_conserved = std::min(n_conserved, params.n_parcels);
    for (uint32_t r = 0; r < n_conserved; ++r) spec.parcels[by_anchor[r]].conserved = true;

    uint64_t occ = rng::derive(params.seed, rng::Stream::occupancy);
    bool any_occupied = false;
    for (const auto& parcel : spec.parcels) {
        if (!parcel.conserved) continue;
        for (uint32_t i : parcel.patches) {
            if (rng::u01(rng::hash2(occ, i)) < params.occupancy_rate) {
                spec.patches[i].occupied = true;
                any_occupied = true;
            }
        }
    }
    if (!any_occupied) {
        spec.patches[spec.parcels[by_anchor[0]].patches.front()].occupied = true;
    }

    for (std::size_t p = 0; p < spec.parcels.size(); ++p) {
        if (!spec.parcels[p].conserved) {
            spec.parcels[p].cost =
                cost_of_parcel(spec.parcels[p].patches.size(), params.cost_base, params.seed, p);
        }
    }
    return spec;
}

MetapopSpec distant_reservoir(const MetapopSpec& spec, uint64_t seed,
                              double reservoir_fraction) {
    if (!spec.kernel) {
        throw std::invalid_argument("distant_reservoir: spec needs a dispersal kernel");
    }
    MetapopSpec out = spec;

    double sx = 0.0, sy = 0.0;
    uint32_t n_occ = 0;
    for (const auto& p : spec.patches) {
        if (p.occupied) {
            sx += p.x;
            sy += p.y;
            ++n_occ;
        }
    }
    if (n_occ == 0) throw std::invalid_argument("distant_reservoir: no occupied patches");
    sx /= n_occ;
    sy /= n_occ;

    std::vector<double> dist(spec.parcels.size(), 0.0);
    std::vector<uint8_t> holds_population(spec.parcels.size(), 0);
    for (std::size_t p = 0; p < spec.parcels.size(); ++p) {
        double cx = 0.0, cy = 0.0;
        for (uint32_t i : spec.parcels[p].patches) {
            cx += spec.patches[i].x;
            cy += spec.patches[i].y;
            if (spec.patches[i].occupied) holds_population[p] = 1;
        }
        cx /= spec.parcels[p].patches.size();
        cy /= spec.parcels[p].patches.size();
        dist[p] = std::sqrt((cx - sx) * (cx - sx) + (cy - sy) * (cy - sy));
    }

    double max_dist = *std::max_element(dist.begin(), dist.end());
    if (max_dist < 3.0 * spec.kernel->r0) {
        throw std::invalid_argument(
            "distant_reservoir: spec too small to carve a corridor (all parcels within 3*r0 "
            "of the population)");
    }

    // Farthest parcels become the free reservoir; parcels holding the
    // population stay free; everything else is priced.
    std::vector<uint32_t> by_dist(spec.parcels.size());
    std::iota(by_dist.begin(), by_dist.end(), 0);
    std::stable_sort(by_dist.begin(), by_dist.end(),
                     [&](uint32_t a, uint32_t b) { return dist[a] > dist[b]; });
    uint32_t n_reservoir = std::max<uint32_t>(
        1, static_cast<uint32_t>(std::llround(reservoir_fraction * spec.parcels.size())));

    std::vector<uint8_t> conserved(spec.parcels.size(), 0);
    for (uint32_t r = 0; r < n_reservoir && r < by_dist.size(); ++r) conserved[by_dist[r]] = 1;
    for (std::size_t p = 0; p < spec.parcels.size(); ++p) {
        if (holds_population[p]) conserved[p] = 1;
    }

    for (std::size_t p = 0; p < out.parcels.size(); ++p) {
        out.parcels[p].conserved = conserved[p] != 0;
        if (conserved[p]) {
            out.parcels[p].cost = 0.0;
        } else {
            out.parcels[p].cost =
                cost_of_parcel(out.parcels[p].patches.size(), 1.0, seed, p);
        }
    }
    return out;
}

}  // namespace cascopt
