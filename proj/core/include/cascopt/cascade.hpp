// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cascopt/graph.hpp"

namespace cascopt {

// Dispersal kernel: short hops (<= r0) succeed with probability 1/C_i,
// long hops decay exponentially with distance.
struct Kernel {
    double r0 = 3000.0;      // meters
    double alpha = 0.1;      // long-range scale
    double gamma = 7.69e-4;  // 1/meters
};

struct Patch {
    double x = 0.0;  // meters
    double y = 0.0;
    bool occupied = false;
};

// A purchasable (or already conserved) group of patches.
struct Parcel {
    std::vector<uint32_t> patches;
    bool conserved = false;
    double cost = 0.0;
};

struct ColonizationEntry {
    uint32_t from = 0;
    uint32_t to = 0;
    double prob = 0.0;
};

// Patch-occupancy process over a finite horizon: per-patch extinction,
// pairwise colonization (kernel-driven or explicit), patches grouped into
// parcels that are free or priced.
struct MetapopSpec {
    std::vector<Patch> patches;
    std::vector<double> extinction;  // beta_i, size = patches
    std::optional<Kernel> kernel;
    std::vector<ColonizationEntry> colonization;  // used when kernel is absent
    int horizon = 1;                              // T >= 1
    std::vector<Parcel> parcels;                  // partition of the patches

    double distance(uint32_t i, uint32_t j) const;
    // Number of patches j != i with d(i,j) <= r0.
    uint32_t neighbor_count(uint32_t i) const;
    // p(i,j) for i != j, from the kernel or the explicit table.
    double colonization_prob(uint32_t i, uint32_t j) const;
};

// Eq.-style kernel evaluation on a raw distance; clamped to [0,1].
double colonization_prob(double distance, double r0, double alpha, double gamma,
                         uint32_t neighbor_count_i);

// Time-expanded reduction: node (i,t) for every patch and layer 0..T,
// cross edges (i,t)->(j,t+1) with p_ij, self edges with 1-beta_i. Sources
// are occupied patches at t=0, rewards sit on layer T, one action per
// priced parcel spanning all layers.
Instance layered_graph(const MetapopSpec& spec);

// Node id of patch i at time t in the layered instance.
inline NodeId layered_node(const MetapopSpec& spec, uint32_t i, int t) {
    return static_cast<NodeId>(t) * static_cast<NodeId>(spec.patches.size()) + i;
}

// One sampled live-edge scenario, restricted to what forward exploration
// from the sources can ever reach. Nodes are re-indexed densely; node_ids
// maps back to the instance.
struct CascadeSample {
    int32_t scenario_index = 0;
    uint64_t rng_seed = 0;
    std::vector<NodeId> node_ids;                      // ascending original ids
    std::vector<std::pair<uint32_t, uint32_t>> edges;  // local, sorted (src,dst)
    std::vector<double> rewards;
    std::vector<std::vector<ActionId>> action_sets;  // sorted; empty = free
    std::vector<uint8_t> is_source;

    // Derived out-adjacency, built by finalize().
    std::vector<uint32_t> out_offsets;
    std::vector<uint32_t> out_dst;

    std::size_t n_nodes() const { return node_ids.size(); }
    std::size_t n_edges() const { return edges.size(); }
    bool is_free(uint32_t v) const { return action_sets[v].empty(); }
    void finalize();
};

// Flips one coin per explored out-edge (keyed by edge index, so the draw
// does not depend on traversal order) and keeps the live subgraph reached
// from the sources under the all-purchased assumption.
CascadeSample sample_cascade(const Instance& inst, int32_t scenario_index, uint64_t rng_seed);

// Reward collected by strategy y on one scenario: sum of rewards over
// nodes reachable from the scenario sources through free-or-purchased
// nodes via live edges.
double evaluate_on_sample(const CascadeSample& sample, const Strategy& y);

struct Estimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    uint32_t n = 0;
};

// Monte Carlo estimate of the expected reward of y over n fresh scenarios.
Estimate estimate_objective(const Instance& inst, const Strategy& y, uint32_t n,
                            uint64_t rng_seed);

// Direct non-progressive simulation of the metapopulation over spec.horizon
// steps with every parcel available; returns the number of occupied patches
// at the horizon. Independent of the layered-graph path on purpose.
uint32_t simulate_metapop_direct(const MetapopSpec& spec, uint64_t rng_seed, uint64_t run_index);

}  // namespace cascopt
