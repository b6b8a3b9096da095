// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cascopt {

using NodeId = uint32_t;
using ActionId = uint32_t;

struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    double prob = 0.0;
};

// A purchasable set of nodes. Buying the action makes every node in
// `nodes` part of the network.
struct Action {
    std::vector<NodeId> nodes;
    double cost = 0.0;
};

// The augmentable network: free substrate (base nodes), purchasable
// actions, probabilistic edges, cascade sources, per-node rewards and a
// purchase budget. Immutable after finalize(); safe to share across threads.
struct Instance {
    uint32_t n_nodes = 0;
    std::vector<std::string> labels;  // optional, empty or size n_nodes
    std::vector<Edge> edges;
    std::vector<uint8_t> base;  // size n_nodes, 1 = free (V0)
    std::vector<Action> actions;
    std::vector<NodeId> sources;  // sorted, unique
    std::vector<double> rewards;  // size n_nodes
    double budget = 0.0;

    // Derived tables, built by finalize().
    std::vector<std::vector<ActionId>> node_actions;  // A(v), sorted
    std::vector<uint32_t> out_offsets;                // CSR over edge indices
    std::vector<uint32_t> out_edges;

    std::size_t num_actions() const { return actions.size(); }

    // True when v needs no purchase. A base node is free even if some
    // action redundantly lists it.
    bool is_free(NodeId v) const { return base[v] != 0; }

    // Builds A(v) and the out-edge index. Must be called after any
    // structural mutation and before use.
    void finalize();
};

// 0-1 vector over actions plus its derived cost.
struct Strategy {
    std::vector<uint8_t> purchased;
    double cost = 0.0;

    bool taken(ActionId l) const { return purchased[l] != 0; }
    bool feasible(double budget) const { return cost <= budget; }
    std::size_t count() const;
    std::vector<ActionId> taken_ids() const;
};

Strategy make_strategy(const Instance& inst, std::vector<uint8_t> bits);
Strategy empty_strategy(std::size_t n_actions);
Strategy full_strategy(const Instance& inst);

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

ValidationReport validate(const Instance& inst);

// V(y) = V0 union of the node sets of purchased actions, as a bitmask.
std::vector<uint8_t> purchased_nodes(const Instance& inst, const Strategy& y);

// Nodes reachable from `sources` by directed paths that stay inside the
// purchased set, endpoints included. A source counts only if purchased.
std::vector<NodeId> reachable(const Instance& inst,
                              const std::vector<uint8_t>& purchased,
                              const std::vector<NodeId>& sources);

// Replaces each listed edge (v,w) of probability p by a new purchasable
// relay node e with edges (v,e,p) and (e,w,1), so the edge only functions
// when its single-node action is bought.
Instance edge_purchase_gadget(const Instance& inst,
                              const std::vector<std::pair<NodeId, NodeId>>& purchasable_edges,
                              const std::vector<double>& costs);

// Adds, per candidate node i, a fresh purchasable source s_i with edge
// (s_i, i, 1). Buying the action turns i into an effective cascade source.
Instance source_purchase_gadget(const Instance& inst,
                                const std::vector<NodeId>& candidate_sources,
                                const std::vector<double>& costs);

}  // namespace cascopt
