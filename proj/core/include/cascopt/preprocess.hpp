// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cascopt/cascade.hpp"

namespace cascopt {

// A training cascade compressed by pruning, source collapsing and
// implication-SCC quotienting. Objective-equivalent to its source sample
// for every strategy. provenance[v] lists the original instance nodes that
// were folded into v; node_ids[v] is the smallest of them.
struct ReducedCascade : CascadeSample {
    std::vector<std::vector<NodeId>> provenance;
};

struct StageCount {
    std::string stage;
    uint32_t nodes = 0;
    uint32_t edges = 0;
};

struct ReduceStats {
    uint32_t nodes_in = 0;
    uint32_t edges_in = 0;
    uint32_t nodes_out = 0;
    uint32_t edges_out = 0;
    uint32_t rotations = 0;
    // Components of the implies graph that could not be represented by a
    // single purchase set and were left unmerged.
    uint32_t skipped_components = 0;
    uint32_t empty_intersection_components = 0;
    uint32_t merged_components = 0;
    bool cyclic_quotient_fallback = false;
    std::vector<StageCount> stages;
};

ReducedCascade from_sample(const CascadeSample& sample);

// Drops nodes that cannot be reached from the sources even with every
// action purchased, and zero-reward nodes from which no positive reward is
// reachable.
ReducedCascade prune(const ReducedCascade& cascade);

// Folds every free node reachable from a free source through free nodes
// into a single free super-source carrying their summed reward. Priced
// sources are kept as separate sources: their reward still depends on the
// strategy.
ReducedCascade collapse_sources(const ReducedCascade& cascade);

// The u => v relation ("if u is reachable then v is reachable, for every
// strategy") restricted to the two syntactic cases: a live edge (u,v)
// where v is free or u's purchase forces v's (A(u) subset of A(v), u
// priced), and a non-source u whose only in-edge comes from v.
std::vector<std::pair<uint32_t, uint32_t>> implies_edges(const ReducedCascade& cascade);

// Contracts strongly connected components of the implies graph. A merged
// node gets the OR of source flags, the summed reward, and the
// intersection of the priced members' action sets; free members impose no
// purchase requirement. Components whose intersection is not attained by
// any member cannot be represented by one node and are left unmerged.
ReducedCascade scc_quotient(const ReducedCascade& cascade, ReduceStats* stats = nullptr);

// prune -> collapse_sources -> scc_quotient, rotated until a full rotation
// leaves node and edge counts unchanged.
ReducedCascade reduce(const ReducedCascade& cascade, ReduceStats* stats = nullptr);
ReducedCascade reduce(ReducedCascade&& cascade, ReduceStats* stats = nullptr);
ReducedCascade reduce(const CascadeSample& sample, ReduceStats* stats = nullptr);

// Removes l from every action set (nodes whose set empties become free)
// and re-reduces: the caller has committed to purchasing l.
ReducedCascade commit_action(const ReducedCascade& cascade, ActionId l);

}  // namespace cascopt
