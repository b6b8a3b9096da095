// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cascopt/preprocess.hpp"

namespace cascopt {

enum class GreedyVariant {
    uniform_cost,  // rank by raw marginal gain
    cost_benefit,  // rank by gain per unit cost
};

// How marginal gains are estimated. All reuse* modes score on the same
// pre-sampled pool and therefore pick the same actions; they differ only
// in how much graph each evaluation has to touch.
enum class EvalMode {
    fresh,            // new cascades for every (round, action) score
    reuse,            // one pre-sampled pool, unreduced
    reuse_pre,        // pool reduced once up front
    reuse_pre_repeat, // pool re-reduced after each committed action
};

struct GreedyConfig {
    GreedyVariant variant = GreedyVariant::uniform_cost;
    EvalMode mode = EvalMode::reuse;
    uint32_t n_cascades = 100;
    double budget = 0.0;
    uint64_t seed = 1;
    uint32_t jobs = 1;
};

struct GreedyRound {
    uint32_t round = 0;
    ActionId action = 0;
    double score = 0.0;  // gain (UC) or gain/cost (CB); +inf for free commits
    double gain = 0.0;
    double cumulative_cost = 0.0;
    double wallclock_ms = 0.0;
    uint64_t pool_nodes = 0;
    uint64_t pool_edges = 0;
};

struct GreedyResult {
    Strategy strategy;
    std::vector<GreedyRound> trace;
    double estimated_value = 0.0;  // pool estimate of the final strategy
};

std::string to_string(GreedyVariant v);
std::string to_string(EvalMode m);
bool parse_variant(const std::string& s, GreedyVariant& out);
bool parse_mode(const std::string& s, EvalMode& out);

// Marginal score of adding l to `current`, averaged over the pool:
// mean_k [value(current + l) - value(current)], divided by cost under
// cost-benefit ranking.
double score_action(const std::vector<ReducedCascade>& pool, const Strategy& current, ActionId l,
                    GreedyVariant variant, double cost);

// Repeatedly commits the best-scoring affordable action until none is
// affordable or no affordable action has positive score.
GreedyResult greedy_select(const Instance& inst, const GreedyConfig& cfg);

}  // namespace cascopt
