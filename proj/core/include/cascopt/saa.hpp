// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "cascopt/greedy.hpp"
#include "cascopt/mip.hpp"

namespace cascopt {

struct SaaConfig {
    uint32_t m = 1;        // independent SAA replications
    uint32_t n = 1;        // training cascades per replication
    uint32_t n_valid = 1;  // validation cascades (candidate selection)
    uint32_t n_test = 1;   // test cascades (lower-bound estimate)
    double budget = 0.0;
    uint64_t seed = 1;
    uint64_t node_limit = std::numeric_limits<uint64_t>::max();
    uint32_t jobs = 1;
};

struct SaaReplication {
    Strategy candidate;
    double upper_bound = 0.0;  // Z_bar_i: proven bound, even when not optimal
    double training_value = 0.0;
    double validation_score = 0.0;
    SolveResult::Status status = SolveResult::Status::optimal;
};

// Replicated sample-average solve: M candidate strategies with their
// bounds, a validation-selected winner, and the stochastic gap estimate
// mean(Z_bar) - Z_lower(y*).
struct SaaReport {
    SaaConfig config;
    std::vector<SaaReplication> replications;
    double mean_upper = 0.0;     // Z_bar
    double upper_ci_half = 0.0;  // 1.96 * sd(Z_bar_i) / sqrt(M)
    uint32_t selected = 0;       // index of y* (ties: lowest index)
    Strategy best;
    double lower = 0.0;  // Z_lower(y*) on the test cascades
    double lower_stderr = 0.0;
    double lower_ci_half = 0.0;
    double gap = 0.0;  // mean_upper - lower
};

SaaReport run_saa(const Instance& inst, const SaaConfig& cfg);

struct SweepRow {
    double budget = 0.0;
    std::string method;  // "saa", "greedy-uc", "greedy-cb"
    double value = 0.0;
    double stderr_ = 0.0;
    double saa_upper = std::numeric_limits<double>::quiet_NaN();
};

struct SweepMethods {
    bool saa = true;
    bool greedy_uc = true;
    bool greedy_cb = true;
};

// Runs each requested method at each budget and scores every strategy on
// one shared test pool, so methods are compared on identical scenarios.
std::vector<SweepRow> budget_sweep(const Instance& inst, const std::vector<double>& budgets,
                                   const SaaConfig& cfg, const SweepMethods& methods,
                                   uint32_t greedy_n);

struct GapRow {
    uint32_t n = 0;
    double upper = 0.0;
    double upper_ci = 0.0;
    double lower = 0.0;
    double lower_ci = 0.0;
    double gap = 0.0;
};

// Full SAA run per training size; the Fig-style bound-convergence table.
std::vector<GapRow> gap_vs_training_size(const Instance& inst, const std::vector<uint32_t>& sizes,
                                         const SaaConfig& cfg);

}  // namespace cascopt
