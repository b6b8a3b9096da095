// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "cascopt/preprocess.hpp"

namespace cascopt {

// The scenario-averaged network-design program over a fixed set of acyclic
// training cascades:
//
//   max (1/N) sum_k sum_v r_v^k x_v^k
//   s.t. sum_l c_l y_l <= B                      (budget)
//        x_v^k <= sum_{l in A_k(v)} y_l          for priced v (purchase)
//        x_v^k <= sum_{(u,v) in E_k} x_u^k       for non-source v (flow)
//        0 <= x <= 1, y binary
//
// Variables are named deterministically: Y<l> and X<k>_<v> with v the
// node's local index inside cascade k.
struct MipModel {
    std::vector<double> action_costs;  // c_l, l = 0..L-1
    double budget = 0.0;
    std::vector<ReducedCascade> cascades;

    std::size_t num_actions() const { return action_costs.size(); }
    std::size_t num_x_vars() const;
    std::size_t num_rows() const;  // budget + purchase + flow rows
};

struct SolveResult {
    enum class Status { optimal, budget_infeasible, bound_only, node_limit };

    Strategy best_strategy;
    double best_value = 0.0;
    double upper_bound = 0.0;
    Status status = Status::optimal;
    uint64_t nodes_explored = 0;
};

inline constexpr double kMipTolerance = 1e-6;

std::string to_string(SolveResult::Status s);

// Validates acyclicity of every cascade and assembles the model.
MipModel build_mip(std::vector<ReducedCascade> cascades, std::vector<double> action_costs,
                   double budget);

// Optimal objective of the model with y fixed. The x-part of the LP is
// totally unimodular-free here: its optimum is plain reachability, so the
// value is computed combinatorially.
double fix_y_evaluate(const MipModel& model, const Strategy& y);

// Exact branch-and-bound over y. At each node the bound purchases every
// undecided action, which is valid because the objective is monotone in y.
// Depth-first, include-branch first; branching picks the undecided action
// whose exclusion costs the relaxation the most (ties: lowest id).
SolveResult solve_exact(const MipModel& model,
                        uint64_t node_limit = std::numeric_limits<uint64_t>::max());

// Writes the model in MPS layout (ROWS/COLUMNS/RHS/BOUNDS plus OBJSENSE
// MAX), with the deterministic variable naming documented above.
void export_standard(const MipModel& model, const std::string& path);
void export_standard(const MipModel& model, std::ostream& os);

}  // namespace cascopt
