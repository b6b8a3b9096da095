// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cascopt/mip.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cascopt {

namespace {

bool cascade_is_acyclic(const ReducedCascade& c) {
    const std::size_t n = c.n_nodes();
    std::vector<uint32_t> indeg(n, 0);
    for (const auto& [u, v] : c.edges) {
        (void)u;
        indeg[v]++;
    }
    std::deque<uint32_t> queue;
    for (uint32_t v = 0; v < n; ++v) {
        if (indeg[v] == 0) queue.push_back(v);
    }
    std::size_t seen = 0;
    while (!queue.empty()) {
        uint32_t u = queue.front();
        queue.pop_front();
        ++seen;
        for (uint32_t i = c.out_offsets[u]; i < c.out_offsets[u + 1]; ++i) {
            if (--indeg[c.out_dst[i]] == 0) queue.push_back(c.out_dst[i]);
        }
    }
    return seen == n;
}

}  // namespace

std::size_t MipModel::num_x_vars() const {
    std::size_t n = 0;
    for (const auto& c : cascades) n += c.n_nodes();
    return n;
}

std::size_t MipModel::num_rows() const {
    std::size_t n = 1;  // budget
    for (const auto& c : cascades) {
        for (uint32_t v = 0; v < c.n_nodes(); ++v) {
            if (!c.is_free(v)) ++n;
            if (!c.is_source[v]) ++n;
        }
    }
    return n;
}

std::string to_string(SolveResult::Status s) {
    switch (s) {
        case SolveResult::Status::optimal: return "optimal";
        case SolveResult::Status::budget_infeasible: return "budget_infeasible";
        case SolveResult::Status::bound_only: return "bound_only";
        case SolveResult::Status::node_limit: return "node_limit";
    }
    return "unknown";
}

MipModel build_mip(std::vector<ReducedCascade> cascades, std::vector<double> action_costs,
                   double budget) {
    for (std::size_t k = 0; k < cascades.size(); ++k) {
        for (const auto& as : cascades[k].action_sets) {
            for (ActionId l : as) {
                if (l >= action_costs.size()) {
                    throw std::invalid_argument("build_mip: cascade references unknown action");
                }
            }
        }
        if (!cascade_is_acyclic(cascades[k])) {
            std::ostringstream os;
            os << "build_mip: cascade " << k
               << " is cyclic; the flow constraints require acyclic scenarios "
                  "(reduce it to a DAG first)";
            throw std::invalid_argument(os.str());
        }
    }
    MipModel m;
    m.cascades = std::move(cascades);
    m.action_costs = std::move(action_costs);
    m.budget = budget;
    return m;
}

double fix_y_evaluate(const MipModel& model, const Strategy& y) {
    if (model.cascades.empty()) return 0.0;
    double total = 0.0;
    for (const auto& c : model.cascades) total += evaluate_on_sample(c, y);
    return total / static_cast<double>(model.cascades.size());
}

namespace {

struct BnB {
    const MipModel& model;
    uint64_t node_limit;

    std::vector<uint8_t> decided;  // 0 undecided, 1 in, 2 out
    uint64_t nodes = 0;
    bool limit_hit = false;
    double residual_ub = -std::numeric_limits<double>::infinity();

    double best_value = -std::numeric_limits<double>::infinity();
    std::vector<uint8_t> best_bits;

    explicit BnB(const MipModel& m, uint64_t limit) : model(m), node_limit(limit) {
        decided.assign(model.num_actions(), 0);
    }

    double value_of(const std::vector<uint8_t>& bits) {
        Strategy y;
        y.purchased = bits;
        return fix_y_evaluate(model, y);
    }

    // Summed in ascending action order so the float result does not depend
    // on the search path.
    double committed_cost() const {
        double c = 0.0;
        for (std::size_t l = 0; l < decided.size(); ++l) {
            if (decided[l] == 1) c += model.action_costs[l];
        }
        return c;
    }

    std::vector<uint8_t> bits_with_undecided_in() const {
        std::vector<uint8_t> bits(decided.size(), 0);
        for (std::size_t l = 0; l < decided.size(); ++l) bits[l] = decided[l] != 2;
        return bits;
    }

    std::vector<uint8_t> committed_bits() const {
        std::vector<uint8_t> bits(decided.size(), 0);
        for (std::size_t l = 0; l < decided.size(); ++l) bits[l] = decided[l] == 1;
        return bits;
    }

    void search() {
        ++nodes;
        if (limit_hit || nodes > node_limit) {
            limit_hit = true;
            residual_ub = std::max(residual_ub, value_of(bits_with_undecided_in()));
            return;
        }

        // Actions that no longer fit in the remaining budget can never be
        // taken below this node.
        double cost = committed_cost();
        std::vector<ActionId> forced_out;
        for (ActionId l = 0; l < decided.size(); ++l) {
            if (decided[l] == 0 && cost + model.action_costs[l] > model.budget) {
                decided[l] = 2;
                forced_out.push_back(l);
            }
        }

        std::vector<ActionId> undecided;
        for (ActionId l = 0; l < decided.size(); ++l) {
            if (decided[l] == 0) undecided.push_back(l);
        }

        double bound = value_of(bits_with_undecided_in());
        auto committed = committed_bits();
        double committed_value = value_of(committed);
        if (committed_value > best_value) {
            best_value = committed_value;
            best_bits = committed;
        }

        if (!undecided.empty() && bound > best_value) {
            // Branch on the action whose exclusion hurts the relaxation
            // most; its exclusion bound is reused for the out-child.
            ActionId branch = undecided[0];
            double best_gain = -std::numeric_limits<double>::infinity();
            double branch_out_bound = 0.0;
            for (ActionId l : undecided) {
                auto bits = bits_with_undecided_in();
                bits[l] = 0;
                double without = value_of(bits);
                double gain = bound - without;
                if (gain > best_gain) {
                    best_gain = gain;
                    branch = l;
                    branch_out_bound = without;
                }
            }

            decided[branch] = 1;
            search();

            decided[branch] = 2;
            if (limit_hit) {
                residual_ub = std::max(residual_ub, branch_out_bound);
            } else if (branch_out_bound > best_value) {
                search();
            }
            decided[branch] = 0;
        }

        for (ActionId l : forced_out) decided[l] = 0;
    }
};

}  // namespace

SolveResult solve_exact(const MipModel& model, uint64_t node_limit) {
    SolveResult res;
    const std::size_t L = model.num_actions();

    if (model.budget < 0.0) {
        res.status = SolveResult::Status::budget_infeasible;
        res.best_strategy = empty_strategy(L);
        res.best_value = -std::numeric_limits<double>::infinity();
        res.upper_bound = -std::numeric_limits<double>::infinity();
        return res;
    }

    BnB bnb(model, node_limit);
    if (node_limit == 0) {
        // Bound-only call: report the all-in relaxation without searching.
        res.status = SolveResult::Status::bound_only;
        res.best_strategy = empty_strategy(L);
        res.best_value = bnb.value_of(std::vector<uint8_t>(L, 0));
        res.best_strategy.cost = 0.0;
        res.upper_bound = bnb.value_of(std::vector<uint8_t>(L, 1));
        return res;
    }

    bnb.search();

    res.nodes_explored = bnb.nodes;
    Strategy y;
    y.purchased = bnb.best_bits;
    y.cost = 0.0;
    for (ActionId l = 0; l < L; ++l) {
        if (y.purchased[l]) y.cost += model.action_costs[l];
    }
    res.best_strategy = std::move(y);
    res.best_value = bnb.best_value;
    if (bnb.limit_hit) {
        res.status = SolveResult::Status::node_limit;
        res.upper_bound = std::max(bnb.best_value, bnb.residual_ub);
    } else {
        res.status = SolveResult::Status::optimal;
        res.upper_bound = bnb.best_value;
    }
    return res;
}

namespace {

// One MPS entry line: two name/value pairs max, aligned to the classic
// field columns when names are short enough.
void mps_entry(std::ostream& os, const std::string& col, const std::string& row1, double v1,
               const std::string* row2 = nullptr, double v2 = 0.0) {
    std::ostringstream line;
    line << "    " << std::left << std::setw(10) << col << std::setw(10) << row1
         << std::setprecision(17) << v1;
    if (row2) {
        line << "   " << std::setw(10) << *row2 << std::setprecision(17) << v2;
    }
    os << line.str() << "\n";
}

}  // namespace

void export_standard(const MipModel& model, std::ostream& os) {
    const std::size_t N = model.cascades.size();

    os << "NAME          CASCOPT\n";
    os << "OBJSENSE\n    MAX\n";
    os << "ROWS\n";
    os << " N  OBJ\n";
    os << " L  BUDGET\n";
    for (std::size_t k = 0; k < N; ++k) {
        const auto& c = model.cascades[k];
        for (uint32_t v = 0; v < c.n_nodes(); ++v) {
            if (!c.is_free(v)) os << " L  P" << k << "_" << v << "\n";
            if (!c.is_source[v]) os << " L  F" << k << "_" << v << "\n";
        }
    }

    os << "COLUMNS\n";
    os << "    MARKER                 'MARKER'                 'INTORG'\n";
    // Y columns: budget coefficient plus -1 in every purchase row the
    // action can satisfy.
    std::vector<std::vector<std::pair<std::string, double>>> ycoeffs(model.num_actions());
    for (ActionId l = 0; l < model.num_actions(); ++l) {
        ycoeffs[l].emplace_back("BUDGET", model.action_costs[l]);
    }
    for (std::size_t k = 0; k < N; ++k) {
        const auto& c = model.cascades[k];
        for (uint32_t v = 0; v < c.n_nodes(); ++v) {
            for (ActionId l : c.action_sets[v]) {
                std::ostringstream row;
                row << "P" << k << "_" << v;
                ycoeffs[l].emplace_back(row.str(), -1.0);
            }
        }
    }
    for (ActionId l = 0; l < model.num_actions(); ++l) {
        std::ostringstream col;
        col << "Y" << l;
        for (std::size_t i = 0; i < ycoeffs[l].size(); i += 2) {
            if (i + 1 < ycoeffs[l].size()) {
                mps_entry(os, col.str(), ycoeffs[l][i].first, ycoeffs[l][i].second,
                          &ycoeffs[l][i + 1].first, ycoeffs[l][i + 1].second);
            } else {
                mps_entry(os, col.str(), ycoeffs[l][i].first, ycoeffs[l][i].second);
            }
        }
    }
    os << "    MARKER                 'MARKER'                 'INTEND'\n";

    for (std::size_t k = 0; k < N; ++k) {
        const auto& c = model.cascades[k];
        // Successor flow rows are gathered per column.
        std::vector<std::vector<uint32_t>> flow_in(c.n_nodes());
        for (const auto& [u, v] : c.edges) {
            if (!c.is_source[v]) flow_in[u].push_back(v);
        }
        for (uint32_t v = 0; v < c.n_nodes(); ++v) {
            std::ostringstream col;
            col << "X" << k << "_" << v;
            std::vector<std::pair<std::string, double>> entries;
            if (c.rewards[v] != 0.0) {
                entries.emplace_back("OBJ", c.rewards[v] / static_cast<double>(N));
            }
            if (!c.is_free(v)) {
                std::ostringstream row;
                row << "P" << k << "_" << v;
                entries.emplace_back(row.str(), 1.0);
            }
            if (!c.is_source[v]) {
                std::ostringstream row;
                row << "F" << k << "_" << v;
                entries.emplace_back(row.str(), 1.0);
            }
            for (uint32_t w : flow_in[v]) {
                std::ostringstream row;
                row << "F" << k << "_" << w;
                entries.emplace_back(row.str(), -1.0);
            }
            for (std::size_t i = 0; i < entries.size(); i += 2) {
                if (i + 1 < entries.size()) {
                    mps_entry(os, col.str(), entries[i].first, entries[i].second,
                              &entries[i + 1].first, entries[i + 1].second);
                } else {
                    mps_entry(os, col.str(), entries[i].first, entries[i].second);
                }
            }
        }
    }

    os << "RHS\n";
    mps_entry(os, "RHS", "BUDGET", model.budget);

    os << "BOUNDS\n";
    for (ActionId l = 0; l < model.num_actions(); ++l) {
        std::ostringstream col;
        col << "Y" << l;
        std::ostringstream line;
        line << " UP " << std::left << std::setw(10) << "BND" << std::setw(10) << col.str()
             << std::setprecision(17) << 1.0;
        os << line.str() << "\n";
    }
    for (std::size_t k = 0; k < N; ++k) {
        const auto& c = model.cascades[k];
        for (uint32_t v = 0; v < c.n_nodes(); ++v) {
            std::ostringstream col;
            col << "X" << k << "_" << v;
            std::ostringstream line;
            line << " UP " << std::left << std::setw(10) << "BND" << std::setw(10) << col.str()
                 << std::setprecision(17) << 1.0;
            os << line.str() << "\n";
        }
    }
    os << "ENDATA\n";
}

void export_standard(const MipModel& model, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("export_standard: cannot open " + path);
    export_standard(model, os);
    os.flush();
    if (!os) throw std::runtime_error("export_standard: write failed for " + path);
}

}  // namespace cascopt
