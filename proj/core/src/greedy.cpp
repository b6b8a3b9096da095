// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cascopt/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "cascopt/parallel.hpp"
#include "cascopt/rng.hpp"

namespace cascopt {

std::string to_string(GreedyVariant v) {
    return v == GreedyVariant::uniform_cost ? "uc" : "cb";
}

std::string to_string(EvalMode m) {
    switch (m) {
        case EvalMode::fresh: return "fresh";
        case EvalMode::reuse: return "reuse";
        case EvalMode::reuse_pre: return "reuse+pre";
        case EvalMode::reuse_pre_repeat: return "reuse+pre+repeat";
    }
    return "unknown";
}

bool parse_variant(const std::string& s, GreedyVariant& out) {
    if (s == "uc") {
        out = GreedyVariant::uniform_cost;
        return true;
    }
    if (s == "cb") {
        out = GreedyVariant::cost_benefit;
        return true;
    }
    return false;
}

bool parse_mode(const std::string& s, EvalMode& out) {
    if (s == "fresh") {
        out = EvalMode::fresh;
        return true;
    }
    if (s == "reuse") {
        out = EvalMode::reuse;
        return true;
    }
    if (s == "reuse+pre" || s == "reuse_pre") {
        out = EvalMode::reuse_pre;
        return true;
    }
    if (s == "reuse+pre+repeat" || s == "reuse_pre_repeat") {
        out = EvalMode::reuse_pre_repeat;
        return true;
    }
    return false;
}

namespace {

double pool_mean(const std::vector<ReducedCascade>& pool, const Strategy& y) {
    if (pool.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& c : pool) sum += evaluate_on_sample(c, y);
    return sum / static_cast<double>(pool.size());
}

double pool_gain(const std::vector<ReducedCascade>& pool, const Strategy& current, ActionId l) {
    Strategy with = current;
    with.purchased[l] = 1;
    double sum = 0.0;
    for (const auto& c : pool) {
        sum += evaluate_on_sample(c, with) - evaluate_on_sample(c, current);
    }
    return pool.empty() ? 0.0 : sum / static_cast<double>(pool.size());
}

}  // namespace

double score_action(const std::vector<ReducedCascade>& pool, const Strategy& current, ActionId l,
                    GreedyVariant variant, double cost) {
    double gain = pool_gain(pool, current, l);
    if (variant == GreedyVariant::cost_benefit) {
        if (cost == 0.0) {
            throw std::invalid_argument(
                "score_action: zero-cost action under cost-benefit ranking; commit it up front");
        }
        return gain / cost;
    }
    return gain;
}

GreedyResult greedy_select(const Instance& inst, const GreedyConfig& cfg) {
    if (cfg.n_cascades < 1) throw std::invalid_argument("greedy_select: N must be >= 1");
    const std::size_t L = inst.num_actions();
    using clock = std::chrono::steady_clock;

    GreedyResult result;
    Strategy current = empty_strategy(L);

    // Pre-sampled pool for the reuse modes. reuse keeps raw samples,
    // reuse+pre reduces them once; both evaluate through the same code.
    std::vector<ReducedCascade> pool;
    uint64_t train_seed = rng::derive(cfg.seed, rng::Stream::training);
    if (cfg.mode != EvalMode::fresh) {
        pool.resize(cfg.n_cascades);
        parallel_for(cfg.n_cascades, cfg.jobs, [&](std::size_t k) {
            CascadeSample s = sample_cascade(inst, static_cast<int32_t>(k), train_seed);
            if (cfg.mode == EvalMode::reuse) {
                pool[k] = from_sample(s);
            } else {
                pool[k] = reduce(s);
            }
        });
    }

    auto fresh_pool = [&](uint32_t round, ActionId l) {
        std::vector<ReducedCascade> p(cfg.n_cascades);
        uint64_t seed =
            rng::derive(cfg.seed, rng::Stream::greedy_fresh, rng::hash2(round, l));
        for (uint32_t k = 0; k < cfg.n_cascades; ++k) {
            p[k] = from_sample(sample_cascade(inst, static_cast<int32_t>(k), seed));
        }
        return p;
    };

    auto pool_sizes = [&](uint64_t& nodes, uint64_t& edges) {
        nodes = edges = 0;
        for (const auto& c : pool) {
            nodes += c.n_nodes();
            edges += c.n_edges();
        }
    };

    uint32_t round = 0;

    // Free actions cannot hurt a monotone objective; under cost-benefit
    // ranking their ratio is undefined, so they are committed immediately.
    if (cfg.variant == GreedyVariant::cost_benefit) {
        for (ActionId l = 0; l < L; ++l) {
            if (inst.actions[l].cost == 0.0 && !current.taken(l)) {
                auto t0 = clock::now();
                current.purchased[l] = 1;
                if (cfg.mode == EvalMode::reuse_pre_repeat) {
                    parallel_for(pool.size(), cfg.jobs,
                                 [&](std::size_t k) { pool[k] = commit_action(pool[k], l); });
                }
                GreedyRound r;
                r.round = round++;
                r.action = l;
                r.score = std::numeric_limits<double>::infinity();
                r.gain = 0.0;
                r.cumulative_cost = current.cost;
                r.wallclock_ms =
                    std::chrono::duration<double, std::milli>(clock::now() - t0).count();
                pool_sizes(r.pool_nodes, r.pool_edges);
                result.trace.push_back(r);
            }
        }
    }

    while (true) {
        auto t0 = clock::now();
        double remaining = cfg.budget - current.cost;

        std::vector<ActionId> candidates;
        for (ActionId l = 0; l < L; ++l) {
            if (!current.taken(l) && inst.actions[l].cost <= remaining) candidates.push_back(l);
        }
        if (candidates.empty()) break;

        std::vector<double> gains(candidates.size(), 0.0);
        parallel_for(candidates.size(), cfg.jobs, [&](std::size_t i) {
            ActionId l = candidates[i];
            if (cfg.mode == EvalMode::fresh) {
                auto p = fresh_pool(round, l);
                gains[i] = pool_gain(p, current, l);
            } else {
                gains[i] = pool_gain(pool, current, l);
            }
        });

        ActionId best = candidates[0];
        double best_score = -std::numeric_limits<double>::infinity();
        double best_gain = 0.0;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            ActionId l = candidates[i];
            double cost = inst.actions[l].cost;
            double score = gains[i];
            if (cfg.variant == GreedyVariant::cost_benefit && cost > 0.0) score = gains[i] / cost;
            if (score > best_score) {
                best_score = score;
                best = l;
                best_gain = gains[i];
            }
        }
        if (best_score <= 0.0) break;

        current.purchased[best] = 1;
        current.cost += inst.actions[best].cost;
        if (cfg.mode == EvalMode::reuse_pre_repeat) {
            parallel_for(pool.size(), cfg.jobs,
                         [&](std::size_t k) { pool[k] = commit_action(pool[k], best); });
        }

        GreedyRound r;
        r.round = round++;
        r.action = best;
        r.score = best_score;
        r.gain = best_gain;
        r.cumulative_cost = current.cost;
        r.wallclock_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        pool_sizes(r.pool_nodes, r.pool_edges);
        result.trace.push_back(r);
    }

    if (cfg.mode == EvalMode::fresh) {
        std::vector<ReducedCascade> p(cfg.n_cascades);
        uint64_t seed = rng::derive(cfg.seed, rng::Stream::training);
        for (uint32_t k = 0; k < cfg.n_cascades; ++k) {
            p[k] = from_sample(sample_cascade(inst, static_cast<int32_t>(k), seed));
        }
        result.estimated_value = pool_mean(p, current);
    } else {
        result.estimated_value = pool_mean(pool, current);
    }
    result.strategy = std::move(current);
    return result;
}

}  // namespace cascopt
