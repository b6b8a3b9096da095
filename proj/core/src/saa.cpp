// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cascopt/saa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cascopt/parallel.hpp"
#include "cascopt/rng.hpp"

namespace cascopt {

namespace {

std::vector<double> action_costs(const Instance& inst) {
    std::vector<double> costs;
    costs.reserve(inst.num_actions());
    for (const auto& a : inst.actions) costs.push_back(a.cost);
    return costs;
}

std::vector<CascadeSample> sample_pool(const Instance& inst, uint32_t n, uint64_t seed,
                                       uint32_t jobs) {
    std::vector<CascadeSample> pool(n);
    parallel_for(n, jobs, [&](std::size_t k) {
        pool[k] = sample_cascade(inst, static_cast<int32_t>(k), seed);
    });
    return pool;
}

Estimate pool_estimate(const std::vector<CascadeSample>& pool, const Strategy& y) {
    Estimate est;
    est.n = static_cast<uint32_t>(pool.size());
    std::vector<double> values(pool.size());
    for (std::size_t k = 0; k < pool.size(); ++k) values[k] = evaluate_on_sample(pool[k], y);
    double sum = 0.0;
    for (double v : values) sum += v;
    est.mean = pool.empty() ? 0.0 : sum / static_cast<double>(pool.size());
    if (pool.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - est.mean) * (v - est.mean);
        est.stderr_ = std::sqrt(ss / (static_cast<double>(pool.size()) - 1.0) /
                                static_cast<double>(pool.size()));
    }
    return est;
}

constexpr double kZ95 = 1.959963984540054;  // two-sided 95% normal quantile

}  // namespace

SaaReport run_saa(const Instance& inst, const SaaConfig& cfg) {
    if (cfg.m < 1 || cfg.n < 1 || cfg.n_valid < 1 || cfg.n_test < 1) {
        throw std::invalid_argument("run_saa: all counts must be >= 1");
    }

    SaaReport report;
    report.config = cfg;
    report.replications.resize(cfg.m);

    const auto costs = action_costs(inst);

    // The M replications are independent solves on disjoint seed streams.
    parallel_for(cfg.m, cfg.jobs, [&](std::size_t i) {
        uint64_t seed = rng::derive(cfg.seed, rng::Stream::training, i);
        std::vector<ReducedCascade> cascades(cfg.n);
        for (uint32_t k = 0; k < cfg.n; ++k) {
            cascades[k] = reduce(sample_cascade(inst, static_cast<int32_t>(k), seed));
        }
        MipModel model = build_mip(std::move(cascades), costs, cfg.budget);
        SolveResult sol = solve_exact(model, cfg.node_limit);

        SaaReplication& rep = report.replications[i];
        rep.candidate = sol.best_strategy;
        rep.upper_bound = sol.upper_bound;
        rep.training_value = sol.best_value;
        rep.status = sol.status;
    });

    double sum_upper = 0.0;
    for (const auto& rep : report.replications) sum_upper += rep.upper_bound;
    report.mean_upper = sum_upper / static_cast<double>(cfg.m);
    if (cfg.m > 1) {
        double ss = 0.0;
        for (const auto& rep : report.replications) {
            ss += (rep.upper_bound - report.mean_upper) * (rep.upper_bound - report.mean_upper);
        }
        double sd = std::sqrt(ss / (static_cast<double>(cfg.m) - 1.0));
        report.upper_ci_half = kZ95 * sd / std::sqrt(static_cast<double>(cfg.m));
    }

    // One shared validation pool scores every candidate.
    auto valid_pool =
        sample_pool(inst, cfg.n_valid, rng::derive(cfg.seed, rng::Stream::validation), cfg.jobs);
    std::vector<double> scores(cfg.m, 0.0);
    parallel_for(cfg.m, cfg.jobs, [&](std::size_t i) {
        scores[i] = pool_estimate(valid_pool, report.replications[i].candidate).mean;
    });
    uint32_t best = 0;
    for (uint32_t i = 0; i < cfg.m; ++i) {
        report.replications[i].validation_score = scores[i];
        if (scores[i] > scores[best]) best = i;
    }
    report.selected = best;
    report.best = report.replications[best].candidate;

    auto test_pool =
        sample_pool(inst, cfg.n_test, rng::derive(cfg.seed, rng::Stream::testing), cfg.jobs);
    Estimate lower = pool_estimate(test_pool, report.best);
    report.lower = lower.mean;
    report.lower_stderr = lower.stderr_;
    report.lower_ci_half = kZ95 * lower.stderr_;
    report.gap = report.mean_upper - report.lower;
    return report;
}

std::vector<SweepRow> budget_sweep(const Instance& inst, const std::vector<double>& budgets,
                                   const SaaConfig& cfg, const SweepMethods& methods,
                                   uint32_t greedy_n) {
    if (budgets.empty()) throw std::invalid_argument("budget_sweep: no budgets given");

    // All methods and budgets share one test pool; comparisons are then
    // paired and the budget monotonicity of SAA is not washed out by
    // resampling noise.
    auto test_pool =
        sample_pool(inst, cfg.n_test, rng::derive(cfg.seed, rng::Stream::testing), cfg.jobs);

    std::vector<SweepRow> rows;
    for (double budget : budgets) {
        double saa_upper = std::numeric_limits<double>::quiet_NaN();
        if (methods.saa) {
            SaaConfig c = cfg;
            c.budget = budget;
            SaaReport report = run_saa(inst, c);
            Estimate est = pool_estimate(test_pool, report.best);
            SweepRow row;
            row.budget = budget;
            row.method = "saa";
            row.value = est.mean;
            row.stderr_ = est.stderr_;
            row.saa_upper = report.mean_upper;
            saa_upper = report.mean_upper;
            rows.push_back(row);
        }
        for (int g = 0; g < 2; ++g) {
            bool enabled = g == 0 ? methods.greedy_uc : methods.greedy_cb;
            if (!enabled) continue;
            GreedyConfig gc;
            gc.variant = g == 0 ? GreedyVariant::uniform_cost : GreedyVariant::cost_benefit;
            gc.mode = EvalMode::reuse_pre_repeat;
            gc.n_cascades = greedy_n;
            gc.budget = budget;
            gc.seed = cfg.seed;
            gc.jobs = cfg.jobs;
            GreedyResult res = greedy_select(inst, gc);
            Estimate est = pool_estimate(test_pool, res.strategy);
            SweepRow row;
            row.budget = budget;
            row.method = g == 0 ? "greedy-uc" : "greedy-cb";
            row.value = est.mean;
            row.stderr_ = est.stderr_;
            row.saa_upper = saa_upper;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<GapRow> gap_vs_training_size(const Instance& inst, const std::vector<uint32_t>& sizes,
                                         const SaaConfig& cfg) {
    if (sizes.empty()) throw std::invalid_argument("gap_vs_training_size: no sizes given");
    std::vector<GapRow> rows;
    for (uint32_t n : sizes) {
        SaaConfig c = cfg;
        c.n = n;
        SaaReport report = run_saa(inst, c);
        GapRow row;
        row.n = n;
        row.upper = report.mean_upper;
        row.upper_ci = report.upper_ci_half;
        row.lower = report.lower;
        row.lower_ci = report.lower_ci_half;
        row.gap = report.gap;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cascopt
