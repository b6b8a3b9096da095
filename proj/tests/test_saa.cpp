// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "cascopt/instances.hpp"
#include "cascopt/json_io.hpp"
#include "cascopt/saa.hpp"

using namespace cascopt;

namespace {

SaaConfig small_cfg(double budget, uint64_t seed = 1) {
    SaaConfig cfg;
    cfg.m = 3;
    cfg.n = 2;
    cfg.n_valid = 20;
    cfg.n_test = 20;
    cfg.budget = budget;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_SUITE("saa") {

TEST_CASE("deterministic instance: upper equals lower, gap zero") {
    Instance inst = figure2(10);  // all probabilities are 1
    SaaReport report = run_saa(inst, small_cfg(2.0));
    CHECK(report.mean_upper == 11.0);
    CHECK(report.lower == 11.0);
    CHECK(report.gap == 0.0);
    CHECK(report.lower_stderr == 0.0);
    CHECK(report.upper_ci_half == 0.0);
}

TEST_CASE("a large replication protocol (M=50, N=10) runs") {
    Instance inst = figure2(4);
    SaaConfig cfg;
    cfg.m = 50;
    cfg.n = 10;
    cfg.n_valid = 500;
    cfg.n_test = 500;
    cfg.budget = 2.0;
    cfg.seed = 13;
    SaaReport report = run_saa(inst, cfg);
    CHECK(report.replications.size() == 50);
    CHECK(report.mean_upper == 5.0);
}

TEST_CASE("mean upper bound is exactly the replication mean") {
    Instance inst = figure2(6);
    SaaReport report = run_saa(inst, small_cfg(1.0, 5));
    double sum = 0.0;
    for (const auto& rep : report.replications) sum += rep.upper_bound;
    CHECK(report.mean_upper == sum / static_cast<double>(report.replications.size()));
}

TEST_CASE("selection maximizes the validation score, ties to the lowest index") {
    Instance inst = figure2(8);
    SaaReport report = run_saa(inst, small_cfg(2.0, 9));
    for (uint32_t i = 0; i < report.replications.size(); ++i) {
        CHECK(report.replications[report.selected].validation_score >=
              report.replications[i].validation_score);
        if (report.replications[i].validation_score ==
            report.replications[report.selected].validation_score) {
            CHECK(report.selected <= i);
        }
    }
}

TEST_CASE("reports are byte-identical across reruns and job counts") {
    Instance inst = figure2(5);
    SaaConfig cfg = small_cfg(2.0, 77);
    std::string a = saa_report_to_json(run_saa(inst, cfg));
    std::string b = saa_report_to_json(run_saa(inst, cfg));
    cfg.jobs = 4;
    std::string c = saa_report_to_json(run_saa(inst, cfg));
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("budget 0 sweep row: every method reports the no-purchase value") {
    Instance inst = figure2(7);
    auto rows = budget_sweep(inst, {0.0}, small_cfg(0.0, 3), SweepMethods{}, 5);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK(r.value == rows[0].value);
        CHECK(r.value == 0.0);  // the only free node carries no reward
    }
}

TEST_CASE("budget above total cost: every method buys everything") {
    Instance inst = figure2(7);
    auto rows = budget_sweep(inst, {10.0}, small_cfg(10.0, 3), SweepMethods{}, 5);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) CHECK(r.value == 12.0);  // 2+2+1+7
}

TEST_CASE("SAA sweep values are non-decreasing in budget (deterministic instance)") {
    Instance inst = figure2(9);
    SweepMethods methods;
    methods.greedy_uc = false;
    methods.greedy_cb = false;
    auto rows = budget_sweep(inst, {0.0, 1.0, 2.0, 3.0, 4.0}, small_cfg(0.0, 11), methods, 5);
    REQUIRE(rows.size() == 5);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].value >= rows[i - 1].value);
    // At the top budget everything is affordable.
    CHECK(rows.back().value == 14.0);
}

TEST_CASE("gapcurve emits one row per size with a valid bound ordering") {
    Instance inst = figure2(5);
    SaaConfig cfg = small_cfg(2.0, 21);
    auto rows = gap_vs_training_size(inst, {1, 2, 4}, cfg);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK(r.gap == r.upper - r.lower);
        CHECK(r.upper >= r.lower - 2.0 * (r.lower_ci / 1.959963984540054));
        CHECK(r.upper_ci >= 0.0);
        CHECK(r.lower_ci >= 0.0);
    }
}

}  // TEST_SUITE
