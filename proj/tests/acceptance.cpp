// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the exit status is the number of failed criteria. The cascopt binary
// path must be passed as argv[1] (used by the determinism criterion).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cascopt/instances.hpp"
#include "cascopt/json_io.hpp"
#include "cascopt/mip.hpp"
#include "cascopt/rng.hpp"
#include "cascopt/saa.hpp"
#include "support/random_instances.hpp"

using namespace cascopt;
using cascopt::testing::RandomSpec;
using cascopt::testing::all_strategies;
using cascopt::testing::random_instance;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<double> costs_of(const Instance& inst) {
    std::vector<double> costs;
    for (const auto& a : inst.actions) costs.push_back(a.cost);
    return costs;
}

MipModel model_from(const Instance& inst, uint32_t n, uint64_t seed, double budget) {
    std::vector<ReducedCascade> cascades;
    for (uint32_t k = 0; k < n; ++k) {
        cascades.push_back(reduce(sample_cascade(inst, static_cast<int32_t>(k), seed)));
    }
    return build_mip(std::move(cascades), costs_of(inst), budget);
}

// ---------------------------------------------------------------- criterion 1

bool criterion1_figure2() {
    auto t0 = clock_type::now();
    bool ok = true;

    Instance fig10 = figure2(10);
    for (auto variant : {GreedyVariant::uniform_cost, GreedyVariant::cost_benefit}) {
        GreedyConfig cfg;
        cfg.variant = variant;
        cfg.mode = EvalMode::reuse;
        cfg.n_cascades = 4;
        cfg.budget = 2.0;
        cfg.seed = 1;
        GreedyResult res = greedy_select(fig10, cfg);
        ok &= res.estimated_value == 4.0;
    }
    SolveResult exact10 = solve_exact(model_from(fig10, 1, 1, 2.0));
    ok &= exact10.best_value == 11.0;

    std::vector<double> gaps;
    for (uint32_t c : {4u, 10u, 100u}) {
        Instance fig = figure2(c);
        SolveResult exact = solve_exact(model_from(fig, 1, 1, 2.0));
        GreedyConfig cfg;
        cfg.mode = EvalMode::reuse;
        cfg.n_cascades = 2;
        cfg.budget = 2.0;
        cfg.seed = 1;
        GreedyResult greedy = greedy_select(fig, cfg);
        ok &= exact.best_value == static_cast<double>(c + 1);
        ok &= greedy.estimated_value == 4.0;
        gaps.push_back(exact.best_value - greedy.estimated_value);
    }
    // gap(c) = c - 3: linear with unit slope.
    ok &= gaps[0] == 1.0 && gaps[1] == 7.0 && gaps[2] == 97.0;

    double secs = seconds_since(t0);
    ok &= secs < 1.0;
    std::cout << (ok ? "PASS" : "FAIL")
              << " criterion 1: figure-2 exact numbers (greedy 4, exact c+1, linear gap) ["
              << secs << "s]\n";
    return ok;
}

// ---------------------------------------------------------------- criterion 2

bool criterion2_mip_enumeration() {
    auto t0 = clock_type::now();
    bool ok = true;
    for (uint64_t seed = 0; seed < 50; ++seed) {
        RandomSpec spec;
        spec.min_nodes = 10;
        spec.max_nodes = 80;
        spec.max_actions = 12;
        Instance inst = random_instance(spec, 7000 + seed);
        MipModel model = model_from(inst, 3, seed, inst.budget);
        SolveResult res = solve_exact(model);
        if (res.status != SolveResult::Status::optimal) {
            ok = false;
            continue;
        }
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& y : all_strategies(model.num_actions())) {
            double cost = 0.0;
            for (ActionId l = 0; l < model.num_actions(); ++l) {
                if (y.purchased[l]) cost += model.action_costs[l];
            }
            if (cost > model.budget) continue;
            best = std::max(best, fix_y_evaluate(model, y));
        }
        ok &= std::abs(res.best_value - best) <= 1e-9;
    }
    double secs = seconds_since(t0);
    ok &= secs < 120.0;
    std::cout << (ok ? "PASS" : "FAIL")
              << " criterion 2: solve_exact equals 2^L enumeration on 50 random instances ["
              << secs << "s]\n";
    return ok;
}

// ---------------------------------------------------------------- criterion 3

bool criterion3_preprocessing() {
    auto t0 = clock_type::now();
    bool ok = true;
    for (uint64_t seed = 0; seed < 200; ++seed) {
        RandomSpec spec;
        spec.min_nodes = 8;
        spec.max_nodes = 60;
        spec.max_actions = 8;
        Instance inst = random_instance(spec, 8000 + seed);
        CascadeSample sample = sample_cascade(inst, 0, seed);
        ReducedCascade reduced = reduce(sample);
        for (const auto& y : all_strategies(inst.num_actions())) {
            if (evaluate_on_sample(sample, y) != evaluate_on_sample(reduced, y)) {
                ok = false;
                break;
            }
        }
        ReducedCascade twice = reduce(reduced);
        ok &= twice.node_ids == reduced.node_ids && twice.edges == reduced.edges &&
              twice.rewards == reduced.rewards && twice.action_sets == reduced.action_sets;
    }
    double secs = seconds_since(t0);
    ok &= secs < 120.0;
    std::cout << (ok ? "PASS" : "FAIL")
              << " criterion 3: reduce() is objective-preserving and idempotent on 200 "
                 "instances ["
              << secs << "s]\n";
    return ok;
}

// ---------------------------------------------------------------- criterion 4

bool criterion4_layered_fidelity() {
    auto t0 = clock_type::now();
    MetapopSpec spec;
    spec.patches = {{0.0, 0.0, true}, {1000.0, 0.0, false}};
    spec.extinction = {0.29, 0.29};
    spec.colonization = {{0, 1, 0.4}, {1, 0, 0.3}};
    spec.horizon = 3;
    Parcel parcel;
    parcel.patches = {0, 1};
    parcel.conserved = true;
    spec.parcels = {parcel};
    Instance layered = layered_graph(spec);

    const int runs = 10000;
    const uint32_t P = 2;
    std::vector<double> direct_hist(P + 1, 0.0), layered_hist(P + 1, 0.0);
    for (int r = 0; r < runs; ++r) {
        direct_hist[simulate_metapop_direct(spec, 404, r)] += 1.0;
        CascadeSample s = sample_cascade(layered, r, 505);
        uint32_t occupied = 0;
        for (NodeId id : s.node_ids) occupied += id >= P * 3 ? 1 : 0;
        layered_hist[occupied] += 1.0;
    }

    // Two-sample chi-square with pooled expectations; bins with pooled
    // expectation below 5 are merged into their neighbor.
    std::vector<std::pair<double, double>> bins;
    for (uint32_t i = 0; i <= P; ++i) bins.emplace_back(direct_hist[i], layered_hist[i]);
    for (std::size_t i = 0; i < bins.size();) {
        double pooled = (bins[i].first + bins[i].second) / 2.0;
        if (pooled < 5.0 && bins.size() > 1) {
            std::size_t j = i == 0 ? 1 : i - 1;
            bins[j].first += bins[i].first;
            bins[j].second += bins[i].second;
            bins.erase(bins.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    double stat = 0.0;
    for (const auto& [a, b] : bins) {
        double e = (a + b) / 2.0;
        stat += (a - e) * (a - e) / e + (b - e) * (b - e) / e;
    }
    std::map<std::size_t, double> crit{{1, 6.6349}, {2, 9.2103}, {3, 11.3449}};
    std::size_t df = bins.size() - 1;
    bool ok = df >= 1 && crit.count(df) && stat <= crit[df];
    double secs = seconds_since(t0);
    std::cout << (ok ? "PASS" : "FAIL")
              << " criterion 4: layered vs direct simulator chi-square at 1% (stat=" << stat
              << ", df=" << df << ") [" << secs << "s]\n";
    return ok;
}

// ---------------------------------------------------------------- criterion 5

Instance acceptance_spatial_instance() {
    SpatialParams params;
    params.n_patches = 100;
    params.n_parcels = 20;
    params.horizon = 10;
    params.seed = 2026;
    MetapopSpec spec = spatial_metapop(params);
    return layered_graph(spec);
}

double quarter_total_cost(const Instance& inst) {
    double total = 0.0;
    for (const auto& a : inst.actions) total += a.cost;
    return total * 0.25;
}

bool criterion5_bound_sandwich() {
    auto t0 = clock_type::now();
    Instance inst = acceptance_spatial_instance();
    double budget = quarter_total_cost(inst);

    int holds = 0;
    const int runs = 20;
    for (int r = 0; r < runs; ++r) {
        SaaConfig cfg;
        cfg.m = 10;
        cfg.n = 5;
        cfg.n_valid = 200;
        cfg.n_test = 200;
        cfg.budget = budget;
        cfg.seed = 600 + static_cast<uint64_t>(r);
        cfg.jobs = 4;
        SaaReport rep = run_saa(inst, cfg);
        double upper_stderr = rep.upper_ci_half / 1.959963984540054;
        double combined = std::sqrt(upper_stderr * upper_stderr +
                                    rep.lower_stderr * rep.lower_stderr);
        if (rep.mean_upper >= rep.lower - 2.0 * combined) ++holds;
    }
    double secs = seconds_since(t0);
    bool ok = holds >= 19 && secs < 600.0;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion 5: bound sandwich held in " << holds
              << "/20 runs [" << secs << "s]\n";
    return ok;
}

// ---------------------------------------------------------------- criterion 6

bool criterion6_gap_shrinkage() {
    auto t0 = clock_type::now();
    Instance inst = acceptance_spatial_instance();
    double budget = quarter_total_cost(inst);

    std::vector<double> rel_at_2, rel_at_20;
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        SaaConfig cfg;
        cfg.m = 10;
        cfg.n_valid = 200;
        cfg.n_test = 200;
        cfg.budget = budget;
        cfg.seed = 900 + seed;
        cfg.jobs = 4;
        auto rows = gap_vs_training_size(inst, {2, 5, 10, 20}, cfg);
        rel_at_2.push_back(rows.front().gap / rows.front().upper);
        rel_at_20.push_back(rows.back().gap / rows.back().upper);
    }
    std::sort(rel_at_2.begin(), rel_at_2.end());
    std::sort(rel_at_20.begin(), rel_at_20.end());
    double med2 = rel_at_2[2];
    double med20 = rel_at_20[2];
    // The curve has flattened by N=20; pilot runs put the gap well under
    // the 5% mark there.
    bool ok = med20 <= med2 && med20 < 0.05;
    double secs = seconds_since(t0);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion 6: median relative gap at N=20 (" << med20
              << ") <= at N=2 (" << med2 << ") [" << secs << "s]\n";
    return ok;
}

// ---------------------------------------------------------------- criterion 7

// Hand-placed geometry whose distant_reservoir relabeling forces the
// figure-2 pattern at landscape scale: cheap two-patch corridor parcels
// are the only route to a large free reservoir past 3*r0, while
// three-patch distractor parcels near the population dominate every
// myopic score but never add up to the corridor.
MetapopSpec reservoir_input_spec() {
    MetapopSpec spec;
    spec.kernel = Kernel{3000.0, 0.1, 7.69e-4};
    spec.horizon = 25;

    auto add_patch = [&](double x, double y, bool occupied) {
        spec.patches.push_back({x, y, occupied});
        return static_cast<uint32_t>(spec.patches.size() - 1);
    };
    auto add_parcel = [&](std::vector<uint32_t> patches) {
        Parcel p;
        p.patches = std::move(patches);
        spec.parcels.push_back(p);
    };

    // Population cluster.
    add_parcel({add_patch(0, 0, true), add_patch(400, 0, true), add_patch(0, 400, true),
                add_patch(400, 400, true)});
    // Distractor parcels: three patches each, right next to the sources.
    add_parcel({add_patch(0, 2600, false), add_patch(300, 2800, false),
                add_patch(-300, 2800, false)});
    add_parcel({add_patch(0, -2600, false), add_patch(300, -2800, false),
                add_patch(-300, -2800, false)});
    add_parcel({add_patch(-2600, 0, false), add_patch(-2800, 300, false),
                add_patch(-2800, -300, false)});
    add_parcel({add_patch(-1900, 1900, false), add_patch(-2100, 2200, false),
                add_patch(-2300, 1900, false)});
    // Corridor: patch pairs marching east, one short hop apart.
    add_parcel({add_patch(2800, 0, false), add_patch(3100, 150, false)});
    add_parcel({add_patch(5400, 0, false), add_patch(5700, 150, false)});
    add_parcel({add_patch(8000, 0, false), add_patch(8300, 150, false)});
    // Reservoir: a dense 16-patch block past 3*r0.
    std::vector<uint32_t> reservoir;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            reservoir.push_back(add_patch(10300.0 + 700.0 * i, -1000.0 + 700.0 * j, false));
        }
    }
    add_parcel(reservoir);

    spec.extinction.assign(spec.patches.size(), 0.2);
    return spec;
}

bool criterion7_myopia() {
    auto t0 = clock_type::now();
    MetapopSpec spec = distant_reservoir(reservoir_input_spec(), 31, 0.12);
    Instance inst = layered_graph(spec);

    // The designed budget: exactly the corridor (the priced 2-patch
    // parcels; distractors have 3 patches).
    double corridor_cost = 0.0;
    std::size_t n_priced = 0;
    for (const auto& parcel : spec.parcels) {
        if (!parcel.conserved) {
            ++n_priced;
            if (parcel.patches.size() == 2) corridor_cost += parcel.cost;
        }
    }
    double budget = corridor_cost;

    const uint32_t n_train = 30;
    const uint64_t train_seed = rng::derive(7, rng::Stream::training);
    MipModel model = model_from(inst, n_train, train_seed, budget);
    SolveResult exact = solve_exact(model);

    bool ok = exact.status == SolveResult::Status::optimal;
    for (auto variant : {GreedyVariant::uniform_cost, GreedyVariant::cost_benefit}) {
        GreedyConfig cfg;
        cfg.variant = variant;
        cfg.mode = EvalMode::reuse;
        cfg.n_cascades = n_train;
        cfg.budget = budget;
        cfg.seed = 7;  // same derived training stream as the exact solve
        GreedyResult greedy = greedy_select(inst, cfg);
        double greedy_on_pool = fix_y_evaluate(model, greedy.strategy);
        ok &= exact.best_value - greedy_on_pool > 0.0;
    }
    double secs = seconds_since(t0);
    std::cout << (ok ? "PASS" : "FAIL")
              << " criterion 7: exact strictly beats both greedy variants on the reservoir "
                 "instance (exact="
              << exact.best_value << ", priced parcels=" << n_priced << ") [" << secs << "s]\n";
    return ok;
}

// ---------------------------------------------------------------- criterion 8

// Kernel evaluated into an explicit colonization table with finite
// support. Keeps the landscape realistic while the instance graph stays
// sparse enough that scoring work, not coin flipping, dominates.
MetapopSpec truncate_kernel(MetapopSpec spec, double cutoff) {
    for (uint32_t i = 0; i < spec.patches.size(); ++i) {
        for (uint32_t j = 0; j < spec.patches.size(); ++j) {
            if (i != j && spec.distance(i, j) <= cutoff) {
                spec.colonization.push_back({i, j, spec.colonization_prob(i, j)});
            }
        }
    }
    spec.kernel.reset();
    return spec;
}

bool criterion8_preprocessing_speedup() {
    auto t0 = clock_type::now();
    SpatialParams params;
    params.n_patches = 450;
    params.n_parcels = 180;
    params.horizon = 25;
    params.width = 36000.0;
    params.occupancy_rate = 0.6;
    params.conserved_fraction = 0.35;
    params.seed = 8484;
    MetapopSpec spec = truncate_kernel(spatial_metapop(params), 2.0 * params.kernel.r0);
    Instance inst = layered_graph(spec);

    // The raw cascades must really be big.
    double avg_nodes = 0.0;
    const int probe = 4;
    for (int k = 0; k < probe; ++k) {
        avg_nodes += static_cast<double>(
            sample_cascade(inst, k, rng::derive(5, rng::Stream::training)).n_nodes());
    }
    avg_nodes /= probe;
    bool ok = avg_nodes >= 5000.0;

    double budget = 0.0;
    for (const auto& a : inst.actions) budget += a.cost;
    budget *= 0.42;

    auto run_mode = [&](EvalMode mode, double& wall) {
        GreedyConfig cfg;
        cfg.variant = GreedyVariant::cost_benefit;
        cfg.mode = mode;
        cfg.n_cascades = 12;
        cfg.budget = budget;
        cfg.seed = 5;
        auto t = clock_type::now();
        GreedyResult res = greedy_select(inst, cfg);
        wall = seconds_since(t);
        return res;
    };

    double wall_reuse = 0.0, wall_pre = 0.0, wall_repeat = 0.0;
    GreedyResult reuse = run_mode(EvalMode::reuse, wall_reuse);
    GreedyResult pre = run_mode(EvalMode::reuse_pre, wall_pre);
    GreedyResult repeat = run_mode(EvalMode::reuse_pre_repeat, wall_repeat);

    ok &= reuse.strategy.purchased == pre.strategy.purchased;
    ok &= reuse.strategy.purchased == repeat.strategy.purchased;
    ok &= reuse.trace.size() == pre.trace.size() &&
          reuse.trace.size() == repeat.trace.size();
    for (std::size_t i = 0; i < reuse.trace.size() && ok; ++i) {
        ok &= reuse.trace[i].action == pre.trace[i].action;
        ok &= reuse.trace[i].action == repeat.trace[i].action;
        ok &= std::abs(reuse.trace[i].score - pre.trace[i].score) <= 1e-9;
        ok &= std::abs(reuse.trace[i].score - repeat.trace[i].score) <= 1e-9;
    }
    ok &= wall_pre <= 0.5 * wall_reuse;
    ok &= wall_repeat <= wall_pre;

    double secs = seconds_since(t0);
    std::cout << (ok ? "PASS" : "FAIL")
              << " criterion 8: preprocessing speedup (avg cascade nodes=" << avg_nodes
              << ", reuse=" << wall_reuse << "s, +pre=" << wall_pre
              << "s, +repeat=" << wall_repeat << "s) [" << secs << "s]\n";
    return ok;
}

// ---------------------------------------------------------------- criterion 9

bool criterion9_sampling_stats() {
    auto t0 = clock_type::now();
    bool ok = true;
    for (double p : {0.1, 0.5, 0.9}) {
        Instance inst;
        inst.n_nodes = 2;
        inst.base = {1, 1};
        inst.rewards = {0.0, 1.0};
        inst.edges = {{0, 1, p}};
        inst.sources = {0};
        inst.finalize();
        const int n = 10000;
        int live = 0;
        for (int k = 0; k < n; ++k) {
            live += sample_cascade(inst, k, 777).n_edges() == 1 ? 1 : 0;
        }
        double freq = static_cast<double>(live) / n;
        double sigma = std::sqrt(p * (1 - p) / n);
        ok &= std::abs(freq - p) <= 3.0 * sigma;
    }
    double secs = seconds_since(t0);
    std::cout << (ok ? "PASS" : "FAIL")
              << " criterion 9: single-edge live frequencies within 3 sigma [" << secs << "s]\n";
    return ok;
}

// --------------------------------------------------------------- criterion 10

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool criterion10_determinism(const std::string& tool) {
    auto t0 = clock_type::now();
    namespace fs = std::filesystem;
    fs::path base = fs::temp_directory_path() / "cascopt_acceptance";
    fs::remove_all(base);

    // The full pipeline, replayed per (run, jobs) into separate sandboxes.
    struct Variant {
        std::string name;
        uint32_t jobs;
    };
    std::vector<Variant> variants = {{"a1", 1}, {"b1", 1}, {"a2", 2}, {"b2", 2}};
    std::vector<std::vector<std::string>> outputs;

    for (const auto& v : variants) {
        fs::path dir = base / v.name;
        fs::create_directories(dir);
        std::string jobs = std::to_string(v.jobs);
        std::vector<std::string> cmds = {
            " gen spatial --patches 40 --parcels 8 --horizon 6 --seed 5 --budget 8"
            " --out " + (dir / "inst.json").string(),
            " sample --instance " + (dir / "inst.json").string() +
                " --n 4 --seed 9 --jobs " + jobs + " --out-prefix " +
                (dir / "cascade_").string(),
            " preprocess --cascades " + (dir / "cascade_0000.json").string() + " " +
                (dir / "cascade_0001.json").string() + " " +
                (dir / "cascade_0002.json").string() + " " +
                (dir / "cascade_0003.json").string() + " --out-dir " + dir.string() +
                " --stats " + (dir / "stats.json").string() + " --jobs " + jobs,
            " solve saa --instance " + (dir / "inst.json").string() +
                " --budget 8 --m 2 --n 2 --n-valid 20 --n-test 20 --seed 11 --jobs " + jobs +
                " --export-mps " + (dir / "model.mps").string() + " --out " +
                (dir / "report.json").string(),
            " solve greedy --instance " + (dir / "inst.json").string() +
                " --variant cb --mode reuse+pre+repeat --n 4 --budget 8 --seed 11 --jobs " +
                jobs + " --out " + (dir / "strategy.json").string(),
            " evaluate --instance " + (dir / "inst.json").string() + " --strategy " +
                (dir / "strategy.json").string() + " --n-test 30 --seed 13 --out " +
                (dir / "estimate.json").string(),
            " sweep --instance " + (dir / "inst.json").string() +
                " --budgets 0,8 --methods saa,greedy-uc,greedy-cb --m 1 --n 2 --n-valid 10"
                " --n-test 10 --greedy-n 3 --seed 17 --jobs " + jobs + " --out " +
                (dir / "sweep.csv").string(),
            " gapcurve --instance " + (dir / "inst.json").string() +
                " --sizes 1,2 --budget 8 --m 2 --n-valid 10 --n-test 10 --seed 19 --jobs " +
                jobs + " --out " + (dir / "gapcurve.csv").string(),
        };
        for (const auto& cmd : cmds) {
            int rc = std::system((tool + cmd + " > /dev/null 2>&1").c_str());
            if (rc != 0) {
                std::cout << "FAIL criterion 10: command failed: " << cmd << "\n";
                return false;
            }
        }
        std::vector<std::string> files = {"inst.json",         "cascade_0000.json",
                                          "cascade_0003.json", "reduced_cascade_0001.json",
                                          "stats.json",        "report.json",
                                          "model.rep0.mps",    "model.rep1.mps",
                                          "strategy.json",     "estimate.json",
                                          "sweep.csv",         "gapcurve.csv"};
        std::vector<std::string> contents;
        for (const auto& f : files) contents.push_back(slurp(dir / f));
        outputs.push_back(std::move(contents));
    }

    bool ok = true;
    for (std::size_t v = 1; v < outputs.size(); ++v) {
        for (std::size_t f = 0; f < outputs[0].size(); ++f) {
            if (outputs[v][f] != outputs[0][f] || outputs[0][f].empty()) ok = false;
        }
    }
    fs::remove_all(base);
    double secs = seconds_since(t0);
    std::cout << (ok ? "PASS" : "FAIL")
              << " criterion 10: byte-identical pipeline outputs across reruns and --jobs ["
              << secs << "s]\n";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::string tool = argc > 1 ? argv[1] : "";
    int failures = 0;
    failures += criterion1_figure2() ? 0 : 1;
    failures += criterion2_mip_enumeration() ? 0 : 1;
    failures += criterion3_preprocessing() ? 0 : 1;
    failures += criterion4_layered_fidelity() ? 0 : 1;
    failures += criterion5_bound_sandwich() ? 0 : 1;
    failures += criterion6_gap_shrinkage() ? 0 : 1;
    failures += criterion7_myopia() ? 0 : 1;
    failures += criterion8_preprocessing_speedup() ? 0 : 1;
    failures += criterion9_sampling_stats() ? 0 : 1;
    if (tool.empty()) {
        std::cout << "FAIL criterion 10: path to the cascopt binary was not provided\n";
        failures += 1;
    } else {
        failures += criterion10_determinism(tool) ? 0 : 1;
    }
    if (failures == 0) {
        std::cout << "ALL CRITERIA PASSED\n";
    } else {
        std::cout << "FAILED CRITERIA: " << failures << "\n";
    }
    return failures;
}
