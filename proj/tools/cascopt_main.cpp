// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
//
// cascopt: generate instances, sample and compress training cascades, solve
// the scenario-averaged purchase problem exactly or greedily, and emit the
// CSV/JSON artifacts the plotting tooling consumes.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cascopt/instances.hpp"
#include "cascopt/json_io.hpp"
#include "cascopt/mip.hpp"
#include "cascopt/parallel.hpp"
#include "cascopt/rng.hpp"
#include "cascopt/saa.hpp"

namespace {

using namespace cascopt;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNoIncumbent = 3;

struct CliError {
    int code;
    std::string message;
};

void emit_error(int code, const std::string& message) {
    std::cerr << "{\"error\": {\"code\": " << code << ", \"message\": \""
              << message << "\"}}\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitUsage, "cannot open " + path};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw CliError{kExitUsage, "cannot write " + *path};
    out << text;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

Instance load_instance(const std::string& path) {
    Instance inst = instance_from_json(read_file(path));
    ValidationReport rep = validate(inst);
    if (!rep.ok()) {
        std::string msg = "instance failed validation: " + rep.errors.front();
        if (rep.errors.size() > 1) {
            msg += " (+" + std::to_string(rep.errors.size() - 1) + " more)";
        }
        throw CliError{kExitValidation, msg};
    }
    return inst;
}

std::string cascade_file(const std::string& prefix, uint32_t k) {
    std::ostringstream os;
    os << prefix << std::setw(4) << std::setfill('0') << k << ".json";
    return os.str();
}

// ---- gen ----------------------------------------------------------------

struct GenArgs {
    uint32_t c = 10;
    double budget = 2.0;
    SpatialParams spatial;
    double reservoir_fraction = 0.25;
    uint64_t seed = 1;
    std::optional<std::string> out;
};

int run_gen_figure2(const GenArgs& a) {
    Instance inst = figure2(a.c);
    inst.budget = a.budget;
    write_output(a.out, instance_to_json(inst, nullptr, a.seed));
    return kExitOk;
}

int run_gen_spatial(GenArgs a, bool reservoir) {
    a.spatial.seed = a.seed;
    MetapopSpec spec = spatial_metapop(a.spatial);
    if (reservoir) spec = distant_reservoir(spec, a.seed, a.reservoir_fraction);
    Instance inst = layered_graph(spec);
    inst.budget = a.budget;
    write_output(a.out, instance_to_json(inst, &spec, a.seed));
    return kExitOk;
}

// ---- sample / preprocess --------------------------------------------------

int run_sample(const std::string& instance_path, uint32_t n, uint64_t seed,
               const std::string& prefix, uint32_t jobs) {
    Instance inst = load_instance(instance_path);
    uint64_t stream = rng::derive(seed, rng::Stream::training);
    std::vector<std::string> payload(n);
    parallel_for(n, jobs, [&](std::size_t k) {
        payload[k] = cascade_to_json(sample_cascade(inst, static_cast<int32_t>(k), stream));
    });
    for (uint32_t k = 0; k < n; ++k) {
        write_output(cascade_file(prefix, k), payload[k]);
    }
    return kExitOk;
}

int run_preprocess(const std::vector<std::string>& cascade_paths, const std::string& out_dir,
                   const std::optional<std::string>& stats_path, uint32_t jobs) {
    if (cascade_paths.empty()) throw CliError{kExitUsage, "no cascade files given"};
    std::filesystem::create_directories(out_dir);
    std::vector<ReduceStats> stats(cascade_paths.size());
    std::vector<std::string> payload(cascade_paths.size());
    std::vector<std::string> errors(cascade_paths.size());
    parallel_for(cascade_paths.size(), jobs, [&](std::size_t i) {
        try {
            CascadeSample sample = cascade_from_json(read_file(cascade_paths[i]));
            ReducedCascade reduced = reduce(sample, &stats[i]);
            payload[i] = reduced_to_json(reduced);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        } catch (const CliError& e) {
            errors[i] = e.message;
        }
    });
    for (const auto& e : errors) {
        if (!e.empty()) throw CliError{kExitValidation, e};
    }
    for (std::size_t i = 0; i < cascade_paths.size(); ++i) {
        std::filesystem::path in(cascade_paths[i]);
        std::filesystem::path out =
            std::filesystem::path(out_dir) / ("reduced_" + in.filename().string());
        write_output(out.string(), payload[i]);
    }
    if (stats_path) write_output(*stats_path, reduce_stats_to_json(stats));
    return kExitOk;
}

// ---- solve ----------------------------------------------------------------

std::string mps_path_for_rep(const std::string& base, uint32_t m, uint32_t rep) {
    if (m == 1) return base;
    std::filesystem::path p(base);
    std::string stem = p.stem().string();
    std::string ext = p.extension().string();
    p.replace_filename(stem + ".rep" + std::to_string(rep) + ext);
    return p.string();
}

int run_solve_saa(const std::string& instance_path, SaaConfig cfg,
                  const std::optional<std::string>& export_mps,
                  const std::optional<std::string>& out) {
    Instance inst = load_instance(instance_path);
    if (export_mps) {
        std::vector<double> costs;
        for (const auto& a : inst.actions) costs.push_back(a.cost);
        for (uint32_t i = 0; i < cfg.m; ++i) {
            uint64_t seed = rng::derive(cfg.seed, rng::Stream::training, i);
            std::vector<ReducedCascade> cascades(cfg.n);
            for (uint32_t k = 0; k < cfg.n; ++k) {
                cascades[k] = reduce(sample_cascade(inst, static_cast<int32_t>(k), seed));
            }
            MipModel model = build_mip(std::move(cascades), costs, cfg.budget);
            export_standard(model, mps_path_for_rep(*export_mps, cfg.m, i));
        }
    }
    SaaReport report = run_saa(inst, cfg);
    write_output(out, saa_report_to_json(report));
    for (const auto& rep : report.replications) {
        if (rep.status == SolveResult::Status::bound_only) {
            emit_error(kExitNoIncumbent, "a replication hit the node limit with no incumbent");
            return kExitNoIncumbent;
        }
    }
    return kExitOk;
}

int run_solve_greedy(const std::string& instance_path, GreedyConfig cfg,
                     const std::optional<std::string>& trace_path,
                     const std::optional<std::string>& out, uint64_t seed) {
    Instance inst = load_instance(instance_path);
    GreedyResult res = greedy_select(inst, cfg);
    write_output(out, strategy_to_json(res.strategy, seed));
    if (trace_path) {
        std::ostringstream os;
        os << "# cascopt greedy-trace v1 seed=" << seed << " variant=" << to_string(cfg.variant)
           << " mode=" << to_string(cfg.mode) << "\n";
        os << "round,action,variant,score,cumulative_cost,wallclock_ms,pool_nodes,pool_edges\n";
        for (const auto& r : res.trace) {
            os << r.round << "," << r.action << "," << to_string(cfg.variant) << ","
               << fmt(r.score) << "," << fmt(r.cumulative_cost) << "," << fmt(r.wallclock_ms)
               << "," << r.pool_nodes << "," << r.pool_edges << "\n";
        }
        write_output(*trace_path, os.str());
    }
    return kExitOk;
}

// ---- evaluate / sweep / gapcurve -------------------------------------------

int run_evaluate(const std::string& instance_path, const std::string& strategy_path,
                 uint32_t n_test, uint64_t seed, const std::optional<std::string>& out) {
    Instance inst = load_instance(instance_path);
    Strategy y = strategy_from_json(read_file(strategy_path));
    if (y.purchased.size() != inst.num_actions()) {
        throw CliError{kExitValidation, "strategy dimension does not match the instance"};
    }
    Estimate est =
        estimate_objective(inst, y, n_test, rng::derive(seed, rng::Stream::testing));
    write_output(out, estimate_to_json(est, seed));
    return kExitOk;
}

int run_sweep(const std::string& instance_path, const std::vector<double>& budgets,
              const std::vector<std::string>& methods, SaaConfig cfg, uint32_t greedy_n,
              const std::optional<std::string>& out) {
    Instance inst = load_instance(instance_path);
    SweepMethods m{false, false, false};
    for (const auto& name : methods) {
        if (name == "saa") {
            m.saa = true;
        } else if (name == "greedy-uc") {
            m.greedy_uc = true;
        } else if (name == "greedy-cb") {
            m.greedy_cb = true;
        } else {
            throw CliError{kExitUsage, "unknown method: " + name};
        }
    }
    auto rows = budget_sweep(inst, budgets, cfg, m, greedy_n);
    std::ostringstream os;
    os << "# cascopt sweep v1 seed=" << cfg.seed << "\n";
    os << "budget,method,value,stderr,saa_upper_bound\n";
    for (const auto& r : rows) {
        os << fmt(r.budget) << "," << r.method << "," << fmt(r.value) << "," << fmt(r.stderr_)
           << ",";
        if (!std::isnan(r.saa_upper)) os << fmt(r.saa_upper);
        os << "\n";
    }
    write_output(out, os.str());
    return kExitOk;
}

int run_gapcurve(const std::string& instance_path, const std::vector<uint32_t>& sizes,
                 SaaConfig cfg, const std::optional<std::string>& out) {
    Instance inst = load_instance(instance_path);
    auto rows = gap_vs_training_size(inst, sizes, cfg);
    std::ostringstream os;
    os << "# cascopt gapcurve v1 seed=" << cfg.seed << "\n";
    os << "N,upper,upper_ci,lower,lower_ci,gap\n";
    for (const auto& r : rows) {
        os << r.n << "," << fmt(r.upper) << "," << fmt(r.upper_ci) << "," << fmt(r.lower) << ","
           << fmt(r.lower_ci) << "," << fmt(r.gap) << "\n";
    }
    write_output(out, os.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stochastic cascade spread maximization via network design"};
    app.require_subcommand(1);

    // gen ------------------------------------------------------------------
    GenArgs gen_args;
    std::string out_path;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->require_subcommand(1);

    auto* gen_fig2 = gen->add_subcommand("figure2", "four-action greedy-trap instance");
    gen_fig2->add_option("--c", gen_args.c, "payoff of the dependent action")->default_val(10);
    gen_fig2->add_option("--budget", gen_args.budget)->default_val(2.0);
    gen_fig2->add_option("--seed", gen_args.seed)->default_val(1);
    gen_fig2->add_option("--out", out_path, "output file (default stdout)");

    auto add_spatial_opts = [&](CLI::App* cmd) {
        cmd->add_option("--patches", gen_args.spatial.n_patches)->default_val(100);
        cmd->add_option("--parcels", gen_args.spatial.n_parcels)->default_val(20);
        cmd->add_option("--width", gen_args.spatial.width, "square side in meters")
            ->default_val(30000.0);
        cmd->add_option("--occupancy", gen_args.spatial.occupancy_rate)->default_val(0.5);
        cmd->add_option("--conserved", gen_args.spatial.conserved_fraction)->default_val(0.25);
        cmd->add_option("--r0", gen_args.spatial.kernel.r0)->default_val(3000.0);
        cmd->add_option("--alpha", gen_args.spatial.kernel.alpha)->default_val(0.1);
        cmd->add_option("--gamma", gen_args.spatial.kernel.gamma)->default_val(7.69e-4);
        cmd->add_option("--beta", gen_args.spatial.extinction)->default_val(0.29);
        cmd->add_option("--horizon", gen_args.spatial.horizon)->default_val(10);
        cmd->add_option("--cost-base", gen_args.spatial.cost_base)->default_val(1.0);
        cmd->add_option("--budget", gen_args.budget)->default_val(0.0);
        cmd->add_option("--seed", gen_args.seed)->default_val(1);
        cmd->add_option("--out", out_path, "output file (default stdout)");
    };
    auto* gen_spatial = gen->add_subcommand("spatial", "random spatial metapopulation");
    add_spatial_opts(gen_spatial);
    auto* gen_reservoir =
        gen->add_subcommand("reservoir", "spatial instance re-labeled with a distant reservoir");
    add_spatial_opts(gen_reservoir);
    gen_reservoir->add_option("--reservoir-fraction", gen_args.reservoir_fraction)
        ->default_val(0.25);

    // sample -----------------------------------------------------------------
    std::string instance_path, prefix = "cascade_";
    uint32_t n_samples = 10, jobs = 1;
    uint64_t seed = 1;
    auto* sample = app.add_subcommand("sample", "sample training cascades to files");
    sample->add_option("--instance", instance_path)->required();
    sample->add_option("--n", n_samples)->default_val(10);
    sample->add_option("--seed", seed)->default_val(1);
    sample->add_option("--out-prefix", prefix)->default_val("cascade_");
    sample->add_option("--jobs", jobs)->default_val(1);

    // preprocess ---------------------------------------------------------------
    std::vector<std::string> cascade_paths;
    std::string out_dir = ".";
    std::string stats_path;
    auto* preprocess = app.add_subcommand("preprocess", "reduce sampled cascades");
    preprocess->add_option("--cascades", cascade_paths, "cascade JSON files")->required();
    preprocess->add_option("--out-dir", out_dir)->default_val(".");
    preprocess->add_option("--stats", stats_path, "statistics JSON output");
    preprocess->add_option("--jobs", jobs)->default_val(1);

    // solve ---------------------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "solve for a purchase strategy");
    solve->require_subcommand(1);

    SaaConfig saa_cfg;
    std::string export_mps;
    auto* solve_saa = solve->add_subcommand("saa", "replicated sample-average exact solve");
    solve_saa->add_option("--instance", instance_path)->required();
    solve_saa->add_option("--budget", saa_cfg.budget)->required();
    solve_saa->add_option("--m", saa_cfg.m)->default_val(1);
    solve_saa->add_option("--n", saa_cfg.n)->default_val(10);
    solve_saa->add_option("--n-valid", saa_cfg.n_valid)->default_val(500);
    solve_saa->add_option("--n-test", saa_cfg.n_test)->default_val(500);
    solve_saa->add_option("--seed", saa_cfg.seed)->default_val(1);
    solve_saa->add_option("--node-limit", saa_cfg.node_limit);
    solve_saa->add_option("--export-mps", export_mps, "also export the replication models");
    solve_saa->add_option("--jobs", saa_cfg.jobs)->default_val(1);
    solve_saa->add_option("--out", out_path, "report file (default stdout)");

    GreedyConfig greedy_cfg;
    std::string variant_str = "uc", mode_str = "reuse";
    std::string trace_path;
    auto* solve_greedy = solve->add_subcommand("greedy", "greedy baseline");
    solve_greedy->add_option("--instance", instance_path)->required();
    solve_greedy->add_option("--variant", variant_str, "uc|cb")->default_val("uc");
    solve_greedy
        ->add_option("--mode", mode_str, "fresh|reuse|reuse+pre|reuse+pre+repeat")
        ->default_val("reuse");
    solve_greedy->add_option("--n", greedy_cfg.n_cascades)->default_val(100);
    solve_greedy->add_option("--budget", greedy_cfg.budget)->required();
    solve_greedy->add_option("--seed", greedy_cfg.seed)->default_val(1);
    solve_greedy->add_option("--trace", trace_path, "per-round trace CSV");
    solve_greedy->add_option("--jobs", greedy_cfg.jobs)->default_val(1);
    solve_greedy->add_option("--out", out_path, "strategy file (default stdout)");

    // evaluate --------------------------------------------------------------------
    std::string strategy_path;
    uint32_t n_test = 500;
    auto* evaluate = app.add_subcommand("evaluate", "Monte Carlo estimate of a strategy");
    evaluate->add_option("--instance", instance_path)->required();
    evaluate->add_option("--strategy", strategy_path)->required();
    evaluate->add_option("--n-test", n_test)->default_val(500);
    evaluate->add_option("--seed", seed)->default_val(1);
    evaluate->add_option("--out", out_path, "output file (default stdout)");

    // sweep --------------------------------------------------------------------
    std::vector<double> budgets;
    std::vector<std::string> methods{"saa", "greedy-uc", "greedy-cb"};
    uint32_t greedy_n = 100;
    auto* sweep = app.add_subcommand("sweep", "method comparison across budgets");
    sweep->add_option("--instance", instance_path)->required();
    sweep->add_option("--budgets", budgets)->required()->delimiter(',');
    sweep->add_option("--methods", methods)->delimiter(',');
    sweep->add_option("--m", saa_cfg.m)->default_val(1);
    sweep->add_option("--n", saa_cfg.n)->default_val(10);
    sweep->add_option("--n-valid", saa_cfg.n_valid)->default_val(500);
    sweep->add_option("--n-test", saa_cfg.n_test)->default_val(500);
    sweep->add_option("--greedy-n", greedy_n)->default_val(100);
    sweep->add_option("--seed", saa_cfg.seed)->default_val(1);
    sweep->add_option("--node-limit", saa_cfg.node_limit);
    sweep->add_option("--jobs", saa_cfg.jobs)->default_val(1);
    sweep->add_option("--out", out_path, "CSV file (default stdout)");

    // gapcurve --------------------------------------------------------------------
    std::vector<uint32_t> sizes;
    auto* gapcurve = app.add_subcommand("gapcurve", "bounds vs training size");
    gapcurve->add_option("--instance", instance_path)->required();
    gapcurve->add_option("--sizes", sizes)->required()->delimiter(',');
    gapcurve->add_option("--budget", saa_cfg.budget)->required();
    gapcurve->add_option("--m", saa_cfg.m)->default_val(10);
    gapcurve->add_option("--n-valid", saa_cfg.n_valid)->default_val(500);
    gapcurve->add_option("--n-test", saa_cfg.n_test)->default_val(500);
    gapcurve->add_option("--seed", saa_cfg.seed)->default_val(1);
    gapcurve->add_option("--node-limit", saa_cfg.node_limit);
    gapcurve->add_option("--jobs", saa_cfg.jobs)->default_val(1);
    gapcurve->add_option("--out", out_path, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        emit_error(kExitUsage, e.what());
        return kExitUsage;
    }

    auto out_opt = [&]() -> std::optional<std::string> {
        if (out_path.empty()) return std::nullopt;
        return out_path;
    };

    try {
        if (gen_fig2->parsed()) return run_gen_figure2({gen_args.c, gen_args.budget,
                                                        gen_args.spatial,
                                                        gen_args.reservoir_fraction,
                                                        gen_args.seed, out_opt()});
        if (gen_spatial->parsed() || gen_reservoir->parsed()) {
            GenArgs a = gen_args;
            a.out = out_opt();
            return run_gen_spatial(a, gen_reservoir->parsed());
        }
        if (sample->parsed()) return run_sample(instance_path, n_samples, seed, prefix, jobs);
        if (preprocess->parsed()) {
            std::optional<std::string> stats =
                stats_path.empty() ? std::nullopt : std::optional<std::string>(stats_path);
            return run_preprocess(cascade_paths, out_dir, stats, jobs);
        }
        if (solve_saa->parsed()) {
            std::optional<std::string> mps =
                export_mps.empty() ? std::nullopt : std::optional<std::string>(export_mps);
            return run_solve_saa(instance_path, saa_cfg, mps, out_opt());
        }
        if (solve_greedy->parsed()) {
            if (!parse_variant(variant_str, greedy_cfg.variant)) {
                throw CliError{kExitUsage, "unknown variant: " + variant_str};
            }
            if (!parse_mode(mode_str, greedy_cfg.mode)) {
                throw CliError{kExitUsage, "unknown mode: " + mode_str};
            }
            std::optional<std::string> trace =
                trace_path.empty() ? std::nullopt : std::optional<std::string>(trace_path);
            return run_solve_greedy(instance_path, greedy_cfg, trace, out_opt(),
                                    greedy_cfg.seed);
        }
        if (evaluate->parsed()) {
            return run_evaluate(instance_path, strategy_path, n_test, seed, out_opt());
        }
        if (sweep->parsed()) {
            return run_sweep(instance_path, budgets, methods, saa_cfg, greedy_n, out_opt());
        }
        if (gapcurve->parsed()) {
            return run_gapcurve(instance_path, sizes, saa_cfg, out_opt());
        }
        emit_error(kExitUsage, "no subcommand given");
        return kExitUsage;
    } catch (const CliError& e) {
        emit_error(e.code, e.message);
        return e.code;
    } catch (const std::exception& e) {
        emit_error(kExitValidation, e.what());
        return kExitValidation;
    }
}
