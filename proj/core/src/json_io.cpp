// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cascopt/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace cascopt {

using json = nlohmann::json;

namespace {

json metapop_to_block(const MetapopSpec& spec) {
    json block;
    json positions = json::array();
    json occupied = json::array();
    for (uint32_t i = 0; i < spec.patches.size(); ++i) {
        positions.push_back({spec.patches[i].x, spec.patches[i].y});
        if (spec.patches[i].occupied) occupied.push_back(i);
    }
    block["positions"] = positions;
    block["occupied"] = occupied;
    block["extinction"] = spec.extinction;
    if (spec.kernel) {
        block["kernel"] = {{"r0", spec.kernel->r0},
                           {"alpha", spec.kernel->alpha},
                           {"gamma", spec.kernel->gamma}};
    }
    if (!spec.colonization.empty()) {
        json col = json::array();
        for (const auto& e : spec.colonization) col.push_back({e.from, e.to, e.prob});
        block["colonization"] = col;
    }
    block["horizon"] = spec.horizon;
    json parcels = json::array();
    for (const auto& p : spec.parcels) {
        parcels.push_back(
            {{"patches", p.patches}, {"conserved", p.conserved}, {"cost", p.cost}});
    }
    block["parcels"] = parcels;
    return block;
}

MetapopSpec metapop_from_block(const json& block) {
    MetapopSpec spec;
    const auto& positions = block.at("positions");
    spec.patches.resize(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        spec.patches[i].x = positions[i].at(0).get<double>();
        spec.patches[i].y = positions[i].at(1).get<double>();
    }
    for (const auto& i : block.at("occupied")) {
        spec.patches.at(i.get<uint32_t>()).occupied = true;
    }
    spec.extinction = block.at("extinction").get<std::vector<double>>();
    if (block.contains("kernel")) {
        Kernel k;
        k.r0 = block["kernel"].at("r0").get<double>();
        k.alpha = block["kernel"].at("alpha").get<double>();
        k.gamma = block["kernel"].at("gamma").get<double>();
        spec.kernel = k;
    }
    if (block.contains("colonization")) {
        for (const auto& e : block["colonization"]) {
            spec.colonization.push_back(
                {e.at(0).get<uint32_t>(), e.at(1).get<uint32_t>(), e.at(2).get<double>()});
        }
    }
    spec.horizon = block.at("horizon").get<int>();
    for (const auto& p : block.at("parcels")) {
        Parcel parcel;
        parcel.patches = p.at("patches").get<std::vector<uint32_t>>();
        parcel.conserved = p.at("conserved").get<bool>();
        parcel.cost = p.at("cost").get<double>();
        spec.parcels.push_back(std::move(parcel));
    }
    return spec;
}

json scenario_to_json(const CascadeSample& sample) {
    json j;
    j["scenario"] = sample.scenario_index;
    j["seed"] = sample.rng_seed;
    j["nodes"] = sample.node_ids;
    json edges = json::array();
    for (const auto& [u, v] : sample.edges) edges.push_back({u, v});
    j["edges"] = edges;
    j["rewards"] = sample.rewards;
    j["actions"] = sample.action_sets;
    json sources = json::array();
    for (uint32_t v = 0; v < sample.is_source.size(); ++v) {
        if (sample.is_source[v]) sources.push_back(v);
    }
    j["sources"] = sources;
    return j;
}

void scenario_from_json(const json& j, CascadeSample& sample) {
    sample.scenario_index = j.at("scenario").get<int32_t>();
    sample.rng_seed = j.at("seed").get<uint64_t>();
    sample.node_ids = j.at("nodes").get<std::vector<NodeId>>();
    for (const auto& e : j.at("edges")) {
        sample.edges.emplace_back(e.at(0).get<uint32_t>(), e.at(1).get<uint32_t>());
    }
    sample.rewards = j.at("rewards").get<std::vector<double>>();
    sample.action_sets = j.at("actions").get<std::vector<std::vector<ActionId>>>();
    sample.is_source.assign(sample.node_ids.size(), 0);
    for (const auto& v : j.at("sources")) sample.is_source.at(v.get<uint32_t>()) = 1;
    sample.finalize();
}

json strategy_to_obj(const Strategy& y) {
    json j;
    j["n_actions"] = y.purchased.size();
    j["purchased"] = y.taken_ids();
    j["cost"] = y.cost;
    return j;
}

Strategy strategy_from_obj(const json& j) {
    Strategy y;
    y.purchased.assign(j.at("n_actions").get<std::size_t>(), 0);
    for (const auto& l : j.at("purchased")) y.purchased.at(l.get<ActionId>()) = 1;
    y.cost = j.at("cost").get<double>();
    return y;
}

std::string wrap_error(const char* what, const std::exception& e) {
    return std::string(what) + ": " + e.what();
}

}  // namespace

std::string instance_to_json(const Instance& inst, const MetapopSpec* metapop,
                             std::optional<uint64_t> seed) {
    json j;
    j["nodes"] = inst.n_nodes;
    json edges = json::array();
    for (const Edge& e : inst.edges) edges.push_back({e.src, e.dst, e.prob});
    j["edges"] = edges;
    json base = json::array();
    for (NodeId v = 0; v < inst.n_nodes; ++v) {
        if (inst.base[v]) base.push_back(v);
    }
    j["base_nodes"] = base;
    json actions = json::array();
    for (const Action& a : inst.actions) {
        actions.push_back({{"nodes", a.nodes}, {"cost", a.cost}});
    }
    j["actions"] = actions;
    j["sources"] = inst.sources;
    json rewards = json::array();
    for (NodeId v = 0; v < inst.n_nodes; ++v) {
        if (inst.rewards[v] != 0.0) rewards.push_back({v, inst.rewards[v]});
    }
    j["rewards"] = rewards;
    j["budget"] = inst.budget;
    if (!inst.labels.empty()) j["labels"] = inst.labels;
    if (metapop) j["metapop"] = metapop_to_block(*metapop);
    if (seed) j["seed"] = *seed;
    return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        Instance inst;
        inst.n_nodes = j.at("nodes").get<uint32_t>();
        for (const auto& e : j.at("edges")) {
            inst.edges.push_back(
                {e.at(0).get<NodeId>(), e.at(1).get<NodeId>(), e.at(2).get<double>()});
        }
        inst.base.assign(inst.n_nodes, 0);
        for (const auto& v : j.at("base_nodes")) inst.base.at(v.get<NodeId>()) = 1;
        for (const auto& a : j.at("actions")) {
            Action action;
            action.nodes = a.at("nodes").get<std::vector<NodeId>>();
            action.cost = a.at("cost").get<double>();
            inst.actions.push_back(std::move(action));
        }
        inst.sources = j.at("sources").get<std::vector<NodeId>>();
        inst.rewards.assign(inst.n_nodes, 0.0);
        for (const auto& r : j.at("rewards")) {
            inst.rewards.at(r.at(0).get<NodeId>()) = r.at(1).get<double>();
        }
        inst.budget = j.at("budget").get<double>();
        if (j.contains("labels")) inst.labels = j["labels"].get<std::vector<std::string>>();
        inst.finalize();
        return inst;
    } catch (const json::exception& e) {
        throw std::runtime_error(wrap_error("invalid instance JSON", e));
    } catch (const std::out_of_range& e) {
        throw std::runtime_error(wrap_error("invalid instance JSON: index out of range", e));
    }
}

std::optional<MetapopSpec> metapop_from_instance_json(const std::string& text) {
    try {
        json j = json::parse(text);
        if (!j.contains("metapop")) return std::nullopt;
        return metapop_from_block(j["metapop"]);
    } catch (const json::exception& e) {
        throw std::runtime_error(wrap_error("invalid metapop JSON", e));
    }
}

std::string cascade_to_json(const CascadeSample& sample) {
    return scenario_to_json(sample).dump() + "\n";
}

CascadeSample cascade_from_json(const std::string& text) {
    try {
        CascadeSample sample;
        scenario_from_json(json::parse(text), sample);
        return sample;
    } catch (const json::exception& e) {
        throw std::runtime_error(wrap_error("invalid cascade JSON", e));
    }
}

std::string reduced_to_json(const ReducedCascade& cascade) {
    json j = scenario_to_json(cascade);
    j["provenance"] = cascade.provenance;
    return j.dump() + "\n";
}

ReducedCascade reduced_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        ReducedCascade cascade;
        scenario_from_json(j, cascade);
        if (j.contains("provenance")) {
            cascade.provenance = j["provenance"].get<std::vector<std::vector<NodeId>>>();
        } else {
            for (NodeId id : cascade.node_ids) cascade.provenance.push_back({id});
        }
        return cascade;
    } catch (const json::exception& e) {
        throw std::runtime_error(wrap_error("invalid reduced cascade JSON", e));
    }
}

std::string strategy_to_json(const Strategy& y, std::optional<uint64_t> seed) {
    json j = strategy_to_obj(y);
    if (seed) j["seed"] = *seed;
    return j.dump(2) + "\n";
}

Strategy strategy_from_json(const std::string& text) {
    try {
        return strategy_from_obj(json::parse(text));
    } catch (const json::exception& e) {
        throw std::runtime_error(wrap_error("invalid strategy JSON", e));
    }
}

std::string estimate_to_json(const Estimate& est, std::optional<uint64_t> seed) {
    json j;
    j["mean"] = est.mean;
    j["stderr"] = est.stderr_;
    j["n"] = est.n;
    if (seed) j["seed"] = *seed;
    return j.dump(2) + "\n";
}

std::string saa_report_to_json(const SaaReport& report) {
    json j;
    j["seed"] = report.config.seed;
    j["config"] = {{"m", report.config.m},
                   {"n", report.config.n},
                   {"n_valid", report.config.n_valid},
                   {"n_test", report.config.n_test},
                   {"budget", report.config.budget}};
    json reps = json::array();
    for (const auto& rep : report.replications) {
        reps.push_back({{"upper_bound", rep.upper_bound},
                        {"training_value", rep.training_value},
                        {"validation_score", rep.validation_score},
                        {"status", to_string(rep.status)},
                        {"strategy", strategy_to_obj(rep.candidate)}});
    }
    j["replications"] = reps;
    j["mean_upper"] = report.mean_upper;
    j["upper_ci_half"] = report.upper_ci_half;
    j["selected"] = report.selected;
    j["strategy"] = strategy_to_obj(report.best);
    j["lower"] = report.lower;
    j["lower_stderr"] = report.lower_stderr;
    j["lower_ci_half"] = report.lower_ci_half;
    j["gap"] = report.gap;
    return j.dump(2) + "\n";
}

std::string reduce_stats_to_json(const std::vector<ReduceStats>& stats,
                                 std::optional<uint64_t> seed) {
    json j;
    if (seed) j["seed"] = *seed;
    json arr = json::array();
    for (const auto& s : stats) {
        json stages = json::array();
        for (const auto& st : s.stages) {
            stages.push_back({{"stage", st.stage}, {"nodes", st.nodes}, {"edges", st.edges}});
        }
        arr.push_back({{"nodes_in", s.nodes_in},
                       {"edges_in", s.edges_in},
                       {"nodes_out", s.nodes_out},
                       {"edges_out", s.edges_out},
                       {"rotations", s.rotations},
                       {"merged_components", s.merged_components},
                       {"skipped_components", s.skipped_components},
                       {"empty_intersection_components", s.empty_intersection_components},
                       {"cyclic_quotient_fallback", s.cyclic_quotient_fallback},
                       {"stages", stages}});
    }
    j["cascades"] = arr;
    return j.dump(2) + "\n";
}

std::string validation_report_to_json(const ValidationReport& report) {
    json j;
    j["ok"] = report.ok();
    j["errors"] = report.errors;
    j["warnings"] = report.warnings;
    return j.dump(2) + "\n";
}

}  // namespace cascopt
