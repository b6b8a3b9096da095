// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cascopt/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cascopt {

void Instance::finalize() {
    if (rewards.size() != n_nodes) rewards.resize(n_nodes, 0.0);
    if (base.size() != n_nodes) base.resize(n_nodes, 0);

    node_actions.assign(n_nodes, {});
    for (ActionId l = 0; l < actions.size(); ++l) {
        for (NodeId v : actions[l].nodes) {
            node_actions.at(v).push_back(l);
        }
    }
    for (auto& a : node_actions) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

    out_offsets.assign(n_nodes + 1, 0);
    for (const Edge& e : edges) out_offsets.at(e.src + 1)++;
    for (uint32_t v = 0; v < n_nodes; ++v) out_offsets[v + 1] += out_offsets[v];
    out_edges.assign(edges.size(), 0);
    std::vector<uint32_t> cursor(out_offsets.begin(), out_offsets.end() - 1);
    for (uint32_t e = 0; e < edges.size(); ++e) {
        out_edges[cursor[edges[e].src]++] = e;
    }
}

std::size_t Strategy::count() const {
    std::size_t c = 0;
    for (uint8_t b : purchased) c += b != 0;
    return c;
}

std::vector<ActionId> Strategy::taken_ids() const {
    std::vector<ActionId> ids;
    for (ActionId l = 0; l < purchased.size(); ++l) {
        if (purchased[l]) ids.push_back(l);
    }
    return ids;
}

Strategy make_strategy(const Instance& inst, std::vector<uint8_t> bits) {
    if (bits.size() != inst.num_actions()) {
        throw std::invalid_argument("strategy dimension does not match action count");
    }
    Strategy y;
    y.purchased = std::move(bits);
    y.cost = 0.0;
    for (ActionId l = 0; l < y.purchased.size(); ++l) {
        if (y.purchased[l]) y.cost += inst.actions[l].cost;
    }
    return y;
}

Strategy empty_strategy(std::size_t n_actions) {
    Strategy y;
    y.purchased.assign(n_actions, 0);
    y.cost = 0.0;
    return y;
}

Strategy full_strategy(const Instance& inst) {
    return make_strategy(inst, std::vector<uint8_t>(inst.num_actions(), 1));
}

namespace {

std::string node_name(const Instance& inst, NodeId v) {
    std::ostringstream os;
    os << v;
    if (v < inst.labels.size() && !inst.labels[v].empty()) os << " (" << inst.labels[v] << ")";
    return os.str();
}

}  // namespace

ValidationReport validate(const Instance& inst) {
    ValidationReport rep;
    auto err = [&rep](const std::string& m) { rep.errors.push_back(m); };
    auto warn = [&rep](const std::string& m) { rep.warnings.push_back(m); };

    if (inst.budget < 0) err("budget is negative");
    if (inst.base.size() != inst.n_nodes) err("base flag vector has wrong size");
    if (inst.rewards.size() != inst.n_nodes) err("reward vector has wrong size");

    std::set<std::pair<NodeId, NodeId>> seen;
    for (const Edge& e : inst.edges) {
        if (e.src >= inst.n_nodes || e.dst >= inst.n_nodes) {
            std::ostringstream os;
            os << "edge (" << e.src << ", " << e.dst << "): endpoint out of range";
            err(os.str());
            continue;
        }
        if (!(e.prob >= 0.0 && e.prob <= 1.0)) {
            std::ostringstream os;
            os << "edge (" << e.src << ", " << e.dst << "): probability " << e.prob
               << " out of range";
            err(os.str());
        }
        if (!seen.insert({e.src, e.dst}).second) {
            std::ostringstream os;
            os << "duplicate edge (" << e.src << ", " << e.dst << ")";
            err(os.str());
        }
    }

    std::vector<uint8_t> covered(inst.n_nodes, 0);
    for (ActionId l = 0; l < inst.actions.size(); ++l) {
        const Action& a = inst.actions[l];
        if (a.cost < 0) {
            std::ostringstream os;
            os << "action " << l << ": negative cost " << a.cost;
            err(os.str());
        }
        for (NodeId v : a.nodes) {
            if (v >= inst.n_nodes) {
                std::ostringstream os;
                os << "action " << l << ": node " << v << " out of range";
                err(os.str());
                continue;
            }
            covered[v] = 1;
            if (inst.base.size() == inst.n_nodes && inst.base[v]) {
                std::ostringstream os;
                os << "action " << l << ": node " << node_name(inst, v)
                   << " is already free (redundant)";
                warn(os.str());
            }
        }
    }
    if (inst.base.size() == inst.n_nodes) {
        for (NodeId v = 0; v < inst.n_nodes; ++v) {
            if (!inst.base[v] && !covered[v]) {
                std::ostringstream os;
                os << "node " << node_name(inst, v) << " is neither free nor purchasable";
                err(os.str());
            }
        }
    }

    for (NodeId v : inst.sources) {
        if (v >= inst.n_nodes) {
            std::ostringstream os;
            os << "source " << v << " out of range";
            err(os.str());
        }
    }

    bool any_reward = false;
    for (NodeId v = 0; v < inst.rewards.size() && v < inst.n_nodes; ++v) {
        if (inst.rewards[v] < 0) {
            std::ostringstream os;
            os << "node " << node_name(inst, v) << ": negative reward";
            err(os.str());
        }
        if (inst.rewards[v] > 0) any_reward = true;
    }
    if (!any_reward) warn("no targets (all rewards are zero)");
    if (inst.sources.empty()) warn("no sources");

    return rep;
}

std::vector<uint8_t> purchased_nodes(const Instance& inst, const Strategy& y) {
    if (y.purchased.size() != inst.num_actions()) {
        throw std::out_of_range("strategy dimension does not match action count");
    }
    std::vector<uint8_t> in(inst.n_nodes, 0);
    for (NodeId v = 0; v < inst.n_nodes; ++v) in[v] = inst.base[v];
    for (ActionId l = 0; l < inst.actions.size(); ++l) {
        if (!y.purchased[l]) continue;
        for (NodeId v : inst.actions[l].nodes) in[v] = 1;
    }
    return in;
}

std::vector<NodeId> reachable(const Instance& inst,
                              const std::vector<uint8_t>& purchased,
                              const std::vector<NodeId>& sources) {
    std::vector<uint8_t> visited(inst.n_nodes, 0);
    std::deque<NodeId> queue;
    for (NodeId s : sources) {
        if (s < inst.n_nodes && purchased[s] && !visited[s]) {
            visited[s] = 1;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (uint32_t i = inst.out_offsets[u]; i < inst.out_offsets[u + 1]; ++i) {
            NodeId w = inst.edges[inst.out_edges[i]].dst;
            if (!visited[w] && purchased[w]) {
                visited[w] = 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<NodeId> out;
    for (NodeId v = 0; v < inst.n_nodes; ++v) {
        if (visited[v]) out.push_back(v);
    }
    return out;
}

Instance edge_purchase_gadget(const Instance& inst,
                              const std::vector<std::pair<NodeId, NodeId>>& purchasable_edges,
                              const std::vector<double>& costs) {
    if (purchasable_edges.size() != costs.size()) {
        throw std::invalid_argument("edge_purchase_gadget: one cost per edge required");
    }
    Instance out = inst;
    for (std::size_t i = 0; i < purchasable_edges.size(); ++i) {
        auto [v, w] = purchasable_edges[i];
        auto it = std::find_if(out.edges.begin(), out.edges.end(),
                               [&](const Edge& e) { return e.src == v && e.dst == w; });
        if (it == out.edges.end()) {
            std::ostringstream os;
            os << "edge_purchase_gadget: edge (" << v << ", " << w << ") not found";
            throw std::invalid_argument(os.str());
        }
        double p = it->prob;
        out.edges.erase(it);

        NodeId relay = out.n_nodes++;
        out.base.push_back(0);
        out.rewards.push_back(0.0);
        if (!out.labels.empty()) out.labels.push_back("");
        out.edges.push_back({v, relay, p});
        out.edges.push_back({relay, w, 1.0});
        out.actions.push_back({{relay}, costs[i]});
    }
    out.finalize();
    return out;
}

Instance source_purchase_gadget(const Instance& inst,
                                const std::vector<NodeId>& candidate_sources,
                                const std::vector<double>& costs) {
    if (candidate_sources.size() != costs.size()) {
        throw std::invalid_argument("source_purchase_gadget: one cost per candidate required");
    }
    std::set<NodeId> dedup(candidate_sources.begin(), candidate_sources.end());
    if (dedup.size() != candidate_sources.size()) {
        throw std::invalid_argument("source_purchase_gadget: duplicate candidates");
    }
    Instance out = inst;
    for (std::size_t i = 0; i < candidate_sources.size(); ++i) {
        NodeId target = candidate_sources[i];
        if (target >= inst.n_nodes) {
            throw std::invalid_argument("source_purchase_gadget: candidate out of range");
        }
        NodeId s = out.n_nodes++;
        out.base.push_back(0);
        out.rewards.push_back(0.0);
        if (!out.labels.empty()) out.labels.push_back("");
        out.edges.push_back({s, target, 1.0});
        out.sources.push_back(s);
        out.actions.push_back({{s}, costs[i]});
    }
    out.finalize();
    return out;
}

}  // namespace cascopt
