// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cascopt/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "cascopt/rng.hpp"

namespace cascopt {

double MetapopSpec::distance(uint32_t i, uint32_t j) const {
    double dx = patches[i].x - patches[j].x;
    double dy = patches[i].y - patches[j].y;
    return std::sqrt(dx * dx + dy * dy);
}

uint32_t MetapopSpec::neighbor_count(uint32_t i) const {
    if (!kernel) return 0;
    uint32_t c = 0;
    for (uint32_t j = 0; j < patches.size(); ++j) {
        if (j != i && distance(i, j) <= kernel->r0) ++c;
    }
    return c;
}

double MetapopSpec::colonization_prob(uint32_t i, uint32_t j) const {
    if (i == j) throw std::invalid_argument("colonization_prob: i == j");
    if (kernel) {
        return cascopt::colonization_prob(distance(i, j), kernel->r0, kernel->alpha,
                                          kernel->gamma, neighbor_count(i));
    }
    for (const auto& e : colonization) {
        if (e.from == i && e.to == j) return e.prob;
    }
    return 0.0;
}

double colonization_prob(double distance, double r0, double alpha, double gamma,
                         uint32_t neighbor_count_i) {
    double p;
    if (distance <= r0) {
        if (neighbor_count_i == 0) {
            throw std::invalid_argument(
                "colonization_prob: C_i = 0 although the candidate itself is within r0");
        }
        p = 1.0 / static_cast<double>(neighbor_count_i);
    } else {
        p = alpha * std::exp(-gamma * distance);
    }
    return std::clamp(p, 0.0, 1.0);
}

Instance layered_graph(const MetapopSpec& spec) {
    const uint32_t P = static_cast<uint32_t>(spec.patches.size());
    const int T = spec.horizon;
    if (T < 1) throw std::invalid_argument("layered_graph: horizon must be >= 1");
    if (spec.extinction.size() != P) {
        throw std::invalid_argument("layered_graph: extinction vector size mismatch");
    }

    std::vector<uint32_t> covered(P, 0);
    for (const Parcel& parcel : spec.parcels) {
        for (uint32_t i : parcel.patches) {
            if (i >= P) throw std::invalid_argument("layered_graph: parcel patch out of range");
            covered[i]++;
        }
    }
    for (uint32_t i = 0; i < P; ++i) {
        if (covered[i] != 1) {
            throw std::invalid_argument("layered_graph: parcels must partition the patches");
        }
    }

    Instance inst;
    inst.n_nodes = P * static_cast<uint32_t>(T + 1);
    inst.base.assign(inst.n_nodes, 0);
    inst.rewards.assign(inst.n_nodes, 0.0);

    // Dense colonization matrix once; the kernel is O(P) per query.
    std::vector<double> pmat(static_cast<std::size_t>(P) * P, 0.0);
    if (spec.kernel) {
        std::vector<uint32_t> nc(P);
        for (uint32_t i = 0; i < P; ++i) nc[i] = spec.neighbor_count(i);
        for (uint32_t i = 0; i < P; ++i) {
            for (uint32_t j = 0; j < P; ++j) {
                if (i == j) continue;
                pmat[static_cast<std::size_t>(i) * P + j] = colonization_prob(
                    spec.distance(i, j), spec.kernel->r0, spec.kernel->alpha,
                    spec.kernel->gamma, nc[i]);
            }
        }
    } else {
        for (const auto& e : spec.colonization) {
            if (e.from >= P || e.to >= P || e.from == e.to || e.prob < 0.0 || e.prob > 1.0) {
                throw std::invalid_argument("layered_graph: bad colonization entry");
            }
            pmat[static_cast<std::size_t>(e.from) * P + e.to] = e.prob;
        }
    }

    for (int t = 0; t < T; ++t) {
        for (uint32_t i = 0; i < P; ++i) {
            NodeId from = layered_node(spec, i, t);
            double survive = 1.0 - spec.extinction[i];
            if (survive > 0.0) {
                inst.edges.push_back({from, layered_node(spec, i, t + 1), survive});
            }
            for (uint32_t j = 0; j < P; ++j) {
                double p = pmat[static_cast<std::size_t>(i) * P + j];
                if (p > 0.0) {
                    inst.edges.push_back({from, layered_node(spec, j, t + 1), p});
                }
            }
        }
    }

    for (uint32_t i = 0; i < P; ++i) {
        if (spec.patches[i].occupied) inst.sources.push_back(layered_node(spec, i, 0));
        inst.rewards[layered_node(spec, i, T)] = 1.0;
    }

    for (const Parcel& parcel : spec.parcels) {
        if (parcel.conserved) {
            for (uint32_t i : parcel.patches) {
                for (int t = 0; t <= T; ++t) inst.base[layered_node(spec, i, t)] = 1;
            }
        } else {
            Action a;
            a.cost = parcel.cost;
            for (uint32_t i : parcel.patches) {
                for (int t = 0; t <= T; ++t) a.nodes.push_back(layered_node(spec, i, t));
            }
            std::sort(a.nodes.begin(), a.nodes.end());
            inst.actions.push_back(std::move(a));
        }
    }

    inst.budget = 0.0;
    inst.finalize();
    return inst;
}

void CascadeSample::finalize() {
    const std::size_t n = node_ids.size();
    out_offsets.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        (void)v;
        out_offsets[u + 1]++;
    }
    for (std::size_t v = 0; v < n; ++v) out_offsets[v + 1] += out_offsets[v];
    out_dst.assign(edges.size(), 0);
    std::vector<uint32_t> cursor(out_offsets.begin(), out_offsets.end() - 1);
    for (const auto& [u, v] : edges) out_dst[cursor[u]++] = v;
}

CascadeSample sample_cascade(const Instance& inst, int32_t scenario_index, uint64_t rng_seed) {
    std::vector<uint8_t> visited(inst.n_nodes, 0);
    std::deque<NodeId> queue;
    for (NodeId s : inst.sources) {
        if (!visited[s]) {
            visited[s] = 1;
            queue.push_back(s);
        }
    }

    std::vector<uint32_t> live;  // global edge indices
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (uint32_t i = inst.out_offsets[u]; i < inst.out_offsets[u + 1]; ++i) {
            uint32_t e = inst.out_edges[i];
            const Edge& edge = inst.edges[e];
            if (!rng::coin(rng_seed, static_cast<uint64_t>(scenario_index), e, edge.prob)) {
                continue;
            }
            live.push_back(e);
            if (!visited[edge.dst]) {
                visited[edge.dst] = 1;
                queue.push_back(edge.dst);
            }
        }
    }

    CascadeSample out;
    out.scenario_index = scenario_index;
    out.rng_seed = rng_seed;

    std::vector<uint32_t> local(inst.n_nodes, UINT32_MAX);
    for (NodeId v = 0; v < inst.n_nodes; ++v) {
        if (visited[v]) {
            local[v] = static_cast<uint32_t>(out.node_ids.size());
            out.node_ids.push_back(v);
        }
    }
    out.rewards.reserve(out.node_ids.size());
    out.action_sets.reserve(out.node_ids.size());
    out.is_source.assign(out.node_ids.size(), 0);
    for (NodeId v : out.node_ids) {
        out.rewards.push_back(inst.rewards[v]);
        out.action_sets.push_back(inst.is_free(v) ? std::vector<ActionId>{}
                                                  : inst.node_actions[v]);
    }
    for (NodeId s : inst.sources) out.is_source[local[s]] = 1;

    out.edges.reserve(live.size());
    for (uint32_t e : live) {
        out.edges.emplace_back(local[inst.edges[e].src], local[inst.edges[e].dst]);
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    out.finalize();
    return out;
}

double evaluate_on_sample(const CascadeSample& sample, const Strategy& y) {
    const std::size_t n = sample.n_nodes();
    auto active = [&](uint32_t v) {
        const auto& as = sample.action_sets[v];
        if (as.empty()) return true;
        for (ActionId l : as) {
            if (y.purchased[l]) return true;
        }
        return false;
    };

    std::vector<uint8_t> visited(n, 0);
    std::deque<uint32_t> queue;
    for (uint32_t v = 0; v < n; ++v) {
        if (sample.is_source[v] && active(v)) {
            visited[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        uint32_t u = queue.front();
        queue.pop_front();
        for (uint32_t i = sample.out_offsets[u]; i < sample.out_offsets[u + 1]; ++i) {
            uint32_t w = sample.out_dst[i];
            if (!visited[w] && active(w)) {
                visited[w] = 1;
                queue.push_back(w);
            }
        }
    }

    double total = 0.0;
    for (uint32_t v = 0; v < n; ++v) {
        if (visited[v]) total += sample.rewards[v];
    }
    return total;
}

Estimate estimate_objective(const Instance& inst, const Strategy& y, uint32_t n,
                            uint64_t rng_seed) {
    if (n < 1) throw std::invalid_argument("estimate_objective: n must be >= 1");
    std::vector<double> values(n);
    for (uint32_t k = 0; k < n; ++k) {
        values[k] = evaluate_on_sample(sample_cascade(inst, static_cast<int32_t>(k), rng_seed), y);
    }
    Estimate est;
    est.n = n;
    double sum = 0.0;
    for (double v : values) sum += v;
    est.mean = sum / n;
    if (n > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - est.mean) * (v - est.mean);
        est.stderr_ = std::sqrt(ss / (static_cast<double>(n) - 1.0) / n);
    }
    return est;
}

uint32_t simulate_metapop_direct(const MetapopSpec& spec, uint64_t rng_seed, uint64_t run_index) {
    const uint32_t P = static_cast<uint32_t>(spec.patches.size());
    std::vector<double> pmat(static_cast<std::size_t>(P) * P, 0.0);
    for (uint32_t i = 0; i < P; ++i) {
        for (uint32_t j = 0; j < P; ++j) {
            if (i != j) pmat[static_cast<std::size_t>(i) * P + j] = spec.colonization_prob(i, j);
        }
    }

    std::vector<uint8_t> occ(P, 0);
    for (uint32_t i = 0; i < P; ++i) occ[i] = spec.patches[i].occupied ? 1 : 0;

    // Simultaneous update: a patch stays occupied if its population
    // survives the step or any occupied patch colonizes it in that step.
    std::vector<uint8_t> next(P, 0);
    for (int t = 0; t < spec.horizon; ++t) {
        std::fill(next.begin(), next.end(), 0);
        for (uint32_t i = 0; i < P; ++i) {
            if (!occ[i]) continue;
            uint64_t step_key = rng::hash2(run_index, static_cast<uint64_t>(t));
            if (rng::coin(rng_seed, step_key, i, 1.0 - spec.extinction[i])) next[i] = 1;
            for (uint32_t j = 0; j < P; ++j) {
                double p = pmat[static_cast<std::size_t>(i) * P + j];
                if (p <= 0.0 || next[j]) continue;
                uint64_t pair_key = static_cast<uint64_t>(P) + static_cast<uint64_t>(i) * P + j;
                if (rng::coin(rng_seed, step_key, pair_key, p)) next[j] = 1;
            }
        }
        occ.swap(next);
    }

    uint32_t count = 0;
    for (uint8_t o : occ) count += o;
    return count;
}

}  // namespace cascopt
