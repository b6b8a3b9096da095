// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cascopt/preprocess.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cascopt {

namespace {

// Rebuilds a cascade from a grouping of its nodes. groups[g] lists old
// local indices merged into new node g; groups must be disjoint and are
// re-ordered canonically by smallest original id. Dropped nodes simply
// appear in no group. Edges are remapped, self-loops and duplicates
// removed. Consumes the input: unchanged per-node payloads are moved, not
// copied.
ReducedCascade regroup(ReducedCascade&& in, std::vector<std::vector<uint32_t>> groups) {
    for (auto& g : groups) std::sort(g.begin(), g.end());
    // node_ids are ascending, so a group's smallest member id is the id of
    // its smallest local index.
    std::sort(groups.begin(), groups.end(),
              [&](const auto& a, const auto& b) { return in.node_ids[a[0]] < in.node_ids[b[0]]; });

    ReducedCascade out;
    out.scenario_index = in.scenario_index;
    out.rng_seed = in.rng_seed;

    const std::size_t n_new = groups.size();
    std::vector<uint32_t> new_id(in.n_nodes(), UINT32_MAX);
    out.node_ids.resize(n_new);
    out.rewards.resize(n_new);
    out.action_sets.resize(n_new);
    out.is_source.resize(n_new);
    out.provenance.resize(n_new);
    for (uint32_t g = 0; g < n_new; ++g) {
        const auto& members = groups[g];
        if (members.size() == 1) {
            uint32_t old = members[0];
            new_id[old] = g;
            out.rewards[g] = in.rewards[old];
            out.is_source[g] = in.is_source[old];
            out.provenance[g] = std::move(in.provenance[old]);
            out.action_sets[g] = std::move(in.action_sets[old]);
            out.node_ids[g] = out.provenance[g].front();
            continue;
        }
        double reward = 0.0;
        uint8_t source = 0;
        std::size_t prov_size = 0;
        for (uint32_t old : members) prov_size += in.provenance[old].size();
        std::vector<NodeId> prov;
        prov.reserve(prov_size);
        for (uint32_t old : members) {
            new_id[old] = g;
            reward += in.rewards[old];
            source |= in.is_source[old];
            prov.insert(prov.end(), in.provenance[old].begin(), in.provenance[old].end());
        }
        std::sort(prov.begin(), prov.end());
        out.node_ids[g] = prov.front();
        out.rewards[g] = reward;
        out.is_source[g] = source;
        out.provenance[g] = std::move(prov);
        // action set of a merged group is the caller's business
    }

    auto& edges = in.edges;
    std::size_t kept = 0;
    for (const auto& [u, v] : edges) {
        uint32_t nu = new_id[u];
        uint32_t nv = new_id[v];
        if (nu == UINT32_MAX || nv == UINT32_MAX || nu == nv) continue;
        edges[kept++] = {nu, nv};
    }
    edges.resize(kept);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.edges = std::move(edges);
    out.finalize();
    return out;
}

bool is_subset(const std::vector<ActionId>& a, const std::vector<ActionId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<ActionId> intersect_sorted(const std::vector<ActionId>& a,
                                       const std::vector<ActionId>& b) {
    std::vector<ActionId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_acyclic(std::size_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
    std::vector<uint32_t> indeg(n, 0);
    std::vector<uint32_t> off(n + 1, 0);
    for (const auto& [u, v] : edges) {
        off[u + 1]++;
        indeg[v]++;
    }
    for (std::size_t v = 0; v < n; ++v) off[v + 1] += off[v];
    std::vector<uint32_t> dst(edges.size());
    {
        std::vector<uint32_t> cursor(off.begin(), off.end() - 1);
        for (const auto& [u, v] : edges) dst[cursor[u]++] = v;
    }
    std::vector<uint32_t> queue;
    queue.reserve(n);
    for (uint32_t v = 0; v < n; ++v) {
        if (indeg[v] == 0) queue.push_back(v);
    }
    std::size_t head = 0;
    while (head < queue.size()) {
        uint32_t u = queue[head++];
        for (uint32_t i = off[u]; i < off[u + 1]; ++i) {
            if (--indeg[dst[i]] == 0) queue.push_back(dst[i]);
        }
    }
    return queue.size() == n;
}

ReducedCascade prune_impl(ReducedCascade&& cascade) {
    const std::size_t n = cascade.n_nodes();

    std::vector<uint8_t> fwd(n, 0);
    std::vector<uint32_t> queue;
    queue.reserve(n);
    for (uint32_t v = 0; v < n; ++v) {
        if (cascade.is_source[v]) {
            fwd[v] = 1;
            queue.push_back(v);
        }
    }
    std::size_t head = 0;
    while (head < queue.size()) {
        uint32_t u = queue[head++];
        for (uint32_t i = cascade.out_offsets[u]; i < cascade.out_offsets[u + 1]; ++i) {
            uint32_t w = cascade.out_dst[i];
            if (!fwd[w]) {
                fwd[w] = 1;
                queue.push_back(w);
            }
        }
    }

    // Reverse adjacency as flat CSR.
    std::vector<uint32_t> in_off(n + 1, 0);
    for (const auto& [u, v] : cascade.edges) {
        (void)u;
        in_off[v + 1]++;
    }
    for (std::size_t v = 0; v < n; ++v) in_off[v + 1] += in_off[v];
    std::vector<uint32_t> in_src(cascade.edges.size());
    {
        std::vector<uint32_t> cursor(in_off.begin(), in_off.end() - 1);
        for (const auto& [u, v] : cascade.edges) in_src[cursor[v]++] = u;
    }
    std::vector<uint8_t> bwd(n, 0);
    queue.clear();
    for (uint32_t v = 0; v < n; ++v) {
        if (cascade.rewards[v] > 0.0) {
            bwd[v] = 1;
            queue.push_back(v);
        }
    }
    head = 0;
    while (head < queue.size()) {
        uint32_t u = queue[head++];
        for (uint32_t i = in_off[u]; i < in_off[u + 1]; ++i) {
            uint32_t w = in_src[i];
            if (!bwd[w]) {
                bwd[w] = 1;
                queue.push_back(w);
            }
        }
    }

    bool all_kept = true;
    std::vector<std::vector<uint32_t>> groups;
    groups.reserve(n);
    for (uint32_t v = 0; v < n; ++v) {
        if (fwd[v] && bwd[v]) {
            groups.push_back({v});
        } else {
            all_kept = false;
        }
    }
    if (all_kept) return std::move(cascade);
    return regroup(std::move(cascade), std::move(groups));
}

ReducedCascade collapse_sources_impl(ReducedCascade&& cascade) {
    const std::size_t n = cascade.n_nodes();

    std::vector<uint8_t> absorbed(n, 0);
    std::vector<uint32_t> queue;
    queue.reserve(n);
    for (uint32_t v = 0; v < n; ++v) {
        if (cascade.is_source[v] && cascade.is_free(v)) {
            absorbed[v] = 1;
            queue.push_back(v);
        }
    }
    std::size_t head = 0;
    while (head < queue.size()) {
        uint32_t u = queue[head++];
        for (uint32_t i = cascade.out_offsets[u]; i < cascade.out_offsets[u + 1]; ++i) {
            uint32_t w = cascade.out_dst[i];
            if (!absorbed[w] && cascade.is_free(w)) {
                absorbed[w] = 1;
                queue.push_back(w);
            }
        }
    }

    std::vector<uint32_t> merged;
    std::vector<std::vector<uint32_t>> groups;
    for (uint32_t v = 0; v < n; ++v) {
        if (absorbed[v]) {
            merged.push_back(v);
        } else {
            groups.push_back({v});
        }
    }
    if (merged.size() <= 1) return std::move(cascade);
    groups.push_back(std::move(merged));

    // Edges into the absorbed set are irrelevant (its nodes are reachable
    // under every strategy) and would otherwise become cycle-forming
    // in-edges of the super-source.
    std::erase_if(cascade.edges, [&](const auto& e) { return absorbed[e.second] != 0; });

    // The merged group's action set stays empty in regroup, which is
    // exactly "free"; its source flag is the OR over members.
    return regroup(std::move(cascade), std::move(groups));
}

ReducedCascade scc_quotient_impl(ReducedCascade&& cascade, ReduceStats* stats) {
    const std::size_t n = cascade.n_nodes();
    auto rel = implies_edges(cascade);

    // Implies adjacency as flat CSR.
    std::vector<uint32_t> off(n + 1, 0);
    for (const auto& [u, v] : rel) {
        (void)v;
        off[u + 1]++;
    }
    for (std::size_t v = 0; v < n; ++v) off[v + 1] += off[v];
    std::vector<uint32_t> dst(rel.size());
    {
        std::vector<uint32_t> cursor(off.begin(), off.end() - 1);
        for (const auto& [u, v] : rel) dst[cursor[u]++] = v;
    }

    // Iterative Tarjan; cascades can be deep chains.
    std::vector<uint32_t> comp(n, UINT32_MAX);
    uint32_t next_comp = 0;
    {
        std::vector<uint32_t> index(n, UINT32_MAX), low(n, 0);
        std::vector<uint8_t> on_stack(n, 0);
        std::vector<uint32_t> stack;
        uint32_t next_index = 0;
        struct Frame {
            uint32_t v;
            uint32_t child;
        };
        std::vector<Frame> frames;
        for (uint32_t root = 0; root < n; ++root) {
            if (index[root] != UINT32_MAX) continue;
            frames.push_back({root, off[root]});
            while (!frames.empty()) {
                Frame& f = frames.back();
                uint32_t v = f.v;
                if (f.child == off[v]) {
                    index[v] = low[v] = next_index++;
                    stack.push_back(v);
                    on_stack[v] = 1;
                }
                bool descended = false;
                while (f.child < off[v + 1]) {
                    uint32_t w = dst[f.child++];
                    if (index[w] == UINT32_MAX) {
                        frames.push_back({w, off[w]});
                        descended = true;
                        break;
                    }
                    if (on_stack[w]) low[v] = std::min(low[v], index[w]);
                }
                if (descended) continue;
                if (low[v] == index[v]) {
                    while (true) {
                        uint32_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = next_comp;
                        if (w == v) break;
                    }
                    ++next_comp;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    Frame& parent = frames.back();
                    low[parent.v] = std::min(low[parent.v], low[v]);
                }
            }
        }
    }
    if (next_comp == n) return std::move(cascade);  // nothing to merge

    std::vector<std::vector<uint32_t>> members(next_comp);
    for (uint32_t v = 0; v < n; ++v) members[comp[v]].push_back(v);

    std::vector<std::vector<uint32_t>> groups;
    std::vector<std::pair<NodeId, std::vector<ActionId>>> merged_actions;
    groups.reserve(next_comp);
    for (auto& c : members) {
        if (c.size() == 1) {
            groups.push_back(std::move(c));
            continue;
        }
        // A merged node is purchasable by exactly the actions that
        // purchase every priced member. The intersection must itself be
        // some member's action set, otherwise a strategy could cover the
        // members with distinct actions that the merged node would not
        // recognize; such components stay unmerged.
        std::vector<ActionId> inter;
        bool have_priced = false;
        bool attained = false;
        for (uint32_t v : c) {
            if (cascade.is_free(v)) continue;
            if (!have_priced) {
                inter = cascade.action_sets[v];
                have_priced = true;
            } else {
                inter = intersect_sorted(inter, cascade.action_sets[v]);
            }
        }
        if (have_priced) {
            for (uint32_t v : c) {
                if (!cascade.is_free(v) && cascade.action_sets[v] == inter) {
                    attained = true;
                    break;
                }
            }
        }
        if (have_priced && (inter.empty() || !attained)) {
            if (stats) {
                if (inter.empty()) stats->empty_intersection_components++;
                stats->skipped_components++;
            }
            for (uint32_t v : c) groups.push_back({v});
            continue;
        }
        if (stats) stats->merged_components++;
        NodeId key = UINT32_MAX;
        for (uint32_t v : c) key = std::min(key, cascade.node_ids[v]);
        merged_actions.emplace_back(key, have_priced ? std::move(inter)
                                                     : std::vector<ActionId>{});
        groups.push_back(std::move(c));
    }
    if (groups.size() == n) return std::move(cascade);

    // Contracting implies-SCCs of a DAG almost always yields a DAG; if an
    // exotic interleaving would produce a cycle, skip the pass for this
    // cascade rather than hand a cyclic scenario to the MIP. Checked on
    // the tentative quotient before anything is moved.
    if (is_acyclic(n, cascade.edges)) {
        std::vector<uint32_t> group_of(n, 0);
        for (uint32_t g = 0; g < groups.size(); ++g) {
            for (uint32_t v : groups[g]) group_of[v] = g;
        }
        std::vector<std::pair<uint32_t, uint32_t>> quotient_edges;
        quotient_edges.reserve(cascade.n_edges());
        for (const auto& [u, v] : cascade.edges) {
            if (group_of[u] != group_of[v]) {
                quotient_edges.emplace_back(group_of[u], group_of[v]);
            }
        }
        if (!is_acyclic(groups.size(), quotient_edges)) {
            if (stats) stats->cyclic_quotient_fallback = true;
            return std::move(cascade);
        }
    }

    ReducedCascade out = regroup(std::move(cascade), std::move(groups));
    // regroup moved singleton action sets; merged groups get theirs by
    // representative id.
    for (auto& [key, actions] : merged_actions) {
        auto it = std::lower_bound(out.node_ids.begin(), out.node_ids.end(), key);
        out.action_sets[static_cast<std::size_t>(it - out.node_ids.begin())] =
            std::move(actions);
    }
    return out;
}

}  // namespace

ReducedCascade from_sample(const CascadeSample& sample) {
    ReducedCascade out;
    static_cast<CascadeSample&>(out) = sample;
    out.provenance.reserve(sample.n_nodes());
    for (NodeId id : sample.node_ids) out.provenance.push_back({id});
    return out;
}

ReducedCascade prune(const ReducedCascade& cascade) {
    return prune_impl(ReducedCascade(cascade));
}

ReducedCascade collapse_sources(const ReducedCascade& cascade) {
    return collapse_sources_impl(ReducedCascade(cascade));
}

std::vector<std::pair<uint32_t, uint32_t>> implies_edges(const ReducedCascade& cascade) {
    const std::size_t n = cascade.n_nodes();
    std::vector<std::pair<uint32_t, uint32_t>> rel;
    rel.reserve(cascade.n_edges());

    // Case 1: a live edge (u,v) where reaching u forces v to be reachable:
    // v needs no purchase, or every action purchasing u also purchases v
    // and u itself is priced (a free u says nothing about v's purchase).
    for (const auto& [u, v] : cascade.edges) {
        if (cascade.is_free(v) ||
            (!cascade.is_free(u) && is_subset(cascade.action_sets[u], cascade.action_sets[v]))) {
            rel.emplace_back(u, v);
        }
    }

    // Case 2: u's only in-edge comes from v, so any path reaching u passes
    // through v. Does not apply to sources, which need no path.
    std::vector<uint32_t> indeg(n, 0);
    std::vector<uint32_t> only_pred(n, UINT32_MAX);
    for (const auto& [u, v] : cascade.edges) {
        indeg[v]++;
        only_pred[v] = u;
    }
    for (uint32_t u = 0; u < n; ++u) {
        if (indeg[u] == 1 && !cascade.is_source[u]) rel.emplace_back(u, only_pred[u]);
    }

    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    return rel;
}

ReducedCascade scc_quotient(const ReducedCascade& cascade, ReduceStats* stats) {
    return scc_quotient_impl(ReducedCascade(cascade), stats);
}

ReducedCascade reduce(ReducedCascade&& cascade, ReduceStats* stats) {
    ReducedCascade cur = std::move(cascade);
    if (stats) {
        stats->nodes_in = static_cast<uint32_t>(cur.n_nodes());
        stats->edges_in = static_cast<uint32_t>(cur.n_edges());
        stats->stages.push_back({"input", stats->nodes_in, stats->edges_in});
    }
    while (true) {
        std::size_t nodes_before = cur.n_nodes();
        std::size_t edges_before = cur.n_edges();
        if (stats) stats->rotations++;

        cur = prune_impl(std::move(cur));
        if (stats) {
            stats->stages.push_back({"prune", static_cast<uint32_t>(cur.n_nodes()),
                                     static_cast<uint32_t>(cur.n_edges())});
        }
        cur = collapse_sources_impl(std::move(cur));
        if (stats) {
            stats->stages.push_back({"collapse_sources", static_cast<uint32_t>(cur.n_nodes()),
                                     static_cast<uint32_t>(cur.n_edges())});
        }
        cur = scc_quotient_impl(std::move(cur), stats);
        if (stats) {
            stats->stages.push_back({"scc_quotient", static_cast<uint32_t>(cur.n_nodes()),
                                     static_cast<uint32_t>(cur.n_edges())});
        }

        if (cur.n_nodes() == nodes_before && cur.n_edges() == edges_before) break;
    }
    if (stats) {
        stats->nodes_out = static_cast<uint32_t>(cur.n_nodes());
        stats->edges_out = static_cast<uint32_t>(cur.n_edges());
    }
    return cur;
}

ReducedCascade reduce(const ReducedCascade& cascade, ReduceStats* stats) {
    return reduce(ReducedCascade(cascade), stats);
}

ReducedCascade reduce(const CascadeSample& sample, ReduceStats* stats) {
    return reduce(from_sample(sample), stats);
}

ReducedCascade commit_action(const ReducedCascade& cascade, ActionId l) {
    ReducedCascade cur = cascade;
    // A node listed under l is now purchased outright, so it joins the
    // free substrate even if other actions also list it.
    for (auto& as : cur.action_sets) {
        if (std::binary_search(as.begin(), as.end(), l)) as.clear();
    }
    return reduce(std::move(cur));
}

}  // namespace cascopt
