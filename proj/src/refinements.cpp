/*
 * Copyright 2026 The ppsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pps/refinements.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "pps/analyses.hpp"
#include "pps/scc.hpp"

namespace pps {

State merge(const State &s, const MergeSpec &spec)
{
    const ParityGame &g = s.current;
    const int n = g.node_count();
    if (spec.nodes.universe() != n) throw std::invalid_argument("merge: set universe mismatch");
    const std::vector<NodeId> members = spec.nodes.to_vector();
    if (members.size() < 2) throw std::invalid_argument("merge: need at least two nodes");

    bool has_exit = false;
    for (NodeId x : members)
        for (NodeId w : g.successors(x))
            if (!spec.nodes.test(w)) has_exit = true;
    if (!has_exit) throw std::invalid_argument("merge: merged node would be a dead-end");

    // Survivors keep their relative order; the merged node comes last.
    std::vector<NodeId> old_to_new(static_cast<size_t>(n), kNoNode);
    int kept = 0;
    for (NodeId v = 0; v < n; v++)
        if (!spec.nodes.test(v)) old_to_new[static_cast<size_t>(v)] = kept++;
    const NodeId merged = kept;
    const int nn = kept + 1;

    std::vector<Player> owners(static_cast<size_t>(nn));
    std::vector<int> colors(static_cast<size_t>(nn));
    std::vector<std::vector<NodeId>> succ(static_cast<size_t>(nn));
    std::vector<std::string> names(static_cast<size_t>(nn));

    std::vector<bool> merged_succ(static_cast<size_t>(nn), false);
    for (NodeId v = 0; v < n; v++) {
        NodeId nv = old_to_new[static_cast<size_t>(v)];
        if (nv == kNoNode) {
            for (NodeId w : g.successors(v))
                if (!spec.nodes.test(w))
                    merged_succ[static_cast<size_t>(old_to_new[static_cast<size_t>(w)])] = true;
            continue;
        }
        owners[static_cast<size_t>(nv)] = g.owner(v);
        colors[static_cast<size_t>(nv)] = g.color(v);
        names[static_cast<size_t>(nv)] = g.name(v);
        auto &sv = succ[static_cast<size_t>(nv)];
        bool into_merged = false;
        for (NodeId w : g.successors(v)) {
            if (spec.nodes.test(w)) into_merged = true;
            else sv.push_back(old_to_new[static_cast<size_t>(w)]);
        }
        if (into_merged) sv.push_back(merged);
    }
    owners[static_cast<size_t>(merged)] = spec.owner;
    colors[static_cast<size_t>(merged)] = spec.color;
    names[static_cast<size_t>(merged)] = "merge_" + std::to_string(s.merge_count);
    for (NodeId w = 0; w < kept; w++)
        if (merged_succ[static_cast<size_t>(w)]) succ[static_cast<size_t>(merged)].push_back(w);

    State out = s;
    out.current = ParityGame(std::move(owners), std::move(colors), std::move(succ),
                             std::move(names));
    out.merge_count = s.merge_count + 1;

    std::vector<std::vector<NodeId>> represents(static_cast<size_t>(nn));
    std::vector<NodeId> union_image;
    for (NodeId v = 0; v < n; v++) {
        NodeId nv = old_to_new[static_cast<size_t>(v)];
        if (nv == kNoNode) {
            const auto &img = s.represents[static_cast<size_t>(v)];
            union_image.insert(union_image.end(), img.begin(), img.end());
        } else {
            represents[static_cast<size_t>(nv)] = s.represents[static_cast<size_t>(v)];
        }
    }
    std::sort(union_image.begin(), union_image.end());
    represents[static_cast<size_t>(merged)] = std::move(union_image);
    out.represents = std::move(represents);
    return out;
}

State merge_sole_successor(const State &s)
{
    const ParityGame &g = s.current;
    for (NodeId v = 0; v < g.node_count(); v++) {
        if (g.out_degree(v) != 1) continue;
        const NodeId w = g.successors(v)[0];
        if (w == v) continue;
        if (g.color(v) < g.color(w)) continue;
        bool escapes = false;
        for (NodeId u : g.successors(w))
            if (u != v && u != w) escapes = true;
        if (!escapes) continue;
        MergeSpec spec{NodeSet::of(g.node_count(), {v, w}), g.owner(w), g.color(w)};
        return merge(s, spec);
    }
    return s;
}

State merge_scc_colorclass(const State &s, MsccExit exit_rule)
{
    const ParityGame &g = s.current;
    const int n = g.node_count();
    std::vector<int> colors = g.distinct_colors();
    for (auto it = colors.rbegin(); it != colors.rend(); ++it) {
        const int d = *it;
        const Player p = d % 2;
        NodeSet candidates(n);
        int pivot_count = 0;
        for (NodeId v = 0; v < n; v++)
            if (g.owner(v) == opponent(p) && g.color(v) >= d) {
                candidates.set(v);
                if (g.color(v) == d) pivot_count++;
            }
        if (pivot_count < 2) continue;

        SccDecomposition dec = sccs_of_subgraph(g, candidates);
        // Deterministic pick: qualifying components in order of their
        // smallest node.
        std::vector<size_t> order(dec.components.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return dec.components[a].front() < dec.components[b].front();
        });
        for (size_t ci : order) {
            NodeSet x(n);
            int size = 0;
            for (NodeId v : dec.components[ci])
                if (g.color(v) == d) {
                    x.set(v);
                    size++;
                }
            if (size < 2) continue;
            bool has_exit = false;
            for (NodeId v : x.to_vector())
                for (NodeId w : g.successors(v)) {
                    if (exit_rule == MsccExit::kBeyondSubgraph ? !candidates.test(w) : !x.test(w))
                        has_exit = true;
                }
            if (!has_exit) continue;
            return merge(s, MergeSpec{x, opponent(p), d});
        }
    }
    return s;
}

State remove_edge_conditional_fa(const State &s)
{
    const ParityGame &g = s.current;
    for (NodeId v = 0; v < g.node_count(); v++) {
        if (g.out_degree(v) <= 1) continue;
        for (NodeId w : g.successors(v)) {
            if (find_fatal_attractor(commit_edge(g, v, w))) {
                State out = s;
                out.current = remove_edge(g, v, w);
                return out;
            }
        }
    }
    return s;
}

namespace {

// Set of colors, indexed by rank in the distinct color list.
struct ColorMask {
    std::vector<std::uint64_t> words;

    explicit ColorMask(int k) : words((static_cast<size_t>(k) + 63) / 64, 0) {}

    bool test(int i) const { return (words[static_cast<size_t>(i) / 64] >> (i % 64)) & 1; }
    void set(int i) { words[static_cast<size_t>(i) / 64] |= std::uint64_t(1) << (i % 64); }
    bool empty() const
    {
        return std::all_of(words.begin(), words.end(), [](std::uint64_t w) { return w == 0; });
    }

    /// this |= other; reports whether anything was added.
    bool merge_from(const ColorMask &other)
    {
        bool changed = false;
        for (size_t i = 0; i < words.size(); i++) {
            std::uint64_t nw = words[i] | other.words[i];
            if (nw != words[i]) changed = true;
            words[i] = nw;
        }
        return changed;
    }

    /// Every member m becomes min(m, cap): bits above cap collapse onto it.
    ColorMask capped_at(int cap) const
    {
        ColorMask out(static_cast<int>(words.size()) * 64);
        out.words.resize(words.size());
        bool above = false;
        for (size_t i = 0; i < words.size(); i++) {
            int base = static_cast<int>(i) * 64;
            std::uint64_t w = words[i];
            if (base + 63 <= cap) {
                out.words[i] = w;
            } else if (base > cap) {
                if (w) above = true;
                out.words[i] = 0;
            } else {
                int keep = cap - base;  // bits [0, keep] stay
                std::uint64_t mask = keep >= 63 ? ~std::uint64_t(0)
                                                : ((std::uint64_t(1) << (keep + 1)) - 1);
                out.words[i] = w & mask;
                if (w & ~mask) above = true;
            }
        }
        if (above) out.set(cap);
        return out;
    }
};

struct SharedDescendantSearch {
    const ParityGame &g;
    ErSdPathRule rule;
    std::vector<int> colors;       // distinct, ascending
    std::vector<int> color_index;  // color value -> rank

    SharedDescendantSearch(const ParityGame &game, ErSdPathRule r) : g(game), rule(r)
    {
        colors = g.distinct_colors();
        color_index.assign(static_cast<size_t>(g.max_color()) + 1, -1);
        for (size_t i = 0; i < colors.size(); i++)
            color_index[static_cast<size_t>(colors[i])] = static_cast<int>(i);
    }

    int k() const { return static_cast<int>(colors.size()); }

    bool qualifies(Player q, NodeId a) const
    {
        if (g.owner(a) == q) return true;
        return rule != ErSdPathRule::kOwnedOnly && g.out_degree(a) == 1;
    }

    bool arrival_admissible(Player q, NodeId z) const
    {
        // The strict rule constrains every node on a path, the arrival
        // included; the other variants only constrain the walk up to it.
        return rule != ErSdPathRule::kOwnedOrForced || qualifies(q, z);
    }

    /// Achievable path colors to z for q-controlled walks, per start node.
    /// A banned edge is skipped everywhere along the walk.
    std::vector<ColorMask> achievable(Player q, NodeId z, NodeId banned_v = kNoNode,
                                      NodeId banned_w = kNoNode) const
    {
        const int n = g.node_count();
        std::vector<ColorMask> ach(static_cast<size_t>(n), ColorMask(k()));
        if (!arrival_admissible(q, z)) return ach;
        ach[static_cast<size_t>(z)].set(color_index[static_cast<size_t>(g.color(z))]);

        std::vector<bool> queued(static_cast<size_t>(n), false);
        std::vector<NodeId> queue{z};
        queued[static_cast<size_t>(z)] = true;
        while (!queue.empty()) {
            NodeId b = queue.back();
            queue.pop_back();
            queued[static_cast<size_t>(b)] = false;
            for (NodeId a : g.predecessors(b)) {
                if (!qualifies(q, a)) continue;
                if (a == banned_v && b == banned_w) continue;
                ColorMask derived = ach[static_cast<size_t>(b)].capped_at(
                    color_index[static_cast<size_t>(g.color(a))]);
                if (ach[static_cast<size_t>(a)].merge_from(derived) &&
                    !queued[static_cast<size_t>(a)]) {
                    queued[static_cast<size_t>(a)] = true;
                    queue.push_back(a);
                }
            }
        }
        return ach;
    }

    /// Exists c_v in a, c_w in b with c_v at-least-as-good-for-p as c_w:
    /// equivalently the p-best of a dominates the p-worst of b.
    bool dominates(const ColorMask &a, const ColorMask &b, Player p) const
    {
        std::optional<int> best, worst;
        for (int i = 0; i < k(); i++) {
            if (a.test(i) && (!best || pref_leq(p, colors[static_cast<size_t>(i)],
                                                colors[static_cast<size_t>(*best)])))
                best = i;
            if (b.test(i) && (!worst || pref_leq(p, colors[static_cast<size_t>(*worst)],
                                                 colors[static_cast<size_t>(i)])))
                worst = i;
        }
        if (!best || !worst) return false;
        return pref_leq(p, colors[static_cast<size_t>(*best)], colors[static_cast<size_t>(*worst)]);
    }
};

}  // namespace

State remove_edge_shared_descendant(const State &s, ErSdPathRule rule)
{
    const ParityGame &g = s.current;
    const int n = g.node_count();
    if (n == 0) return s;
    SharedDescendantSearch search(g, rule);

    // Achievable-color tables per (controller, descendant), built lazily.
    std::vector<std::optional<std::vector<ColorMask>>> cache[2];
    cache[0].resize(static_cast<size_t>(n));
    cache[1].resize(static_cast<size_t>(n));
    auto cached = [&](Player q, NodeId z) -> const std::vector<ColorMask> & {
        auto &slot = cache[q][static_cast<size_t>(z)];
        if (!slot) slot = search.achievable(q, z);
        return *slot;
    };

    for (NodeId v = 0; v < n; v++) {
        if (g.out_degree(v) <= 1) continue;
        const Player p = g.owner(v);  // v is on its own path and branches
        for (NodeId w : g.successors(v)) {
            if (w == v) continue;
            if (!search.qualifies(opponent(p), w)) continue;
            for (NodeId z = 0; z < n; z++) {
                if (z == v || z == w) continue;
                const ColorMask &from_w = cached(opponent(p), z)[static_cast<size_t>(w)];
                if (from_w.empty()) continue;
                // The unbanned table over-approximates the v side; use it
                // to skip hopeless candidates before the exact recompute.
                const ColorMask &from_v_super = cached(p, z)[static_cast<size_t>(v)];
                if (from_v_super.empty()) continue;
                if (!search.dominates(from_v_super, from_w, p)) continue;
                ColorMask from_v =
                    search.achievable(p, z, v, w)[static_cast<size_t>(v)];
                if (from_v.empty()) continue;
                if (search.dominates(from_v, from_w, p)) {
                    State out = s;
                    out.current = remove_edge(g, v, w);
                    return out;
                }
            }
        }
    }
    return s;
}

}  // namespace pps
