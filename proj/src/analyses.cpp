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

#include "pps/analyses.hpp"

#include <algorithm>
#include <vector>

#include "pps/attractor.hpp"
#include "pps/scc.hpp"

namespace pps {

std::vector<int> compress_color_map(const std::vector<int> &sorted_colors)
{
    std::vector<int> target(sorted_colors.size());
    for (size_t i = 0; i < sorted_colors.size(); i++) {
        if (i == 0) {
            target[i] = sorted_colors[i] % 2;
        } else if (sorted_colors[i] % 2 == sorted_colors[i - 1] % 2) {
            target[i] = target[i - 1];
        } else {
            target[i] = target[i - 1] + 1;
        }
    }
    return target;
}

State scc_compress(const State &s)
{
    const ParityGame &g = s.current;
    std::vector<int> colors = g.distinct_colors();
    std::vector<int> target = compress_color_map(colors);
    if (colors == target) return s;

    std::vector<int> recolored(static_cast<size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); v++) {
        size_t i = static_cast<size_t>(
            std::lower_bound(colors.begin(), colors.end(), g.color(v)) - colors.begin());
        recolored[static_cast<size_t>(v)] = target[i];
    }
    State out = s;
    out.current = g.with_colors(std::move(recolored));
    return out;
}

State scc_compress_per_scc(const State &s)
{
    const ParityGame &g = s.current;
    SccDecomposition dec = sccs(g);
    std::vector<int> recolored(static_cast<size_t>(g.node_count()));
    bool changed = false;
    for (const auto &comp : dec.components) {
        std::vector<int> colors;
        colors.reserve(comp.size());
        for (NodeId v : comp) colors.push_back(g.color(v));
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        std::vector<int> target = compress_color_map(colors);
        for (NodeId v : comp) {
            size_t i = static_cast<size_t>(
                std::lower_bound(colors.begin(), colors.end(), g.color(v)) - colors.begin());
            recolored[static_cast<size_t>(v)] = target[i];
            if (target[i] != g.color(v)) changed = true;
        }
    }
    if (!changed) return s;
    State out = s;
    out.current = g.with_colors(std::move(recolored));
    return out;
}

State priority_propagate(const State &s)
{
    const ParityGame &g = s.current;
    for (NodeId v = 0; v < g.node_count(); v++) {
        int succ_max = 0;
        for (NodeId w : g.successors(v)) succ_max = std::max(succ_max, g.color(w));
        int bound = succ_max;
        if (!g.predecessors(v).empty()) {
            int pred_max = 0;
            for (NodeId w : g.predecessors(v)) pred_max = std::max(pred_max, g.color(w));
            bound = std::min(bound, pred_max);
        }
        if (bound < g.color(v)) {
            State out = s;
            out.current = g.with_color(v, bound);
            return out;
        }
    }
    return s;
}

std::optional<FatalAttractor> find_fatal_attractor(const ParityGame &g)
{
    std::vector<int> colors = g.distinct_colors();
    for (auto it = colors.rbegin(); it != colors.rend(); ++it) {
        const int d = *it;
        NodeSet x(g.node_count());
        for (NodeId v = 0; v < g.node_count(); v++)
            if (g.color(v) == d) x.set(v);
        // Greatest subset of the color class contained in its own
        // monotone attractor.
        for (;;) {
            if (x.empty()) break;
            NodeSet ma = monotone_attractor(g, x, d);
            if (x.is_subset_of(ma)) return FatalAttractor{x, d};
            x &= ma;
        }
    }
    return std::nullopt;
}

State fatal_attractor_step(const State &s)
{
    auto fatal = find_fatal_attractor(s.current);
    if (!fatal) return s;
    const Player p = fatal->color % 2;
    NodeSet z = attractor(s.current, p, fatal->fatal);
    return strip_decided(s, p, z);
}

State rabin_index_reduce(const State &s)
{
    const ParityGame &g = s.current;
    const int n = g.node_count();
    // best_cycle[v] = the largest b such that v lies on a cycle whose
    // colors are all >= b; equivalently the maximal color of cycles
    // through v (a cycle's color being its minimum). 0 when v is on no
    // cycle: such a color can never repeat in a play.
    std::vector<int> best_cycle(static_cast<size_t>(n), 0);
    std::vector<bool> assigned(static_cast<size_t>(n), false);
    std::vector<int> colors = g.distinct_colors();
    for (auto it = colors.rbegin(); it != colors.rend(); ++it) {
        const int b = *it;
        NodeSet eligible(n);
        for (NodeId v = 0; v < n; v++)
            if (g.color(v) >= b) eligible.set(v);
        SccDecomposition dec = sccs_of_subgraph(g, eligible);
        for (size_t i = 0; i < dec.components.size(); i++) {
            if (dec.trivial[i]) continue;
            for (NodeId v : dec.components[i]) {
                if (!assigned[static_cast<size_t>(v)]) {
                    assigned[static_cast<size_t>(v)] = true;
                    best_cycle[static_cast<size_t>(v)] = b;
                }
            }
        }
    }
    for (NodeId v = 0; v < n; v++) {
        if (best_cycle[static_cast<size_t>(v)] < g.color(v)) {
            State out = s;
            out.current = g.with_color(v, best_cycle[static_cast<size_t>(v)]);
            return out;
        }
    }
    return s;
}

NodeSet parity_reach(const ParityGame &g, Player p, const NodeSet &target)
{
    const int n = g.node_count();
    NodeSet result(n);
    if (n == 0 || target.empty()) return result;

    // Layered reachability over pairs (node, running minimum): the play's
    // minimal color so far is the only part of the history that matters,
    // and hitting a lower color resets the layer. Colors are indexed by
    // their rank in the sorted distinct color list.
    std::vector<int> colors = g.distinct_colors();
    const int k = static_cast<int>(colors.size());
    std::vector<int> color_index(static_cast<size_t>(g.max_color()) + 1, -1);
    for (int i = 0; i < k; i++) color_index[static_cast<size_t>(colors[i])] = i;

    auto id = [k](NodeId v, int mi) { return static_cast<size_t>(v) * static_cast<size_t>(k) +
                                             static_cast<size_t>(mi); };

    std::vector<bool> reached(static_cast<size_t>(n) * static_cast<size_t>(k), false);
    std::vector<int> escapes(reached.size(), 0);
    std::vector<std::pair<NodeId, int>> queue;

    // Accepting arrivals: at a target node with a running minimum of the
    // controller's parity. They seed the backward fixpoint.
    for (NodeId v = 0; v < n; v++) {
        int ci = color_index[static_cast<size_t>(g.color(v))];
        for (int mi = 0; mi <= ci; mi++) {
            escapes[id(v, mi)] = g.out_degree(v);
            if (target.test(v) && colors[static_cast<size_t>(mi)] % 2 == p) {
                reached[id(v, mi)] = true;
                queue.emplace_back(v, mi);
            }
        }
    }

    while (!queue.empty()) {
        auto [w, mj] = queue.back();
        queue.pop_back();
        const int cw = g.color(w);
        for (NodeId v : g.predecessors(w)) {
            const int cvi = color_index[static_cast<size_t>(g.color(v))];
            // Moving v -> w maps running minimum mi to min(mi, color(w)).
            int lo = mj, hi = mj;
            if (colors[static_cast<size_t>(mj)] == cw) hi = cvi;  // any mi >= mj collapses to mj
            if (lo > cvi) continue;                               // (v, mi) states don't exist
            hi = std::min(hi, cvi);
            for (int mi = lo; mi <= hi; mi++) {
                size_t pid = id(v, mi);
                if (reached[pid]) continue;
                if (g.owner(v) == p || --escapes[pid] == 0) {
                    reached[pid] = true;
                    queue.emplace_back(v, mi);
                }
            }
        }
    }

    // One extra move is required: a node joins on the strength of its
    // successors only, starting with its own color as the running minimum.
    for (NodeId v = 0; v < n; v++) {
        const int start = color_index[static_cast<size_t>(g.color(v))];
        bool ok = g.owner(v) != p;
        for (NodeId w : g.successors(v)) {
            int next = std::min(start, color_index[static_cast<size_t>(g.color(w))]);
            bool in = reached[id(w, next)];
            if (g.owner(v) == p) {
                if (in) {
                    ok = true;
                    break;
                }
            } else if (!in) {
                ok = false;
                break;
            }
        }
        if (ok) result.set(v);
    }
    return result;
}

std::optional<GeneralizedFatal> find_generalized_fatal(const ParityGame &g)
{
    for (Player p : {0, 1}) {
        NodeSet x(g.node_count());
        for (NodeId v = 0; v < g.node_count(); v++)
            if (g.color(v) % 2 == p) x.set(v);
        while (!x.empty()) {
            NodeSet y = parity_reach(g, p, x);
            NodeSet shrunk = x;
            shrunk &= y;
            if (shrunk == x) return GeneralizedFatal{x, p};
            x = shrunk;
        }
    }
    return std::nullopt;
}

State generalized_fatal_step(const State &s)
{
    auto fatal = find_generalized_fatal(s.current);
    if (!fatal) return s;
    NodeSet z = attractor(s.current, fatal->player, fatal->fatal);
    return strip_decided(s, fatal->player, z);
}

}  // namespace pps
