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

#include "pps/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pps/attractor.hpp"
#include "pps/scc.hpp"

namespace pps {

namespace {

WinningRegions zielonka_rec(const ParityGame &g, int depth, int depth_limit)
{
    if (depth > depth_limit) throw std::runtime_error("zielonka: recursion depth limit exceeded");
    WinningRegions regions(g.node_count());
    if (g.empty()) return regions;

    int m = g.color(0);
    for (NodeId v = 1; v < g.node_count(); v++) m = std::min(m, g.color(v));
    const Player p = m % 2;

    NodeSet top(g.node_count());
    for (NodeId v = 0; v < g.node_count(); v++)
        if (g.color(v) == m) top.set(v);

    NodeSet a = attractor(g, p, top);
    auto [g1, map1] = remove_nodes(g, a);
    WinningRegions sub1 = zielonka_rec(g1, depth + 1, depth_limit);

    bool opponent_empty = sub1.won(opponent(p)).empty();
    if (opponent_empty) {
        for (NodeId v = 0; v < g.node_count(); v++) regions.won(p).set(v);
        return regions;
    }

    NodeSet opp(g.node_count());
    for (NodeId v = 0; v < g.node_count(); v++) {
        NodeId nv = map1[static_cast<size_t>(v)];
        if (nv != kNoNode && sub1.won(opponent(p)).test(nv)) opp.set(v);
    }
    NodeSet b = attractor(g, opponent(p), opp);
    auto [g2, map2] = remove_nodes(g, b);
    WinningRegions sub2 = zielonka_rec(g2, depth + 1, depth_limit);

    for (NodeId v = 0; v < g.node_count(); v++) {
        if (b.test(v)) {
            regions.won(opponent(p)).set(v);
        } else {
            NodeId nv = map2[static_cast<size_t>(v)];
            if (sub2.won(p).test(nv)) regions.won(p).set(v);
            else regions.won(opponent(p)).set(v);
        }
    }
    return regions;
}

}  // namespace

WinningRegions zielonka(const ParityGame &g, int depth_limit)
{
    return zielonka_rec(g, 0, depth_limit);
}

WinningRegions brute_force(const ParityGame &g, const BruteForceLimits &limits)
{
    const int n = g.node_count();
    if (n > limits.max_nodes) throw std::invalid_argument("brute_force: too many nodes");
    WinningRegions regions(n);
    if (n == 0) return regions;

    std::vector<NodeId> zero_nodes;
    long combos = 1;
    for (NodeId v = 0; v < n; v++) {
        if (g.owner(v) != 0) continue;
        zero_nodes.push_back(v);
        if (combos > limits.max_strategies / g.out_degree(v))
            throw std::invalid_argument("brute_force: strategy space too large");
        combos *= g.out_degree(v);
    }

    std::vector<int> colors = g.distinct_colors();
    std::vector<size_t> choice(zero_nodes.size(), 0);
    std::vector<Player> owners(static_cast<size_t>(n));
    std::vector<int> node_colors(static_cast<size_t>(n));
    for (NodeId v = 0; v < n; v++) {
        owners[static_cast<size_t>(v)] = g.owner(v);
        node_colors[static_cast<size_t>(v)] = g.color(v);
    }

    NodeSet won0(n);
    for (long it = 0; it < combos; it++) {
        // Restrict the graph to the chosen strategy of player 0.
        std::vector<std::vector<NodeId>> succ(static_cast<size_t>(n));
        for (NodeId v = 0; v < n; v++) succ[static_cast<size_t>(v)] = g.successors(v);
        for (size_t i = 0; i < zero_nodes.size(); i++) {
            NodeId v = zero_nodes[i];
            succ[static_cast<size_t>(v)] = {g.successors(v)[choice[i]]};
        }
        ParityGame restricted(owners, node_colors, succ);

        // A strategy loses from v iff a cycle with odd minimal color is
        // reachable from v in the restricted graph.
        NodeSet bad(n);
        for (int c : colors) {
            if (c % 2 == 0) continue;
            NodeSet at_least(n);
            for (NodeId v = 0; v < n; v++)
                if (restricted.color(v) >= c) at_least.set(v);
            SccDecomposition dec = sccs_of_subgraph(restricted, at_least);
            for (size_t i = 0; i < dec.components.size(); i++) {
                if (dec.trivial[i]) continue;
                bool has_c = std::any_of(dec.components[i].begin(), dec.components[i].end(),
                                         [&](NodeId v) { return restricted.color(v) == c; });
                if (!has_c) continue;
                for (NodeId v : dec.components[i]) bad.set(v);
            }
        }
        // Nodes that can reach a bad cycle lose; the rest win with this
        // strategy.
        std::vector<bool> reaches_bad(static_cast<size_t>(n), false);
        std::vector<NodeId> queue;
        for (NodeId v = 0; v < n; v++)
            if (bad.test(v)) {
                reaches_bad[static_cast<size_t>(v)] = true;
                queue.push_back(v);
            }
        while (!queue.empty()) {
            NodeId w = queue.back();
            queue.pop_back();
            for (NodeId v : restricted.predecessors(w)) {
                if (!reaches_bad[static_cast<size_t>(v)]) {
                    reaches_bad[static_cast<size_t>(v)] = true;
                    queue.push_back(v);
                }
            }
        }
        for (NodeId v = 0; v < n; v++)
            if (!reaches_bad[static_cast<size_t>(v)]) won0.set(v);

        // Advance the strategy counter.
        for (size_t i = 0; i < zero_nodes.size(); i++) {
            if (++choice[i] < static_cast<size_t>(g.out_degree(zero_nodes[i]))) break;
            choice[i] = 0;
        }
    }

    regions.w0 = won0;
    for (NodeId v = 0; v < n; v++)
        if (!won0.test(v)) regions.w1.set(v);
    return regions;
}

}  // namespace pps
