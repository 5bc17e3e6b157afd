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

#pragma once

#include <vector>

#include "pps/game.hpp"
#include "pps/oracle.hpp"
#include "pps/random.hpp"
#include "pps/scc.hpp"
#include "pps/state.hpp"

namespace pps::test {

struct NodeSpec {
    Player owner;
    int color;
    std::vector<NodeId> successors;
};

inline ParityGame make_game(const std::vector<NodeSpec> &nodes)
{
    std::vector<Player> owners;
    std::vector<int> colors;
    std::vector<std::vector<NodeId>> succ;
    for (const NodeSpec &n : nodes) {
        owners.push_back(n.owner);
        colors.push_back(n.color);
        succ.push_back(n.successors);
    }
    return ParityGame(std::move(owners), std::move(colors), std::move(succ));
}

/// Every game with 1..max_nodes nodes, out-degree <= max_out_degree and
/// colors in 0..max_color, visited exactly once.
template <typename Fn>
void for_each_small_game(int max_nodes, int max_out_degree, int max_color, Fn fn)
{
    for (int n = 1; n <= max_nodes; n++) {
        // Per-node option table: owner, color, nonempty successor mask of
        // bounded popcount.
        struct Option {
            Player owner;
            int color;
            unsigned mask;
        };
        std::vector<Option> options;
        for (unsigned mask = 1; mask < (1u << n); mask++) {
            if (__builtin_popcount(mask) > max_out_degree) continue;
            for (Player o : {0, 1})
                for (int c = 0; c <= max_color; c++) options.push_back({o, c, mask});
        }
        std::vector<size_t> pick(static_cast<size_t>(n), 0);
        for (;;) {
            std::vector<NodeSpec> nodes;
            for (int v = 0; v < n; v++) {
                const Option &opt = options[pick[static_cast<size_t>(v)]];
                NodeSpec spec{opt.owner, opt.color, {}};
                for (int w = 0; w < n; w++)
                    if (opt.mask & (1u << w)) spec.successors.push_back(w);
                nodes.push_back(std::move(spec));
            }
            fn(make_game(nodes));
            int carry = 0;
            while (carry < n && ++pick[static_cast<size_t>(carry)] == options.size()) {
                pick[static_cast<size_t>(carry)] = 0;
                carry++;
            }
            if (carry == n) break;
        }
    }
}

inline ParityGame random_small_game(SplitMix64 &rng, int max_nodes = 8, int max_color_bound = 6)
{
    RandomConfig cfg;
    cfg.nodes = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_nodes)));
    cfg.color_bound = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_color_bound) + 1));
    cfg.min_degree = 1;
    cfg.max_degree = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(3, cfg.nodes))));
    cfg.allow_self_loops = true;  // tiny games need them; loops stress fa
    return gen_random(cfg, rng.next());
}

/// Independent max-parity oracle (player 0 wins iff the maximal recurring
/// color is even), used to validate the max-to-min conversion without
/// going through it.
inline WinningRegions brute_force_max(const ParityGame &g)
{
    const int n = g.node_count();
    WinningRegions regions(n);
    if (n == 0) return regions;

    std::vector<NodeId> zero_nodes;
    long combos = 1;
    for (NodeId v = 0; v < n; v++)
        if (g.owner(v) == 0) {
            zero_nodes.push_back(v);
            combos *= g.out_degree(v);
        }

    std::vector<Player> owners(static_cast<size_t>(n));
    std::vector<int> node_colors(static_cast<size_t>(n));
    for (NodeId v = 0; v < n; v++) {
        owners[static_cast<size_t>(v)] = g.owner(v);
        node_colors[static_cast<size_t>(v)] = g.color(v);
    }

    std::vector<size_t> choice(zero_nodes.size(), 0);
    NodeSet won0(n);
    for (long it = 0; it < combos; it++) {
        std::vector<std::vector<NodeId>> succ(static_cast<size_t>(n));
        for (NodeId v = 0; v < n; v++) succ[static_cast<size_t>(v)] = g.successors(v);
        for (size_t i = 0; i < zero_nodes.size(); i++)
            succ[static_cast<size_t>(zero_nodes[i])] = {g.successors(zero_nodes[i])[choice[i]]};
        ParityGame restricted(owners, node_colors, succ);

        // Bad cycle: maximal color odd, i.e. a cycle inside {color <= o}
        // through a color-o node for some odd o.
        NodeSet bad(n);
        for (int o : restricted.distinct_colors()) {
            if (o % 2 == 0) continue;
            NodeSet at_most(n);
            for (NodeId v = 0; v < n; v++)
                if (restricted.color(v) <= o) at_most.set(v);
            SccDecomposition dec = sccs_of_subgraph(restricted, at_most);
            for (size_t i = 0; i < dec.components.size(); i++) {
                if (dec.trivial[i]) continue;
                bool has_o = false;
                for (NodeId v : dec.components[i])
                    if (restricted.color(v) == o) has_o = true;
                if (!has_o) continue;
                for (NodeId v : dec.components[i]) bad.set(v);
            }
        }
        std::vector<bool> reaches(static_cast<size_t>(n), false);
        std::vector<NodeId> queue;
        for (NodeId v = 0; v < n; v++)
            if (bad.test(v)) {
                reaches[static_cast<size_t>(v)] = true;
                queue.push_back(v);
            }
        while (!queue.empty()) {
            NodeId w = queue.back();
            queue.pop_back();
            for (NodeId v : restricted.predecessors(w))
                if (!reaches[static_cast<size_t>(v)]) {
                    reaches[static_cast<size_t>(v)] = true;
                    queue.push_back(v);
                }
        }
        for (NodeId v = 0; v < n; v++)
            if (!reaches[static_cast<size_t>(v)]) won0.set(v);

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

/// Oracle-checked soundness of one transformer application: the decided
/// sets plus represented oracle regions of the continuation game must
/// reproduce the oracle regions of the input game.
inline bool sound_state(const State &s)
{
    WinningRegions reconstructed = absorb_regions(s, zielonka(s.current));
    return reconstructed == zielonka(*s.original);
}

}  // namespace pps::test
