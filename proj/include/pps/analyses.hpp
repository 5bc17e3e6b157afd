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

#include <optional>

#include "pps/state.hpp"

namespace pps {

/// Static color compression (registered as "scc"): recolors the
/// continuation game with the unique order- and parity-preserving map onto
/// an initial convex segment of the naturals, e.g. {0,2,3,6,7} becomes
/// {0,0,1,2,3}. No-op when already convex.
State scc_compress(const State &s);

/// Per-component color compression (registered as "sccp"): applies the
/// compression map independently to the color set of each maximal SCC.
State scc_compress_per_scc(const State &s);

/// Priority propagation (registered as "pp"): with
/// p(v) = min(max color of successors, max color of predecessors),
/// lowers the color of the first node whose color exceeds p(v). A node
/// without predecessors is bounded by its successors only.
State priority_propagate(const State &s);

/// Fatal attractor detection (registered as "fa"): explores colors in
/// descending order, shrinks the color class to the greatest subset X
/// contained in its own monotone attractor, and when a nonempty fatal X
/// exists decides its attractor for player (color % 2).
State fatal_attractor_step(const State &s);

/// Abstract Rabin index reduction (registered as "ari"): for the first
/// node whose best cycle (the maximal over cycles through the node of the
/// minimal color on the cycle) is smaller than its color, lowers the color
/// to that value; a node on no cycle at all is lowered to 0. Sound because
/// a play visiting the node infinitely often has a recurring minimum no
/// larger than the best cycle. Color-1 nodes are reduced too; one-player
/// completeness depends on erasing odd colors that cannot recur as the
/// minimum.
State rabin_index_reduce(const State &s);

/// Generalized fatal attractors (registered as "gfa"): for each parity,
/// shrinks the set of all nodes of that parity to the greatest X that the
/// parity's player can force to re-enter X with the minimal color en route
/// of that parity; a nonempty X decides its attractor as in fa.
State generalized_fatal_step(const State &s);

// Reusable pieces, also needed by the refinement analyses and tests.

/// Order- and parity-preserving compression of a sorted distinct color
/// list onto an initial convex segment; returns the per-color targets.
std::vector<int> compress_color_map(const std::vector<int> &sorted_colors);

struct FatalAttractor {
    NodeSet fatal;  // the stable X
    int color;      // its color d; the winner is d % 2
};

/// First fatal attractor by descending color, or nullopt if the game has
/// none (the fa fixpoint test).
std::optional<FatalAttractor> find_fatal_attractor(const ParityGame &g);

struct GeneralizedFatal {
    NodeSet fatal;
    Player player;
};

/// Greatest same-parity fatal set per the gfa rule, trying player 0 first.
std::optional<GeneralizedFatal> find_generalized_fatal(const ParityGame &g);

/// The layered reachability underlying gfa: nodes from which `p` can force
/// the play into `target` (in at least one move) such that the minimal
/// color encountered en route, endpoints included, has parity p.
NodeSet parity_reach(const ParityGame &g, Player p, const NodeSet &target);

}  // namespace pps
