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

#include "pps/state.hpp"

namespace pps {

/// Parameters for merging a node set of the continuation game into one
/// fresh node. The fresh node is appended as the last index and recorded
/// in the name table as merge_<k>.
struct MergeSpec {
    NodeSet nodes;  // X, at least two nodes
    Player owner;   // owner of the merged node
    int color;      // color of the merged node
};

/// Collapses spec.nodes into a single node: edges inside the set vanish,
/// outside predecessors point at the merged node, the merged node points
/// at the set's outside successors, and the represented input nodes of the
/// set transfer to the merged node. Decided sets and the input game are
/// untouched. Throws std::invalid_argument if the set has fewer than two
/// nodes or lacks an outgoing edge (the merged node would be a dead-end).
State merge(const State &s, const MergeSpec &spec);

/// Sole-successor merging (registered as "m_ss"): the first pair (v, w)
/// where w is v's only successor, w can escape {v, w}, and color(v) >=
/// color(w) is merged into a node owned by w's owner with w's color.
State merge_sole_successor(const State &s);

/// Which outgoing edge lets the SCC color-class merge fire. Any exit edge
/// out of the merged set keeps the merged node dead-end free, so both
/// rules are sound; the subgraph rule is the one whose published
/// benchmark counts the registry reproduces.
enum class MsccExit {
    kBeyondSubgraph,  // an edge leaving the restricted subgraph entirely
    kBeyondSet,       // any edge leaving the merged set
};

/// SCC color-class merging (registered as "m_scc"; the kBeyondSet variant
/// as "m_scc_any_exit"), for states with no fatal attractor: for colors d
/// descending, restricts the game to nodes of the opponent of d % 2 with
/// color >= d and merges the color-d nodes of the first SCC holding at
/// least two of them (with a qualifying exit edge) into one node of color
/// d owned by that opponent.
State merge_scc_colorclass(const State &s, MsccExit exit_rule = MsccExit::kBeyondSubgraph);

/// Conditional-fatal-attractor edge removal (registered as "er_fa"), for
/// states with no fatal attractor: removes the first edge (v, w) whose
/// commitment (v keeping only that edge) creates a fatal attractor —
/// committing to it would lose v's owner the node.
State remove_edge_conditional_fa(const State &s);

/// Which nodes a control path may visit.
enum class ErSdPathRule {
    /// Owned by the controller or forced (single successor), every node on
    /// the path including the arrival node.
    kOwnedOrForced,
    /// As above, but the arrival node is unconstrained: the walk only has
    /// to be controlled until it gets there.
    kOwnedOrForcedFreeArrival,
    /// Nodes owned by the controller only; arrival unconstrained.
    kOwnedOnly,
};

/// Shared-descendant edge removal (registered as "er_sd"): removes an edge
/// (v, w) when some third node z admits a path v -> z avoiding (v, w) and
/// controlled by p = owner(v), and a path w -> z controlled by the
/// opponent, whose colors c_v and c_w satisfy c_v at-least-as-good-for-p
/// than c_w: moving along the first path dominates moving through w.
/// kOwnedOrForced applies the control rule to every node on a path,
/// endpoints included; kOwnedOnly is the weaker owned-nodes-only variant.
State remove_edge_shared_descendant(const State &s,
                                    ErSdPathRule rule = ErSdPathRule::kOwnedOrForced);

}  // namespace pps
