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

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pps {

/// Players are 0 and 1. Player 0 wins a play iff the minimal color seen
/// infinitely often is even (min-parity winning condition).
using Player = int;

constexpr Player opponent(Player p) { return 1 - p; }

/// Dense node index, valid in [0, node_count) of the owning game.
using NodeId = int;

constexpr NodeId kNoNode = -1;

/// Set of nodes of one game, fixed universe size.
class NodeSet {
  public:
    NodeSet() = default;
    explicit NodeSet(int universe) : bits_(universe, false) {}

    static NodeSet of(int universe, std::initializer_list<NodeId> members);

    int universe() const { return static_cast<int>(bits_.size()); }
    bool test(NodeId v) const { return bits_[static_cast<size_t>(v)]; }
    void set(NodeId v, bool on = true) { bits_[static_cast<size_t>(v)] = on; }
    bool empty() const;
    int count() const;

    NodeSet &operator|=(const NodeSet &other);
    NodeSet &operator&=(const NodeSet &other);
    /// Set difference.
    NodeSet &operator-=(const NodeSet &other);

    bool is_subset_of(const NodeSet &other) const;
    bool intersects(const NodeSet &other) const;

    /// Members in ascending order.
    std::vector<NodeId> to_vector() const;

    bool operator==(const NodeSet &other) const = default;

  private:
    std::vector<bool> bits_;
};

/// A partition (w0, w1) of decided nodes. For a complete solve the two
/// regions cover every node; a partial solve leaves the rest undecided.
struct WinningRegions {
    NodeSet w0;
    NodeSet w1;

    WinningRegions() = default;
    explicit WinningRegions(int universe) : w0(universe), w1(universe) {}

    const NodeSet &won(Player p) const { return p == 0 ? w0 : w1; }
    NodeSet &won(Player p) { return p == 0 ? w0 : w1; }

    /// Nodes in neither region.
    NodeSet undecided() const;
    bool complete() const { return undecided().empty(); }

    bool operator==(const WinningRegions &other) const = default;
};

/// Immutable directed parity-game graph: per-node owner, color and ordered
/// successor list, with cached predecessor lists. Every node has at least
/// one successor (no dead-ends); the empty game is permitted.
class ParityGame {
  public:
    ParityGame() = default;

    /// Builds and validates a game. Successor lists keep their given order
    /// but must not contain duplicates; every node needs >= 1 successor.
    /// Throws std::invalid_argument on violations.
    ParityGame(std::vector<Player> owners, std::vector<int> colors,
               std::vector<std::vector<NodeId>> successors,
               std::vector<std::string> names = {});

    int node_count() const { return static_cast<int>(owner_.size()); }
    bool empty() const { return owner_.empty(); }
    int edge_count() const { return edge_count_; }

    Player owner(NodeId v) const { return owner_[static_cast<size_t>(v)]; }
    int color(NodeId v) const { return color_[static_cast<size_t>(v)]; }
    const std::vector<NodeId> &successors(NodeId v) const { return succ_[static_cast<size_t>(v)]; }
    const std::vector<NodeId> &predecessors(NodeId v) const { return pred_[static_cast<size_t>(v)]; }
    int out_degree(NodeId v) const { return static_cast<int>(succ_[static_cast<size_t>(v)].size()); }
    bool has_edge(NodeId v, NodeId w) const;

    bool has_names() const { return !names_.empty(); }
    /// Empty string when the node is unnamed.
    const std::string &name(NodeId v) const;

    /// Distinct colors in ascending order.
    std::vector<int> distinct_colors() const;
    int max_color() const;

    /// Copy with one node's color replaced.
    ParityGame with_color(NodeId v, int color) const;
    /// Copy with all colors replaced (same structure).
    ParityGame with_colors(std::vector<int> colors) const;

    bool operator==(const ParityGame &other) const = default;

  private:
    std::vector<Player> owner_;
    std::vector<int> color_;
    std::vector<std::vector<NodeId>> succ_;
    std::vector<std::vector<NodeId>> pred_;
    std::vector<std::string> names_;  // empty when no node is named
    int edge_count_ = 0;

    void rebuild_predecessors();
};

/// rank(G) = |V| + |E| + sum of all node colors; the termination measure
/// every solver composition strictly decreases.
long rank(const ParityGame &g);

/// Preference order on colors for player p: c1 is at least as good for p
/// as c2 when appearing as the minimal color seen infinitely often.
/// For p = 0 the chain is 0, 2, 4, ... , 5, 3, 1 (best to worst).
bool pref_leq(Player p, int c1, int c2);

/// Minimum color over the nodes of a path (endpoints included).
/// Throws std::invalid_argument if the sequence is empty or not a path.
int path_color(const ParityGame &g, std::span<const NodeId> path);

struct RestrictedGame {
    ParityGame game;
    /// old node id -> new node id, kNoNode for removed nodes.
    std::vector<NodeId> old_to_new;
};

/// Removes node set z together with all incident edges and compacts the
/// indices. Throws std::invalid_argument if a surviving node would lose
/// its last successor (the caller must pass a closed set, e.g. an
/// attractor) — dead-end creation is a contract violation, never repaired.
RestrictedGame remove_nodes(const ParityGame &g, const NodeSet &z);

/// Removes the single edge (v, w). Requires the edge to exist and v to
/// keep at least one other successor; throws otherwise.
ParityGame remove_edge(const ParityGame &g, NodeId v, NodeId w);

/// Commits v to the edge (v, w): v's successor list becomes exactly [w].
/// Requires the edge to exist; throws otherwise.
ParityGame commit_edge(const ParityGame &g, NodeId v, NodeId w);

}  // namespace pps
