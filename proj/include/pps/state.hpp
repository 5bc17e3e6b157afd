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

#include <functional>
#include <memory>
#include <string>

#include "pps/game.hpp"

namespace pps {

/// Intermediate state of a solver composition. The input game never
/// changes; `current` is the continuation game still to be solved. Each
/// node of `current` represents one or more nodes of the input game with
/// the same (not yet known) winner, and `won[p]` collects input-game nodes
/// already decided for player p. The winning regions of the input game are
/// won[p] united with the represented image of the continuation game's
/// regions.
struct State {
    std::shared_ptr<const ParityGame> original;
    ParityGame current;
    NodeSet won0, won1;                            // over the original game
    std::vector<std::vector<NodeId>> represents;   // current node -> original nodes, ascending
    int merge_count = 0;                           // fresh-name counter for merged nodes

    const NodeSet &won(Player p) const { return p == 0 ? won0 : won1; }
    NodeSet &won(Player p) { return p == 0 ? won0 : won1; }

    long current_rank() const { return rank(current); }
};

bool operator==(const State &a, const State &b);

/// (empty, empty, identity, g, g): the start of every composition.
State initial_state(ParityGame g);
State initial_state(std::shared_ptr<const ParityGame> g);

/// Throws std::logic_error when a structural invariant is violated:
/// decided sets and represented images must partition the input game's
/// nodes, images must be nonempty and pairwise disjoint, and the
/// continuation game must have no dead-ends.
void check_state_invariants(const State &s);

/// Decides attracted_z (an attractor in s.current) for player p: moves the
/// represented input nodes into won[p], then restricts the continuation
/// game and the representation map to the survivors.
State strip_decided(const State &s, Player p, const NodeSet &attracted_z);

/// Winning regions of the input game from decided sets plus the
/// represented image of `sub`, a solution of s.current.
WinningRegions absorb_regions(const State &s, const WinningRegions &sub);

/// A named state transformer. Lawful transformers never touch the input
/// game, either return the state unchanged or strictly decrease the rank
/// of the continuation game, and never un-decide a node.
struct PartialSolver {
    std::string name;
    std::function<State(const State &)> transform;
};

/// Law check for one application; `before` and `after` as produced by a
/// transformer under test.
struct LawCheck {
    bool ok = true;
    std::string violation;
};

LawCheck check_laws(const State &before, const State &after);

}  // namespace pps
