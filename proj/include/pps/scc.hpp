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

#include "pps/game.hpp"

namespace pps {

/// Maximal strongly connected components in reverse-topological order:
/// every edge leaving a component targets an earlier-emitted component.
/// A component is trivial iff it is a single node without a self-loop.
struct SccDecomposition {
    std::vector<std::vector<NodeId>> components;  // members ascending
    std::vector<bool> trivial;                    // parallel to components
    std::vector<int> component_of;                // node -> component index
};

SccDecomposition sccs(const ParityGame &g);

/// Decomposition of the subgraph induced by a node subset; nodes outside
/// the subset get component_of -1.
SccDecomposition sccs_of_subgraph(const ParityGame &g, const NodeSet &nodes);

}  // namespace pps
