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

/// Alternating reachability: the least superset A of target closed under
///   v owned by p with a successor in A, and
///   v owned by the opponent with all successors in A.
NodeSet attractor(const ParityGame &g, Player p, const NodeSet &target);

/// Monotone attractor for a target of color d, controlled by player d % 2:
/// the least set A, over nodes of color >= d only, such that the controller
/// can force reaching target (in at least one move) while every node en
/// route has color >= d. Target members enter A only by re-entering through
/// the fixpoint, which makes "target is a subset of the result" the fatal
/// attractor test.
NodeSet monotone_attractor(const ParityGame &g, const NodeSet &target, int d);

}  // namespace pps
