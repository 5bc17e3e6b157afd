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

/// Zielonka's recursive algorithm, recursing on the minimal color (the
/// relevant one under min-parity). Always returns a total partition.
/// Throws std::runtime_error when the recursion depth limit is exceeded.
WinningRegions zielonka(const ParityGame &g, int depth_limit = 100000);

struct BruteForceLimits {
    int max_nodes = 10;
    long max_strategies = 1 << 20;
};

/// Exhaustive oracle for tiny games: enumerates every memoryless strategy
/// of player 0 and checks that all cycles reachable under any player-1
/// reply have even minimal color. Determinacy and memoryless sufficiency
/// make the complement player 1's region. Throws std::invalid_argument
/// when the limits are exceeded.
WinningRegions brute_force(const ParityGame &g, const BruteForceLimits &limits = {});

}  // namespace pps
