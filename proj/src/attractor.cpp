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

#include "pps/attractor.hpp"

#include <vector>

namespace pps {

NodeSet attractor(const ParityGame &g, Player p, const NodeSet &target)
{
    const int n = g.node_count();
    NodeSet result(n);
    std::vector<int> escapes(static_cast<size_t>(n));
    std::vector<NodeId> queue;
    queue.reserve(static_cast<size_t>(n));

    for (NodeId v = 0; v < n; v++) {
        escapes[static_cast<size_t>(v)] = g.out_degree(v);
        if (target.test(v)) {
            result.set(v);
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        NodeId w = queue.back();
        queue.pop_back();
        for (NodeId v : g.predecessors(w)) {
            if (result.test(v)) continue;
            if (g.owner(v) == p || --escapes[static_cast<size_t>(v)] == 0) {
                result.set(v);
                queue.push_back(v);
            }
        }
    }
    return result;
}

NodeSet monotone_attractor(const ParityGame &g, const NodeSet &target, int d)
{
    const Player p = d % 2;
    const int n = g.node_count();
    NodeSet result(n);
    // reached marks "in target or already attracted"; predecessors are
    // relaxed exactly once, when a node first enters that set.
    std::vector<bool> reached(static_cast<size_t>(n), false);
    std::vector<int> escapes(static_cast<size_t>(n));
    std::vector<NodeId> queue;
    queue.reserve(static_cast<size_t>(n));

    for (NodeId v = 0; v < n; v++) {
        escapes[static_cast<size_t>(v)] = g.out_degree(v);
        if (target.test(v)) {
            reached[static_cast<size_t>(v)] = true;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        NodeId w = queue.back();
        queue.pop_back();
        for (NodeId v : g.predecessors(w)) {
            if (g.color(v) < d || result.test(v)) continue;
            if (g.owner(v) == p || --escapes[static_cast<size_t>(v)] == 0) {
                result.set(v);
                if (!reached[static_cast<size_t>(v)]) {
                    reached[static_cast<size_t>(v)] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    return result;
}

}  // namespace pps
