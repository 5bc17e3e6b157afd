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

#include "pps/scc.hpp"

#include <algorithm>

namespace pps {

namespace {

// Iterative Tarjan. Components are emitted when their root closes, which
// yields reverse-topological order.
struct TarjanState {
    const ParityGame &g;
    const NodeSet *filter;  // nullptr means all nodes
    std::vector<int> index, lowlink;
    std::vector<bool> on_stack;
    std::vector<NodeId> stack;
    int next_index = 0;
    SccDecomposition out;

    explicit TarjanState(const ParityGame &g, const NodeSet *filter)
        : g(g), filter(filter),
          index(static_cast<size_t>(g.node_count()), -1),
          lowlink(static_cast<size_t>(g.node_count()), 0),
          on_stack(static_cast<size_t>(g.node_count()), false)
    {
        out.component_of.assign(static_cast<size_t>(g.node_count()), -1);
    }

    bool included(NodeId v) const { return filter == nullptr || filter->test(v); }

    void run_from(NodeId root)
    {
        struct Frame {
            NodeId v;
            size_t next_succ;
        };
        std::vector<Frame> frames;
        frames.push_back({root, 0});
        index[static_cast<size_t>(root)] = lowlink[static_cast<size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = true;

        while (!frames.empty()) {
            Frame &f = frames.back();
            const auto &succ = g.successors(f.v);
            bool descended = false;
            while (f.next_succ < succ.size()) {
                NodeId w = succ[f.next_succ++];
                if (!included(w)) continue;
                if (index[static_cast<size_t>(w)] == -1) {
                    index[static_cast<size_t>(w)] = lowlink[static_cast<size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<size_t>(w)] = true;
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<size_t>(w)])
                    lowlink[static_cast<size_t>(f.v)] =
                        std::min(lowlink[static_cast<size_t>(f.v)], index[static_cast<size_t>(w)]);
            }
            if (descended) continue;

            NodeId v = f.v;
            if (lowlink[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
                std::vector<NodeId> comp;
                for (;;) {
                    NodeId w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<size_t>(w)] = false;
                    comp.push_back(w);
                    out.component_of[static_cast<size_t>(w)] =
                        static_cast<int>(out.components.size());
                    if (w == v) break;
                }
                std::sort(comp.begin(), comp.end());
                bool triv = comp.size() == 1 && !g.has_edge(comp[0], comp[0]);
                out.components.push_back(std::move(comp));
                out.trivial.push_back(triv);
            }
            frames.pop_back();
            if (!frames.empty()) {
                NodeId parent = frames.back().v;
                lowlink[static_cast<size_t>(parent)] =
                    std::min(lowlink[static_cast<size_t>(parent)], lowlink[static_cast<size_t>(v)]);
            }
        }
    }
};

SccDecomposition run_tarjan(const ParityGame &g, const NodeSet *filter)
{
    TarjanState t(g, filter);
    for (NodeId v = 0; v < g.node_count(); v++)
        if (t.included(v) && t.index[static_cast<size_t>(v)] == -1) t.run_from(v);
    return std::move(t.out);
}

}  // namespace

SccDecomposition sccs(const ParityGame &g) { return run_tarjan(g, nullptr); }

SccDecomposition sccs_of_subgraph(const ParityGame &g, const NodeSet &nodes)
{
    return run_tarjan(g, &nodes);
}

}  // namespace pps
