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

#include "pps/state.hpp"

#include <stdexcept>

namespace pps {

bool operator==(const State &a, const State &b)
{
    if (a.original != b.original && !(a.original && b.original && *a.original == *b.original))
        return false;
    return a.current == b.current && a.won0 == b.won0 && a.won1 == b.won1 &&
           a.represents == b.represents && a.merge_count == b.merge_count;
}

State initial_state(ParityGame g)
{
    return initial_state(std::make_shared<const ParityGame>(std::move(g)));
}

State initial_state(std::shared_ptr<const ParityGame> g)
{
    State s;
    s.original = std::move(g);
    s.current = *s.original;
    const int n = s.current.node_count();
    s.won0 = NodeSet(n);
    s.won1 = NodeSet(n);
    s.represents.resize(static_cast<size_t>(n));
    for (NodeId v = 0; v < n; v++) s.represents[static_cast<size_t>(v)] = {v};
    return s;
}

void check_state_invariants(const State &s)
{
    if (!s.original) throw std::logic_error("state: missing original game");
    const int n = s.original->node_count();
    if (s.won0.universe() != n || s.won1.universe() != n)
        throw std::logic_error("state: decided sets sized to the wrong universe");
    if (static_cast<int>(s.represents.size()) != s.current.node_count())
        throw std::logic_error("state: representation map out of sync");

    std::vector<int> covered(static_cast<size_t>(n), 0);
    for (NodeId v = 0; v < n; v++) {
        if (s.won0.test(v)) covered[static_cast<size_t>(v)]++;
        if (s.won1.test(v)) covered[static_cast<size_t>(v)]++;
    }
    for (const auto &image : s.represents) {
        if (image.empty()) throw std::logic_error("state: node with empty represented image");
        for (NodeId w : image) {
            if (w < 0 || w >= n) throw std::logic_error("state: represented node out of range");
            covered[static_cast<size_t>(w)]++;
        }
    }
    for (NodeId v = 0; v < n; v++)
        if (covered[static_cast<size_t>(v)] != 1)
            throw std::logic_error("state: node " + std::to_string(v) +
                                   " covered " + std::to_string(covered[static_cast<size_t>(v)]) +
                                   " times (decided sets and images must partition V)");
    // current has no dead-ends by ParityGame construction.
}

State strip_decided(const State &s, Player p, const NodeSet &attracted_z)
{
    State out = s;
    for (NodeId v : attracted_z.to_vector())
        for (NodeId w : s.represents[static_cast<size_t>(v)]) out.won(p).set(w);

    auto [restricted, old_to_new] = remove_nodes(s.current, attracted_z);
    std::vector<std::vector<NodeId>> represents(static_cast<size_t>(restricted.node_count()));
    for (NodeId v = 0; v < s.current.node_count(); v++) {
        NodeId nv = old_to_new[static_cast<size_t>(v)];
        if (nv != kNoNode) represents[static_cast<size_t>(nv)] = s.represents[static_cast<size_t>(v)];
    }
    out.current = std::move(restricted);
    out.represents = std::move(represents);
    return out;
}

WinningRegions absorb_regions(const State &s, const WinningRegions &sub)
{
    WinningRegions out(s.original->node_count());
    out.w0 = s.won0;
    out.w1 = s.won1;
    for (Player p : {0, 1})
        for (NodeId v : sub.won(p).to_vector())
            for (NodeId w : s.represents[static_cast<size_t>(v)]) out.won(p).set(w);
    return out;
}

LawCheck check_laws(const State &before, const State &after)
{
    LawCheck r;
    bool same_game = before.original == after.original ||
                     (before.original && after.original && *before.original == *after.original);
    if (!same_game) {
        r.ok = false;
        r.violation = "input game changed";
        return r;
    }
    long rb = before.current_rank(), ra = after.current_rank();
    if (ra > rb) {
        r.ok = false;
        r.violation = "rank increased";
        return r;
    }
    if (ra == rb && !(before == after)) {
        r.ok = false;
        r.violation = "state changed without decreasing rank";
        return r;
    }
    if (!before.won0.is_subset_of(after.won0) || !before.won1.is_subset_of(after.won1)) {
        r.ok = false;
        r.violation = "previously decided winner dropped";
        return r;
    }
    return r;
}

}  // namespace pps
