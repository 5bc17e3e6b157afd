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

#include "pps/game.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pps {

NodeSet NodeSet::of(int universe, std::initializer_list<NodeId> members)
{
    NodeSet s(universe);
    for (NodeId v : members) s.set(v);
    return s;
}

bool NodeSet::empty() const
{
    return std::find(bits_.begin(), bits_.end(), true) == bits_.end();
}

int NodeSet::count() const
{
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

NodeSet &NodeSet::operator|=(const NodeSet &other)
{
    for (size_t i = 0; i < bits_.size(); i++)
        if (other.bits_[i]) bits_[i] = true;
    return *this;
}

NodeSet &NodeSet::operator&=(const NodeSet &other)
{
    for (size_t i = 0; i < bits_.size(); i++)
        if (!other.bits_[i]) bits_[i] = false;
    return *this;
}

NodeSet &NodeSet::operator-=(const NodeSet &other)
{
    for (size_t i = 0; i < bits_.size(); i++)
        if (other.bits_[i]) bits_[i] = false;
    return *this;
}

bool NodeSet::is_subset_of(const NodeSet &other) const
{
    for (size_t i = 0; i < bits_.size(); i++)
        if (bits_[i] && !other.bits_[i]) return false;
    return true;
}

bool NodeSet::intersects(const NodeSet &other) const
{
    for (size_t i = 0; i < bits_.size(); i++)
        if (bits_[i] && other.bits_[i]) return true;
    return false;
}

std::vector<NodeId> NodeSet::to_vector() const
{
    std::vector<NodeId> out;
    for (size_t i = 0; i < bits_.size(); i++)
        if (bits_[i]) out.push_back(static_cast<NodeId>(i));
    return out;
}

NodeSet WinningRegions::undecided() const
{
    NodeSet rest(w0.universe());
    for (int v = 0; v < w0.universe(); v++)
        if (!w0.test(v) && !w1.test(v)) rest.set(v);
    return rest;
}

ParityGame::ParityGame(std::vector<Player> owners, std::vector<int> colors,
                       std::vector<std::vector<NodeId>> successors,
                       std::vector<std::string> names)
    : owner_(std::move(owners)), color_(std::move(colors)), succ_(std::move(successors)),
      names_(std::move(names))
{
    const size_t n = owner_.size();
    if (color_.size() != n || succ_.size() != n)
        throw std::invalid_argument("parity game: field sizes disagree");
    if (!names_.empty() && names_.size() != n)
        throw std::invalid_argument("parity game: name table size disagrees");
    for (size_t v = 0; v < n; v++) {
        if (owner_[v] != 0 && owner_[v] != 1)
            throw std::invalid_argument("parity game: owner must be 0 or 1");
        if (color_[v] < 0)
            throw std::invalid_argument("parity game: negative color");
        if (succ_[v].empty())
            throw std::invalid_argument("parity game: dead-end at node " + std::to_string(v));
        std::set<NodeId> seen;
        for (NodeId w : succ_[v]) {
            if (w < 0 || static_cast<size_t>(w) >= n)
                throw std::invalid_argument("parity game: successor out of range");
            if (!seen.insert(w).second)
                throw std::invalid_argument("parity game: duplicate successor");
        }
        edge_count_ += static_cast<int>(succ_[v].size());
    }
    rebuild_predecessors();
}

void ParityGame::rebuild_predecessors()
{
    pred_.assign(owner_.size(), {});
    for (size_t v = 0; v < succ_.size(); v++)
        for (NodeId w : succ_[v]) pred_[static_cast<size_t>(w)].push_back(static_cast<NodeId>(v));
}

bool ParityGame::has_edge(NodeId v, NodeId w) const
{
    const auto &sv = succ_[static_cast<size_t>(v)];
    return std::find(sv.begin(), sv.end(), w) != sv.end();
}

const std::string &ParityGame::name(NodeId v) const
{
    static const std::string empty;
    if (names_.empty()) return empty;
    return names_[static_cast<size_t>(v)];
}

std::vector<int> ParityGame::distinct_colors() const
{
    std::vector<int> cs(color_);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
}

int ParityGame::max_color() const
{
    int m = 0;
    for (int c : color_) m = std::max(m, c);
    return m;
}

ParityGame ParityGame::with_color(NodeId v, int color) const
{
    ParityGame g(*this);
    g.color_[static_cast<size_t>(v)] = color;
    return g;
}

ParityGame ParityGame::with_colors(std::vector<int> colors) const
{
    if (colors.size() != color_.size())
        throw std::invalid_argument("with_colors: size mismatch");
    ParityGame g(*this);
    g.color_ = std::move(colors);
    return g;
}

long rank(const ParityGame &g)
{
    long r = g.node_count() + g.edge_count();
    for (NodeId v = 0; v < g.node_count(); v++) r += g.color(v);
    return r;
}

bool pref_leq(Player p, int c1, int c2)
{
    const bool p1 = (c1 % 2) == p;
    const bool p2 = (c2 % 2) == p;
    if (p1 && !p2) return true;
    if (p1 && p2) return c1 <= c2;
    if (!p1 && !p2) return c2 <= c1;
    return false;
}

int path_color(const ParityGame &g, std::span<const NodeId> path)
{
    if (path.empty()) throw std::invalid_argument("path_color: empty path");
    int m = g.color(path[0]);
    for (size_t i = 1; i < path.size(); i++) {
        if (!g.has_edge(path[i - 1], path[i]))
            throw std::invalid_argument("path_color: not a path");
        m = std::min(m, g.color(path[i]));
    }
    return m;
}

RestrictedGame remove_nodes(const ParityGame &g, const NodeSet &z)
{
    const int n = g.node_count();
    std::vector<NodeId> old_to_new(static_cast<size_t>(n), kNoNode);
    int kept = 0;
    for (NodeId v = 0; v < n; v++)
        if (!z.test(v)) old_to_new[static_cast<size_t>(v)] = kept++;

    std::vector<Player> owners(static_cast<size_t>(kept));
    std::vector<int> colors(static_cast<size_t>(kept));
    std::vector<std::vector<NodeId>> succ(static_cast<size_t>(kept));
    std::vector<std::string> names;
    if (g.has_names()) names.resize(static_cast<size_t>(kept));

    for (NodeId v = 0; v < n; v++) {
        NodeId nv = old_to_new[static_cast<size_t>(v)];
        if (nv == kNoNode) continue;
        owners[static_cast<size_t>(nv)] = g.owner(v);
        colors[static_cast<size_t>(nv)] = g.color(v);
        if (g.has_names()) names[static_cast<size_t>(nv)] = g.name(v);
        auto &sv = succ[static_cast<size_t>(nv)];
        for (NodeId w : g.successors(v)) {
            NodeId nw = old_to_new[static_cast<size_t>(w)];
            if (nw != kNoNode) sv.push_back(nw);
        }
        if (sv.empty())
            throw std::invalid_argument("remove_nodes: removal creates a dead-end at node " +
                                        std::to_string(v));
    }
    return {ParityGame(std::move(owners), std::move(colors), std::move(succ), std::move(names)),
            std::move(old_to_new)};
}

namespace {

std::vector<std::vector<NodeId>> copy_successors(const ParityGame &g)
{
    std::vector<std::vector<NodeId>> succ(static_cast<size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); v++) succ[static_cast<size_t>(v)] = g.successors(v);
    return succ;
}

ParityGame rebuild_with_successors(const ParityGame &g, std::vector<std::vector<NodeId>> succ)
{
    std::vector<Player> owners(static_cast<size_t>(g.node_count()));
    std::vector<int> colors(static_cast<size_t>(g.node_count()));
    std::vector<std::string> names;
    if (g.has_names()) names.resize(static_cast<size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); v++) {
        owners[static_cast<size_t>(v)] = g.owner(v);
        colors[static_cast<size_t>(v)] = g.color(v);
        if (g.has_names()) names[static_cast<size_t>(v)] = g.name(v);
    }
    return ParityGame(std::move(owners), std::move(colors), std::move(succ), std::move(names));
}

}  // namespace

ParityGame remove_edge(const ParityGame &g, NodeId v, NodeId w)
{
    if (!g.has_edge(v, w)) throw std::invalid_argument("remove_edge: no such edge");
    if (g.out_degree(v) <= 1)
        throw std::invalid_argument("remove_edge: node would become a dead-end");
    auto succ = copy_successors(g);
    auto &sv = succ[static_cast<size_t>(v)];
    sv.erase(std::find(sv.begin(), sv.end(), w));
    return rebuild_with_successors(g, std::move(succ));
}

ParityGame commit_edge(const ParityGame &g, NodeId v, NodeId w)
{
    if (!g.has_edge(v, w)) throw std::invalid_argument("commit_edge: no such edge");
    auto succ = copy_successors(g);
    succ[static_cast<size_t>(v)] = {w};
    return rebuild_with_successors(g, std::move(succ));
}

}  // namespace pps
