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

#include "pps/pgsolver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pps {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line), column_(column)
{
}

namespace {

// Character-level cursor with line/column tracking.
class Cursor {
  public:
    explicit Cursor(const std::string &text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance()
    {
        if (text_[pos_] == '\n') {
            line_++;
            column_ = 1;
        } else {
            column_++;
        }
        pos_++;
    }

    void skip_space()
    {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n'))
            advance();
    }

    [[noreturn]] void fail(const std::string &message) const
    {
        throw ParseError(message, line_, column_);
    }

    long parse_number()
    {
        skip_space();
        if (eof()) fail("unexpected end of input, expected a number");
        if (peek() == '-') fail("negative number not allowed");
        if (peek() < '0' || peek() > '9') fail("expected a number");
        long value = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (peek() - '0');
            if (value > 1'000'000'000L) fail("number out of range");
            advance();
        }
        return value;
    }

    bool try_consume(char c)
    {
        skip_space();
        if (eof() || peek() != c) return false;
        advance();
        return true;
    }

    void expect(char c, const std::string &what)
    {
        skip_space();
        if (eof() || peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
        advance();
    }

    bool try_keyword(const std::string &kw)
    {
        skip_space();
        if (text_.compare(pos_, kw.size(), kw) != 0) return false;
        for (size_t i = 0; i < kw.size(); i++) advance();
        return true;
    }

    std::string parse_quoted()
    {
        // Opening quote already consumed by the caller's check.
        advance();
        std::string out;
        while (!eof() && peek() != '"') {
            if (peek() == '\n') fail("unterminated name");
            out.push_back(peek());
            advance();
        }
        if (eof()) fail("unterminated name");
        advance();
        return out;
    }

    bool at_quote()
    {
        skip_space();
        return !eof() && peek() == '"';
    }

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    const std::string &text_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

struct RawNode {
    long id;
    int color;
    Player owner;
    std::vector<long> successors;
    std::string name;
    bool named = false;
    int line, column;
};

}  // namespace

GameDocument parse_pgsolver(const std::string &text)
{
    Cursor cur(text);
    GameDocument doc;

    cur.skip_space();
    if (cur.try_keyword("parity")) {
        cur.parse_number();  // declared max id; informational only
        cur.expect(';', "after the parity header");
    }

    std::vector<RawNode> nodes;
    std::map<long, size_t> by_id;
    for (;;) {
        cur.skip_space();
        if (cur.eof()) break;

        RawNode node;
        node.line = cur.line();
        node.column = cur.column();
        node.id = cur.parse_number();
        long color = cur.parse_number();
        long owner = cur.parse_number();
        if (owner != 0 && owner != 1) cur.fail("owner must be 0 or 1");
        node.color = static_cast<int>(color);
        node.owner = static_cast<Player>(owner);

        node.successors.push_back(cur.parse_number());
        while (cur.try_consume(',')) node.successors.push_back(cur.parse_number());

        if (cur.at_quote()) {
            node.name = cur.parse_quoted();
            node.named = true;
        }
        cur.expect(';', "at the end of the node line");

        if (by_id.contains(node.id))
            throw ParseError("duplicate declaration of node " + std::to_string(node.id),
                             node.line, node.column);
        by_id[node.id] = nodes.size();
        nodes.push_back(std::move(node));
    }

    // Compact sparse ids in ascending order.
    std::map<long, NodeId> compact;
    for (const auto &[id, idx] : by_id) compact[id] = static_cast<NodeId>(compact.size());

    const int n = static_cast<int>(nodes.size());
    std::vector<Player> owners(static_cast<size_t>(n));
    std::vector<int> colors(static_cast<size_t>(n));
    std::vector<std::vector<NodeId>> succ(static_cast<size_t>(n));
    std::vector<std::string> names;
    bool any_named = std::any_of(nodes.begin(), nodes.end(), [](const RawNode &r) { return r.named; });
    if (any_named) names.resize(static_cast<size_t>(n));

    for (const RawNode &raw : nodes) {
        NodeId v = compact.at(raw.id);
        owners[static_cast<size_t>(v)] = raw.owner;
        colors[static_cast<size_t>(v)] = raw.color;
        if (any_named) names[static_cast<size_t>(v)] = raw.name;
        auto &sv = succ[static_cast<size_t>(v)];
        for (long target : raw.successors) {
            auto it = compact.find(target);
            if (it == compact.end())
                throw ParseError("successor " + std::to_string(target) + " of node " +
                                 std::to_string(raw.id) + " is not declared",
                                 raw.line, raw.column);
            if (std::find(sv.begin(), sv.end(), it->second) != sv.end()) {
                doc.warnings.push_back("node " + std::to_string(raw.id) +
                                       ": duplicate successor " + std::to_string(target) +
                                       " dropped");
                continue;
            }
            sv.push_back(it->second);
        }
        if (sv.empty())
            throw ParseError("node " + std::to_string(raw.id) + " is a dead-end", raw.line,
                             raw.column);
    }

    doc.game = ParityGame(std::move(owners), std::move(colors), std::move(succ), std::move(names));
    return doc;
}

std::string serialize_pgsolver(const ParityGame &game)
{
    std::ostringstream out;
    out << "parity " << std::max(0, game.node_count() - 1) << ";\n";
    for (NodeId v = 0; v < game.node_count(); v++) {
        out << v << ' ' << game.color(v) << ' ' << game.owner(v) << ' ';
        const auto &sv = game.successors(v);
        for (size_t i = 0; i < sv.size(); i++) {
            if (i) out << ',';
            out << sv[i];
        }
        if (game.has_names() && !game.name(v).empty()) out << " \"" << game.name(v) << '"';
        out << ";\n";
    }
    return out.str();
}

std::string serialize_pgsolver(const GameDocument &doc) { return serialize_pgsolver(doc.game); }

ParityGame convert_max_to_min(const ParityGame &g)
{
    if (g.empty()) return g;
    int m = g.max_color();
    if (m % 2 != 0) m++;
    std::vector<int> colors(static_cast<size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); v++) colors[static_cast<size_t>(v)] = m - g.color(v);
    return g.with_colors(std::move(colors));
}

std::string emit_solution(const WinningRegions &regions, const ParityGame &game)
{
    std::ostringstream out;
    for (NodeId v = 0; v < game.node_count(); v++) {
        out << v << ' ';
        if (regions.w0.test(v)) out << '0';
        else if (regions.w1.test(v)) out << '1';
        else out << '?';
        out << '\n';
    }
    return out.str();
}

}  // namespace pps
