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

#include <stdexcept>
#include <string>
#include <vector>

#include "pps/game.hpp"

namespace pps {

/// Whether the colors in a file encode max-parity (the benchmark
/// convention) or min-parity (the internal semantics).
enum class ColorSemantics { kMin, kMax };

/// A parsed game plus surface details of its file representation.
struct GameDocument {
    ParityGame game;
    ColorSemantics declared_semantics = ColorSemantics::kMax;
    std::vector<std::string> warnings;  // e.g. deduplicated successor entries
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// Parses the PGSolver text format:
///   [ "parity" <max-id> ";" ]  then per node
///   <id> <priority> <owner> <succ> ("," <succ>)* [ "name in quotes" ] ";"
/// Node ids may be sparse; they are compacted in ascending order. A
/// successor referencing an undeclared node, an owner outside {0,1}, a
/// negative priority, a duplicate declaration or a dead-end is an error
/// (reported with line and column). Duplicate successor entries are
/// dropped with a warning.
GameDocument parse_pgsolver(const std::string &text);

/// Emits the header and one line per node in ascending id order; output is
/// stable for a fixed game, and parse(serialize(d)) reproduces owners,
/// colors, edge sets and names.
std::string serialize_pgsolver(const GameDocument &doc);
std::string serialize_pgsolver(const ParityGame &game);

/// Recolors a max-parity game to the equivalent min-parity game: with
/// M = max color rounded up to even, each color c becomes M - c. Winners
/// are preserved because the max of a play's recurring colors is M minus
/// the min of the recolored ones, and M is even.
ParityGame convert_max_to_min(const ParityGame &g);

/// Solution report: one line "<id> <0|1|?>" per node, sorted by id.
std::string emit_solution(const WinningRegions &regions, const ParityGame &game);

}  // namespace pps
