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

#include "doctest.h"
#include "pps/pgsolver.hpp"
#include "support.hpp"

using namespace pps;
using test::make_game;

TEST_CASE("parse the documented grammar")
{
    GameDocument doc = parse_pgsolver("parity 1; 0 0 0 1; 1 1 1 0;");
    REQUIRE(doc.game.node_count() == 2);
    CHECK(doc.game.owner(0) == 0);
    CHECK(doc.game.color(0) == 0);
    CHECK(doc.game.successors(0) == std::vector<NodeId>{1});
    CHECK(doc.game.owner(1) == 1);
    CHECK(doc.game.color(1) == 1);
    CHECK(doc.game.successors(1) == std::vector<NodeId>{0});
    CHECK(doc.warnings.empty());

    GameDocument named = parse_pgsolver("0 5 0 0 \"loop\";");
    REQUIRE(named.game.node_count() == 1);
    CHECK(named.game.color(0) == 5);
    CHECK(named.game.successors(0) == std::vector<NodeId>{0});
    CHECK(named.game.name(0) == "loop");
}

TEST_CASE("parse errors carry line and column")
{
    CHECK_THROWS_AS(parse_pgsolver("0 0 2 1;"), ParseError);           // owner
    CHECK_THROWS_AS(parse_pgsolver("0 -1 0 0;"), ParseError);          // negative priority
    CHECK_THROWS_AS(parse_pgsolver("0 0 0 1;"), ParseError);           // missing successor
    CHECK_THROWS_AS(parse_pgsolver("0 0 0 0"), ParseError);            // missing semicolon
    CHECK_THROWS_AS(parse_pgsolver("0 0 0 0; 0 1 1 0;"), ParseError);  // duplicate node

    try {
        parse_pgsolver("parity 1;\n0 0 0 1;\n1 1 3 0;");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("owner") != std::string::npos);
    }
}

TEST_CASE("sparse ids are compacted and duplicates deduplicated")
{
    GameDocument doc = parse_pgsolver("4 1 0 10,4,10; 10 2 1 4;");
    REQUIRE(doc.game.node_count() == 2);
    // id 4 -> node 0, id 10 -> node 1
    CHECK(doc.game.successors(0) == std::vector<NodeId>{1, 0});
    CHECK(doc.game.successors(1) == std::vector<NodeId>{0});
    REQUIRE(doc.warnings.size() == 1);
    CHECK(doc.warnings[0].find("duplicate successor") != std::string::npos);
}

TEST_CASE("serialization is stable and round-trips")
{
    CHECK(serialize_pgsolver(ParityGame{}) == "parity 0;\n");

    ParityGame g = make_game({{0, 0, {1}}, {1, 1, {0}}});
    CHECK(serialize_pgsolver(g) == "parity 1;\n0 0 0 1;\n1 1 1 0;\n");

    SplitMix64 rng(61);
    for (int i = 0; i < 200; i++) {
        ParityGame game = test::random_small_game(rng);
        std::string text = serialize_pgsolver(game);
        GameDocument doc = parse_pgsolver(text);
        CHECK(doc.game == game);
        CHECK(serialize_pgsolver(doc) == text);  // one pass normalizes
    }
}

TEST_CASE("max-to-min conversion examples")
{
    ParityGame zero = make_game({{0, 0, {0}}});
    CHECK(convert_max_to_min(zero) == zero);

    ParityGame g12 = make_game({{0, 1, {1}}, {1, 2, {0}}});
    ParityGame converted = convert_max_to_min(g12);
    CHECK(converted.color(0) == 1);
    CHECK(converted.color(1) == 0);

    ParityGame g0123 = make_game({{0, 0, {1}}, {0, 1, {2}}, {1, 2, {3}}, {1, 3, {0}}});
    ParityGame c = convert_max_to_min(g0123);
    CHECK(c.color(0) == 4);
    CHECK(c.color(1) == 3);
    CHECK(c.color(2) == 2);
    CHECK(c.color(3) == 1);
}

TEST_CASE("conversion preserves winners against an independent max oracle")
{
    test::for_each_small_game(2, 2, 3, [&](const ParityGame &g) {
        REQUIRE(test::brute_force_max(g) == brute_force(convert_max_to_min(g)));
    });
    SplitMix64 rng(67);
    for (int i = 0; i < 500; i++) {
        ParityGame g = test::random_small_game(rng, 6, 5);
        REQUIRE(test::brute_force_max(g) == brute_force(convert_max_to_min(g)));
    }
}

TEST_CASE("applying the conversion twice keeps the winners")
{
    SplitMix64 rng(71);
    for (int i = 0; i < 300; i++) {
        ParityGame g = test::random_small_game(rng);
        CHECK(zielonka(g) == zielonka(convert_max_to_min(convert_max_to_min(g))));
    }
}

TEST_CASE("solution report format")
{
    ParityGame g = make_game({{0, 0, {1}}, {1, 1, {0}}, {0, 2, {2}}});
    WinningRegions r(3);
    r.w0.set(0);
    r.w1.set(1);
    CHECK(emit_solution(r, g) == "0 0\n1 1\n2 ?\n");
}
