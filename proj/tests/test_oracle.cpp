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
#include "pps/attractor.hpp"
#include "support.hpp"

using namespace pps;
using test::make_game;

TEST_CASE("zielonka on hand-solved games")
{
    CHECK(zielonka(ParityGame{}).w0.empty());

    // Minimal color 0 is even and recurs on the only play.
    ParityGame g = make_game({{0, 0, {1}}, {1, 1, {0}}});
    WinningRegions r = zielonka(g);
    CHECK(r.w0 == NodeSet::of(2, {0, 1}));
    CHECK(r.w1.empty());

    ParityGame odd_loop = make_game({{0, 1, {0}}});
    r = zielonka(odd_loop);
    CHECK(r.w1 == NodeSet::of(1, {0}));

    // Two separate self-loop components, even and odd, plus feeders: the
    // feeder of the even loop is won by 0, the odd side by 1.
    ParityGame split = make_game({{0, 0, {0}}, {1, 2, {0}}, {1, 1, {2}}, {0, 3, {2}}});
    r = zielonka(split);
    CHECK(r.w0 == NodeSet::of(4, {0, 1}));
    CHECK(r.w1 == NodeSet::of(4, {2, 3}));
}

TEST_CASE("brute force on trivial games")
{
    CHECK(brute_force(ParityGame{}).w0.empty());
    ParityGame even_loop = make_game({{1, 0, {0}}});
    CHECK(brute_force(even_loop).w0 == NodeSet::of(1, {0}));
    CHECK_THROWS_AS(brute_force(gen_random(RandomConfig{20, 3, 1, 2}, 1)),
                    std::invalid_argument);
}

TEST_CASE("zielonka equals brute force on every tiny game")
{
    // The exhaustive sweep up to 3 nodes runs in the acceptance suite;
    // the 2-node space is cheap enough to cover here entirely.
    long games = 0;
    test::for_each_small_game(2, 2, 3, [&](const ParityGame &g) {
        games++;
        REQUIRE(zielonka(g) == brute_force(g));
    });
    CHECK(games == 8 + 24 * 24);
}

TEST_CASE("zielonka equals brute force on random small games")
{
    SplitMix64 rng(53);
    for (int i = 0; i < 1500; i++) {
        ParityGame g = test::random_small_game(rng);
        REQUIRE(zielonka(g) == brute_force(g));
    }
}

TEST_CASE("zielonka regions are closed under their attractor")
{
    SplitMix64 rng(59);
    for (int i = 0; i < 300; i++) {
        ParityGame g = test::random_small_game(rng);
        WinningRegions r = zielonka(g);
        for (Player p : {0, 1}) CHECK(attractor(g, p, r.won(p)) == r.won(p));
    }
}
