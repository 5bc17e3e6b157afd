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

#include <array>

#include "doctest.h"
#include "pps/analyses.hpp"
#include "pps/compose.hpp"
#include "support.hpp"

using namespace pps;
using test::make_game;

namespace {

const std::array<const char *, 6> kAnalyses{"scc", "sccp", "pp", "fa", "ari", "gfa"};

State random_state(SplitMix64 &rng, int max_nodes = 12)
{
    State s = initial_state(test::random_small_game(rng, max_nodes));
    // Advance by a short random prefix of analyses so laws are exercised
    // on mid-composition states, not only initial ones.
    int steps = static_cast<int>(rng.below(3));
    for (int i = 0; i < steps; i++) {
        auto a = named_analysis(kAnalyses[rng.below(kAnalyses.size())]);
        s = a.transform(s);
    }
    return s;
}

}  // namespace

TEST_CASE("initial state")
{
    State empty = initial_state(ParityGame{});
    CHECK(empty.current_rank() == 0);
    CHECK_NOTHROW(check_state_invariants(empty));

    ParityGame g = make_game({{0, 0, {1}}, {1, 1, {0}}});
    State s = initial_state(g);
    CHECK(s.current == g);
    CHECK(s.represents == std::vector<std::vector<NodeId>>{{0}, {1}});
    CHECK_NOTHROW(check_state_invariants(s));
}

TEST_CASE("color compression map")
{
    CHECK(compress_color_map({0, 2, 3, 6, 7}) == std::vector<int>{0, 0, 1, 2, 3});
    CHECK(compress_color_map({0, 1, 2}) == std::vector<int>{0, 1, 2});
    CHECK(compress_color_map({5}) == std::vector<int>{1});
}

TEST_CASE("scc recolors onto a convex segment")
{
    ParityGame g = make_game(
        {{0, 0, {1}}, {0, 2, {2}}, {1, 3, {3}}, {1, 6, {4}}, {0, 7, {0}}});
    State out = scc_compress(initial_state(g));
    CHECK(out.current.color(0) == 0);
    CHECK(out.current.color(1) == 0);
    CHECK(out.current.color(2) == 1);
    CHECK(out.current.color(3) == 2);
    CHECK(out.current.color(4) == 3);

    State convex = initial_state(make_game({{0, 0, {1}}, {0, 1, {2}}, {1, 2, {0}}}));
    CHECK(scc_compress(convex) == convex);

    State five = initial_state(make_game({{0, 5, {0}}}));
    CHECK(scc_compress(five).current.color(0) == 1);
}

TEST_CASE("per-component compression works componentwise")
{
    // Two disjoint 2-cycles colored {4,6} and {1,3}: same-parity neighbors
    // collapse, each component onto its own convex segment.
    ParityGame g = make_game({{0, 4, {1}}, {1, 6, {0}}, {0, 1, {3}}, {1, 3, {2}}});
    State out = scc_compress_per_scc(initial_state(g));
    CHECK(out.current.color(0) == 0);
    CHECK(out.current.color(1) == 0);
    CHECK(out.current.color(2) == 1);
    CHECK(out.current.color(3) == 1);
    CHECK(test::sound_state(out));

    // A single strongly connected game agrees with plain compression.
    SplitMix64 rng(73);
    for (int i = 0; i < 100; i++) {
        ParityGame game = test::random_small_game(rng);
        if (sccs(game).components.size() != 1) continue;
        State s = initial_state(game);
        CHECK(scc_compress_per_scc(s) == scc_compress(s));
    }

    State fixed = scc_compress_per_scc(initial_state(g));
    CHECK(scc_compress_per_scc(fixed) == fixed);
}

TEST_CASE("priority propagation examples")
{
    // a(c=5) <-> b(c=0): both bounds at a are 0.
    ParityGame g = make_game({{0, 5, {1}}, {1, 0, {0}}});
    State out = priority_propagate(initial_state(g));
    CHECK(out.current.color(0) == 0);
    CHECK(out.current.color(1) == 0);

    // Successor max 2, predecessor max 4 at the color-7 node.
    ParityGame h = make_game({{0, 4, {1}}, {0, 7, {2}}, {1, 2, {2, 1}}});
    State hout = priority_propagate(initial_state(h));
    CHECK(hout.current.color(1) == 2);

    State stable = initial_state(make_game({{0, 0, {1}}, {1, 1, {0, 1}}}));
    CHECK(priority_propagate(stable) == stable);
}

TEST_CASE("fatal attractor step solves the two-cycle")
{
    ParityGame g = make_game({{0, 0, {1}}, {1, 1, {0}}});
    State out = fatal_attractor_step(initial_state(g));
    CHECK(out.current.empty());
    CHECK(out.won0 == NodeSet::of(2, {0, 1}));
    CHECK(out.won1.empty());
    CHECK_NOTHROW(check_state_invariants(out));
}

TEST_CASE("a controlled self-loop is fatal for its color's player")
{
    // The loop re-enters the singleton either when its owner matches the
    // color's player or when the loop is the node's only move.
    SplitMix64 rng(79);
    int hits = 0;
    for (int i = 0; i < 300; i++) {
        ParityGame g = test::random_small_game(rng);
        bool controlled_loop = false;
        for (NodeId v = 0; v < g.node_count() && !controlled_loop; v++)
            if (g.has_edge(v, v) && (g.owner(v) == g.color(v) % 2 || g.out_degree(v) == 1))
                controlled_loop = true;
        if (!controlled_loop) continue;
        hits++;
        CHECK(find_fatal_attractor(g).has_value());
    }
    CHECK(hits > 50);
}

TEST_CASE("rabin index reduction examples")
{
    // 3-cycle where every cycle through node 0 passes color 0.
    ParityGame g = make_game({{0, 3, {1}}, {0, 0, {2}}, {1, 0, {0}}});
    State out = rabin_index_reduce(initial_state(g));
    CHECK(out.current.color(0) == 0);

    State stable = initial_state(make_game({{0, 2, {1}}, {1, 2, {0}}}));
    CHECK(rabin_index_reduce(stable) == stable);

    // A feeder node on no cycle drops to 0.
    ParityGame feeder = make_game({{0, 4, {1}}, {0, 2, {2}}, {1, 2, {1}}});
    State fout = rabin_index_reduce(initial_state(feeder));
    CHECK(fout.current.color(0) == 0);
}

TEST_CASE("gfa decides mixed-color fatal sets that fa misses")
{
    // u0 -> w -> {v2, u0}, v2 -> w: no single color class is fatal, but
    // {u0, v2} (colors 0 and 2) re-enters itself with even minimum.
    ParityGame g = make_game({{0, 0, {1}}, {1, 3, {2, 0}}, {0, 2, {1}}});
    CHECK_FALSE(find_fatal_attractor(g).has_value());

    auto fatal = find_generalized_fatal(g);
    REQUIRE(fatal.has_value());
    CHECK(fatal->player == 0);
    CHECK(fatal->fatal == NodeSet::of(3, {0, 2}));

    State out = generalized_fatal_step(initial_state(g));
    CHECK(out.current.empty());
    CHECK(out.won0 == NodeSet::of(3, {0, 1, 2}));
    CHECK(test::sound_state(out));
    CHECK(zielonka(g).w0.count() == 3);
}

TEST_CASE("gfa decides at least what fa decides")
{
    SplitMix64 rng(83);
    for (int i = 0; i < 400; i++) {
        ParityGame g = test::random_small_game(rng);
        auto fa = find_fatal_attractor(g);
        if (!fa) continue;
        auto gfa = find_generalized_fatal(g);
        REQUIRE(gfa.has_value());
        // The fa-fatal set is gfa-eligible, so the greatest gfa set for
        // that player contains it.
        if (gfa->player == fa->color % 2) CHECK(fa->fatal.is_subset_of(gfa->fatal));
    }
}

TEST_CASE("all six analyses obey the transformer laws")
{
    SplitMix64 rng(89);
    for (int i = 0; i < 1200; i++) {
        State s = random_state(rng);
        for (const char *name : kAnalyses) {
            State out = named_analysis(name).transform(s);
            LawCheck law = check_laws(s, out);
            INFO(name, ": ", law.violation);
            CHECK(law.ok);
        }
    }
}

TEST_CASE("each analysis preserves the oracle regions")
{
    SplitMix64 rng(97);
    for (int i = 0; i < 250; i++) {
        State s = random_state(rng, 9);
        for (const char *name : kAnalyses) {
            State out = named_analysis(name).transform(s);
            if (out.current_rank() == s.current_rank()) continue;
            INFO(name);
            CHECK(test::sound_state(out));
        }
    }
    // Medium-sized games as well, one application each.
    RandomConfig cfg = RandomConfig::parse("28-14-2-3");
    for (std::uint64_t seed = 0; seed < 150; seed++) {
        State s = initial_state(gen_random(cfg, seed));
        for (const char *name : kAnalyses) {
            State out = named_analysis(name).transform(s);
            if (out.current_rank() == s.current_rank()) continue;
            INFO(name, " on 28-14-2-3 seed ", seed);
            CHECK(test::sound_state(out));
        }
    }
}

TEST_CASE("ari never raises a color; scc is monotone in the preference order")
{
    SplitMix64 rng(101);
    for (int i = 0; i < 300; i++) {
        ParityGame g = test::random_small_game(rng);
        State s = initial_state(g);
        State a = rabin_index_reduce(s);
        for (NodeId v = 0; v < g.node_count(); v++)
            CHECK(a.current.color(v) <= g.color(v));
        // Compression may identify same-parity neighbors but never swaps
        // two colors in any player's preference order.
        State c = scc_compress(s);
        for (NodeId v = 0; v < g.node_count(); v++)
            for (NodeId w = 0; w < g.node_count(); w++)
                for (Player p : {0, 1})
                    if (pref_leq(p, g.color(v), g.color(w)))
                        CHECK(pref_leq(p, c.current.color(v), c.current.color(w)));
    }
}

TEST_CASE("ari erases odd colors that cannot recur as the minimum")
{
    // The color-1 node's only cycles pass a color-0 node; leaving it odd
    // would block the one-player interaction of sccp, ari and fa.
    ParityGame g = make_game({{1, 1, {1}}, {1, 0, {0, 2}}, {1, 2, {1}}});
    State out = rabin_index_reduce(initial_state(g));
    CHECK(out.current.color(0) == 0);
    CHECK(test::sound_state(out));
}

TEST_CASE("iterating one analysis reaches its fixpoint within rank steps")
{
    SplitMix64 rng(103);
    for (int i = 0; i < 100; i++) {
        State s = initial_state(test::random_small_game(rng));
        for (const char *name : kAnalyses) {
            auto a = named_analysis(name);
            State t = s;
            long steps = 0;
            for (;;) {
                State next = a.transform(t);
                if (next.current_rank() == t.current_rank()) break;
                t = std::move(next);
                steps++;
            }
            CHECK(steps <= s.current_rank());
        }
    }
}
