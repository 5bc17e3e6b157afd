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

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "pps/harness.hpp"
#include "pps/pgsolver.hpp"
#include "support.hpp"

using namespace pps;

TEST_CASE("random config parsing")
{
    RandomConfig cfg = RandomConfig::parse("50-25-2-3");
    CHECK(cfg.nodes == 50);
    CHECK(cfg.color_bound == 25);
    CHECK(cfg.min_degree == 2);
    CHECK(cfg.max_degree == 3);
    CHECK(cfg.to_string() == "50-25-2-3");

    CHECK_THROWS_AS(RandomConfig::parse("50-25-2"), std::invalid_argument);
    CHECK_THROWS_AS(RandomConfig::parse("50-25-3-2"), std::invalid_argument);
    CHECK_THROWS_AS(RandomConfig::parse("2-5-1-3"), std::invalid_argument);  // bb > xx
}

TEST_CASE("generated games satisfy the configuration")
{
    RandomConfig cfg = RandomConfig::parse("50-25-2-3");
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        ParityGame g = gen_random(cfg, seed);
        REQUIRE(g.node_count() == 50);
        for (NodeId v = 0; v < g.node_count(); v++) {
            CHECK(g.out_degree(v) >= 2);
            CHECK(g.out_degree(v) <= 3);
            CHECK(g.color(v) >= 0);
            CHECK(g.color(v) <= 25);
        }
    }
    CHECK(gen_random(cfg, 7) == gen_random(cfg, 7));
    CHECK_FALSE(gen_random(cfg, 7) == gen_random(cfg, 8));

    // The exclusive reading never draws the bound itself.
    RandomConfig excl = cfg;
    excl.color_bound_inclusive = false;
    bool saw_bound = false;
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        ParityGame g = gen_random(excl, seed);
        for (NodeId v = 0; v < g.node_count(); v++)
            if (g.color(v) >= 25) saw_bound = true;
    }
    CHECK_FALSE(saw_bound);
}

TEST_CASE("one-player generation forces the ownership")
{
    RandomConfig cfg = RandomConfig::parse("20-10-1-3");
    for (Player p : {0, 1}) {
        ParityGame g = gen_one_player(cfg, 5, p);
        for (NodeId v = 0; v < g.node_count(); v++) CHECK(g.owner(v) == p);
    }
}

TEST_CASE("regress reports zero misclassifications for sound solvers")
{
    RandomConfig cfg = RandomConfig::parse("12-6-1-3");
    ExperimentReport report = regress(named_solver("ps1"), cfg, 150, 42, 2);
    CHECK(report.games_run == 150);
    CHECK(report.misclassifications == 0);
    CHECK(report.passing());
}

TEST_CASE("reports are bit-for-bit reproducible")
{
    RandomConfig cfg = RandomConfig::parse("10-5-1-2");
    ExperimentReport a = regress(named_solver("ps1"), cfg, 60, 7, 1);
    ExperimentReport b = regress(named_solver("ps1"), cfg, 60, 7, 2);
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("hunted residual games reload and stay residual")
{
    // while(fa) alone leaves plenty of residual games at this shape.
    PartialSolver fa = named_solver("while:fa");
    RandomConfig cfg = RandomConfig::parse("12-6-2-3");
    auto dir = std::filesystem::temp_directory_path() / "pps_hunt_test";
    std::filesystem::remove_all(dir);

    HuntResult hunt = hunt_residuals(fa, cfg, 80, 3, dir.string(), 2);
    CHECK(hunt.report.games_run == 80);
    REQUIRE(hunt.residuals.size() ==
            static_cast<size_t>(hunt.report.residual_counts.at("while:fa")));
    REQUIRE(!hunt.residuals.empty());

    for (const auto &[index, game] : hunt.residuals) {
        auto file = dir / ("residual_while:fa_3_" + std::to_string(index) + ".gm");
        REQUIRE(std::filesystem::exists(file));
        std::ifstream in(file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        GameDocument doc = parse_pgsolver(text);
        CHECK(doc.game == game);
        State solved = fa.transform(initial_state(doc.game));
        CHECK_FALSE(solved.current.empty());  // confirmed residual
    }
    CHECK(std::filesystem::exists(dir / "index.jsonl"));
    std::filesystem::remove_all(dir);

    HuntResult none = hunt_residuals(fa, cfg, 0, 3);
    CHECK(none.report.games_run == 0);
    CHECK(none.residuals.empty());
}

TEST_CASE("effectiveness comparison counts simplifications")
{
    ExperimentReport report = effectiveness_compare({"m_ss", "m_scc", "er_fa", "er_sd"},
                                                    RandomConfig::parse("14-7-2-3"), 60, 11, 2);
    CHECK(report.tests_run == 60);
    CHECK(report.games_run >= 60);
    // er_fa simplifies nearly every fatal-attractor-free state.
    CHECK(report.simplification_counts.at("er_fa") > 30);
}

TEST_CASE("unit analysis protocol passes on all four refinement analyses")
{
    RandomConfig cfg = RandomConfig::parse("12-6-2-3");
    for (const char *name : {"m_ss", "m_scc", "er_fa", "er_sd"}) {
        ExperimentReport report = unit_analysis(name, cfg, 40, 23, 2);
        INFO(name);
        CHECK(report.tests_run == 40);
        CHECK(report.failures == 0);
    }
}

TEST_CASE("the refinement sweep aggregates residuals monotonically")
{
    SweepOptions opt;
    opt.oracle = true;
    opt.lift_ps5 = true;
    opt.threads = 2;
    opt.sample_from_scratch = 50;
    SweepResult sweep = refinement_sweep(RandomConfig::parse("14-7-2-3"), 300, 17, opt);
    CHECK(sweep.report.games_run == 300);
    CHECK(sweep.report.misclassifications == 0);
    CHECK(sweep.monotonicity_violations == 0);
    CHECK(sweep.chain_mismatches == 0);
    long prev = 301;
    for (const auto &name : pipeline_names()) {
        long count = sweep.report.residual_counts.at(name);
        CHECK(count <= prev);
        prev = count;
    }
    CHECK(sweep.lift_incomplete == 0);
    CHECK(sweep.lift_misclassified == 0);
}
