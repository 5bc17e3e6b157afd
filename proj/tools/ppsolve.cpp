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
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pps/harness.hpp"
#include "pps/oracle.hpp"
#include "pps/pgsolver.hpp"

namespace {

using namespace pps;

std::string read_input(const std::string &path)
{
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_report(const ExperimentReport &report, bool json)
{
    if (json) std::cout << report.to_json(true) << "\n";
    else std::cout << report.human();
}

int run_solve(const std::string &input, const std::string &solver_name,
              const std::string &semantics, bool oracle_check, bool json)
{
    GameDocument doc = parse_pgsolver(read_input(input));
    for (const std::string &w : doc.warnings) std::cerr << "warning: " << w << "\n";
    ParityGame game = semantics == "max" ? convert_max_to_min(doc.game) : doc.game;

    WinningRegions regions(game.node_count());
    if (solver_name == "zielonka") {
        regions = zielonka(game);
    } else {
        regions = call_solver(named_solver(solver_name), game);
    }

    long wrong = 0;
    if (oracle_check) {
        WinningRegions oracle = zielonka(game);
        for (Player p : {0, 1})
            for (NodeId v : regions.won(p).to_vector())
                if (oracle.won(opponent(p)).test(v)) wrong++;
        if (wrong > 0)
            std::cerr << "oracle check FAILED: " << wrong << " misclassified node(s)\n";
        else
            std::cerr << "oracle check passed\n";
    }

    if (json) {
        std::ostringstream solution;
        solution << "{\n  \"solver\": \"" << solver_name << "\",\n"
                 << "  \"nodes\": " << game.node_count() << ",\n"
                 << "  \"won_by_0\": " << regions.w0.count() << ",\n"
                 << "  \"won_by_1\": " << regions.w1.count() << ",\n"
                 << "  \"undecided\": " << regions.undecided().count() << ",\n"
                 << "  \"misclassifications\": " << wrong << "\n}\n";
        std::cout << solution.str();
    } else {
        std::cout << emit_solution(regions, game);
    }
    return wrong > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char **argv)
{
    CLI::App app{"compositional partial solvers for parity games"};
    app.require_subcommand(1);

    std::string input, solver = "ps5", semantics = "max", config, out_dir;
    std::uint64_t seed = 0;
    long count = 1000;
    int threads = 1;
    bool oracle_check = false, json = false, self_loops = false, colors_exclusive = false;

    auto add_generator_flags = [&](CLI::App *cmd) {
        cmd->add_option("--config", config, "random game shape xx-yy-aa-bb")->required();
        cmd->add_option("--seed", seed, "base seed; game i uses seed + i");
        cmd->add_option("--count", count, "number of games");
        cmd->add_flag("--self-loops", self_loops, "draw successors from all nodes, self included");
        cmd->add_flag("--colors-exclusive", colors_exclusive,
                      "draw colors from {0..yy-1} instead of {0..yy}");
    };
    auto make_config = [&]() {
        RandomConfig cfg = RandomConfig::parse(config);
        cfg.allow_self_loops = self_loops;
        cfg.color_bound_inclusive = !colors_exclusive;
        cfg.validate();
        return cfg;
    };

    CLI::App *solve = app.add_subcommand("solve", "solve one game file");
    solve->add_option("--input", input, "PGSolver file, - for stdin")->required();
    solve->add_option("--solver", solver,
                      "ps1..ps5, lift-ps5, one-player, zielonka, an analysis name, or "
                      "while:<stage,...>");
    solve->add_option("--semantics", semantics, "color semantics of the file")
        ->check(CLI::IsMember({"max", "min"}));
    solve->add_flag("--oracle-check", oracle_check, "verify the regions against zielonka");
    solve->add_flag("--json", json, "JSON report instead of the solution listing");

    CLI::App *gen = app.add_subcommand("gen", "generate random games");
    add_generator_flags(gen);
    gen->add_option("--out", out_dir, "output directory")->required();

    CLI::App *hunt = app.add_subcommand("hunt", "collect games a solver leaves unsolved");
    hunt->add_option("--solver", solver, "solver name");
    add_generator_flags(hunt);
    hunt->add_option("--out", out_dir, "directory for residual games");
    hunt->add_option("--threads", threads, "worker threads");
    hunt->add_flag("--json", json, "JSON report");

    CLI::App *regress_cmd = app.add_subcommand("regress", "compare a solver against zielonka");
    regress_cmd->add_option("--solver", solver, "solver name");
    add_generator_flags(regress_cmd);
    regress_cmd->add_option("--threads", threads, "worker threads");
    regress_cmd->add_flag("--json", json, "JSON report");

    CLI::App *compare = app.add_subcommand("compare", "per-analysis simplification rates");
    add_generator_flags(compare);
    compare->add_option("--threads", threads, "worker threads");
    compare->add_flag("--json", json, "JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(input, solver, semantics, oracle_check, json);

        if (gen->parsed()) {
            RandomConfig cfg = make_config();
            std::filesystem::create_directories(out_dir);
            for (long i = 0; i < count; i++) {
                ParityGame g = gen_random(cfg, game_seed(seed, i));
                std::string name = "game_" + cfg.to_string() + "_" + std::to_string(seed) + "_" +
                                   std::to_string(i) + ".gm";
                std::ofstream out(std::filesystem::path(out_dir) / name);
                out << serialize_pgsolver(g);
            }
            std::cout << "wrote " << count << " games to " << out_dir << "\n";
            return 0;
        }

        if (hunt->parsed()) {
            HuntResult result =
                hunt_residuals(named_solver(solver), make_config(), count, seed, out_dir, threads);
            print_report(result.report, json);
            return 0;
        }

        if (regress_cmd->parsed()) {
            ExperimentReport report =
                pps::regress(named_solver(solver), make_config(), count, seed, threads);
            print_report(report, json);
            return report.misclassifications > 0 ? 1 : 0;
        }

        if (compare->parsed()) {
            ExperimentReport report = effectiveness_compare({"er_fa", "er_sd", "m_ss", "m_scc"},
                                                            make_config(), count, seed, threads);
            print_report(report, json);
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
