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

#include "pps/harness.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pps/analyses.hpp"
#include "pps/oracle.hpp"
#include "pps/parallel.hpp"
#include "pps/pgsolver.hpp"

namespace pps {

namespace {

using ordered_json = nlohmann::ordered_json;

class Stopwatch {
  public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Solver regions never contradicting the oracle is the soundness bar;
/// a node decided for p that the oracle gives to the opponent is a
/// misclassification.
long misclassified_nodes(const WinningRegions &partial, const WinningRegions &oracle)
{
    long bad = 0;
    for (Player p : {0, 1})
        for (NodeId v : partial.won(p).to_vector())
            if (oracle.won(opponent(p)).test(v)) bad++;
    return bad;
}

const std::vector<Pipeline> &refinement_pipelines()
{
    static const std::vector<Pipeline> chain = [] {
        std::vector<Pipeline> out;
        for (const auto &name : pipeline_names()) out.push_back(named_pipeline(name));
        return out;
    }();
    return chain;
}

}  // namespace

std::uint64_t game_seed(std::uint64_t base, long index)
{
    return base + static_cast<std::uint64_t>(index);
}

std::string ExperimentReport::to_json(bool include_timing) const
{
    ordered_json j;
    j["experiment"] = experiment;
    if (!solver.empty()) j["solver"] = solver;
    if (!config.empty()) j["config"] = config;
    j["seed"] = seed;
    j["games_run"] = games_run;
    if (tests_run) j["tests_run"] = tests_run;
    j["misclassifications"] = misclassifications;
    j["failures"] = failures;
    if (!residual_counts.empty()) j["residual_counts"] = residual_counts;
    if (!simplification_counts.empty()) j["simplification_counts"] = simplification_counts;
    if (!counters.empty()) j["counters"] = counters;
    if (include_timing) j["wall_seconds"] = wall_seconds;
    return j.dump(2);
}

std::string ExperimentReport::human() const
{
    std::ostringstream out;
    out << "experiment: " << experiment;
    if (!solver.empty()) out << " (" << solver << ")";
    out << "\n";
    if (!config.empty()) out << "  config: " << config << ", seed: " << seed << "\n";
    else out << "  seed: " << seed << "\n";
    out << "  games run: " << games_run << "\n";
    if (tests_run) out << "  tests run: " << tests_run << "\n";
    out << "  misclassifications: " << misclassifications << "\n";
    if (failures) out << "  failures: " << failures << "\n";
    for (const auto &[name, count] : residual_counts)
        out << "  residual games for " << name << ": " << count << "\n";
    for (const auto &[name, count] : simplification_counts)
        out << "  states simplified by " << name << ": " << count << "\n";
    for (const auto &[name, count] : counters) out << "  " << name << ": " << count << "\n";
    out << "  wall time: " << wall_seconds << " s\n";
    return out.str();
}

ExperimentReport regress(const PartialSolver &solver, const RandomConfig &cfg, long count,
                         std::uint64_t seed, int threads, std::optional<Player> one_player)
{
    Stopwatch watch;
    struct Outcome {
        long miscl = 0;
        bool residual = false;
        long undecided = 0;
    };
    auto outcomes = parallel_map<Outcome>(count, threads, [&](long i) {
        ParityGame g = one_player ? gen_one_player(cfg, game_seed(seed, i), *one_player)
                                  : gen_random(cfg, game_seed(seed, i));
        WinningRegions got = call_solver(solver, g);
        WinningRegions oracle = zielonka(g);
        Outcome o;
        o.miscl = misclassified_nodes(got, oracle);
        o.undecided = got.undecided().count();
        o.residual = o.undecided > 0;
        return o;
    });

    ExperimentReport report;
    report.experiment = "regress";
    report.solver = solver.name;
    report.config = cfg.to_string();
    report.seed = seed;
    for (const Outcome &o : outcomes) {
        report.games_run++;
        report.misclassifications += o.miscl;
        if (o.residual) report.residual_counts[solver.name]++;
        report.counters["undecided_nodes"] += o.undecided;
    }
    report.residual_counts.try_emplace(solver.name, 0);
    report.wall_seconds = watch.seconds();
    return report;
}

ExperimentReport regress_games(const PartialSolver &solver, const std::vector<ParityGame> &games)
{
    Stopwatch watch;
    ExperimentReport report;
    report.experiment = "regress";
    report.solver = solver.name;
    report.residual_counts[solver.name] = 0;
    for (const ParityGame &g : games) {
        report.games_run++;
        WinningRegions got = call_solver(solver, g);
        WinningRegions oracle = zielonka(g);
        report.misclassifications += misclassified_nodes(got, oracle);
        long undecided = got.undecided().count();
        if (undecided > 0) report.residual_counts[solver.name]++;
        report.counters["undecided_nodes"] += undecided;
    }
    report.wall_seconds = watch.seconds();
    return report;
}

HuntResult hunt_residuals(const PartialSolver &solver, const RandomConfig &cfg, long count,
                          std::uint64_t seed, const std::string &out_dir, int threads)
{
    Stopwatch watch;
    struct Outcome {
        bool residual = false;
        int undecided = 0;
        long residual_rank = 0;
        ParityGame game;
    };
    auto outcomes = parallel_map<Outcome>(count, threads, [&](long i) {
        ParityGame g = gen_random(cfg, game_seed(seed, i));
        State s = solver.transform(initial_state(g));
        Outcome o;
        o.undecided = g.node_count() - s.won0.count() - s.won1.count();
        o.residual = !s.current.empty();
        o.residual_rank = s.current_rank();
        if (o.residual) o.game = std::move(g);
        return o;
    });

    HuntResult result;
    result.report.experiment = "hunt";
    result.report.solver = solver.name;
    result.report.config = cfg.to_string();
    result.report.seed = seed;
    result.report.residual_counts[solver.name] = 0;
    for (long i = 0; i < count; i++) {
        Outcome &o = outcomes[static_cast<size_t>(i)];
        result.report.games_run++;
        if (!o.residual) continue;
        result.report.residual_counts[solver.name]++;
        result.residuals.emplace_back(i, std::move(o.game));
    }

    if (!out_dir.empty() && !result.residuals.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream index(std::filesystem::path(out_dir) / "index.jsonl", std::ios::app);
        for (const auto &[i, game] : result.residuals) {
            std::string file = "residual_" + solver.name + "_" + std::to_string(seed) + "_" +
                               std::to_string(i) + ".gm";
            std::ofstream out(std::filesystem::path(out_dir) / file);
            out << serialize_pgsolver(game);
            const Outcome &o = outcomes[static_cast<size_t>(i)];
            ordered_json line;
            line["file"] = file;
            line["solver"] = solver.name;
            line["config"] = cfg.to_string();
            line["seed"] = seed;
            line["index"] = i;
            line["nodes"] = game.node_count();
            line["undecided"] = o.undecided;
            line["residual_rank"] = o.residual_rank;
            index << line.dump() << "\n";
        }
    }
    result.report.wall_seconds = watch.seconds();
    return result;
}

std::optional<State> fa_residual_state(const ParityGame &g)
{
    static const Pipeline fa_only{"while(fa)", {named_analysis("fa")}};
    State s = while_solve(fa_only, initial_state(g));
    if (s.current.empty()) return std::nullopt;
    return s;
}

ExperimentReport effectiveness_compare(const std::vector<std::string> &analysis_names,
                                       const RandomConfig &cfg, long states, std::uint64_t seed,
                                       int threads)
{
    Stopwatch watch;
    std::vector<PartialSolver> analyses;
    for (const auto &name : analysis_names) analyses.push_back(named_analysis(name));

    ExperimentReport report;
    report.experiment = "compare";
    report.config = cfg.to_string();
    report.seed = seed;
    for (const auto &a : analyses) report.simplification_counts[a.name] = 0;

    struct Outcome {
        bool prepared = false;
        std::uint32_t simplified_mask = 0;
    };
    const long batch = std::max<long>(threads * 64, 256);
    long prepared = 0;
    for (long base = 0; prepared < states; base += batch) {
        auto outcomes = parallel_map<Outcome>(batch, threads, [&](long j) {
            ParityGame g = gen_random(cfg, game_seed(seed, base + j));
            Outcome o;
            std::optional<State> s = fa_residual_state(g);
            if (!s) return o;
            o.prepared = true;
            for (size_t a = 0; a < analyses.size(); a++) {
                State next = analyses[a].transform(*s);
                if (next.current_rank() < s->current_rank()) o.simplified_mask |= 1u << a;
            }
            return o;
        });
        for (const Outcome &o : outcomes) {
            report.games_run++;
            if (!o.prepared) continue;
            prepared++;
            for (size_t a = 0; a < analyses.size(); a++)
                if (o.simplified_mask & (1u << a)) report.simplification_counts[analyses[a].name]++;
            if (prepared == states) break;
        }
    }
    report.tests_run = prepared;
    report.wall_seconds = watch.seconds();
    return report;
}

ExperimentReport unit_analysis(const std::string &analysis_name, const RandomConfig &cfg,
                               long tests, std::uint64_t seed, int threads)
{
    Stopwatch watch;
    const PartialSolver analysis = named_analysis(analysis_name);
    // The merge analyses and er_fa are only sound on games without fatal
    // attractors (the pipelines guarantee that by placing them after fa);
    // repeated application stops once that no longer holds. m_ss is
    // included: dropping the internal w->v loop is only safe when {w}
    // cannot be fatal.
    const bool needs_fa_free =
        analysis_name == "m_ss" || analysis_name == "m_scc" || analysis_name == "er_fa";

    ExperimentReport report;
    report.experiment = "unit";
    report.solver = analysis_name;
    report.config = cfg.to_string();
    report.seed = seed;

    struct Outcome {
        long changes = 0;
        long failures = 0;
    };
    const long batch = std::max<long>(threads * 32, 128);
    for (long base = 0; report.tests_run < tests; base += batch) {
        auto outcomes = parallel_map<Outcome>(batch, threads, [&](long j) {
            ParityGame g = gen_random(cfg, game_seed(seed, base + j));
            Outcome o;
            std::optional<State> prep = fa_residual_state(g);
            if (!prep) return o;
            WinningRegions oracle = zielonka(g);
            State s = *prep;
            for (;;) {
                State next = analysis.transform(s);
                if (next.current_rank() == s.current_rank()) break;
                o.changes++;
                WinningRegions reconstructed = absorb_regions(next, zielonka(next.current));
                if (!(reconstructed == oracle)) o.failures++;
                s = std::move(next);
                if (needs_fa_free && find_fatal_attractor(s.current)) break;
            }
            return o;
        });
        for (const Outcome &o : outcomes) {
            report.games_run++;
            long take = std::min(o.changes, tests - report.tests_run);
            report.tests_run += take;
            // A failed change inside the consumed prefix counts; failures
            // only ever appear on broken implementations, so the exact
            // prefix attribution is moot.
            report.failures += std::min(o.failures, take);
            if (report.tests_run >= tests) break;
        }
    }
    report.wall_seconds = watch.seconds();
    return report;
}

std::vector<State> refinement_chain_states(std::shared_ptr<const ParityGame> g)
{
    std::vector<State> out;
    out.reserve(refinement_pipelines().size());
    State s = initial_state(std::move(g));
    for (const Pipeline &pl : refinement_pipelines()) {
        s = while_solve(pl, std::move(s));
        out.push_back(s);
    }
    return out;
}

SweepResult refinement_sweep(const RandomConfig &cfg, long count, std::uint64_t seed,
                             const SweepOptions &opt)
{
    Stopwatch watch;
    const auto &pipelines = refinement_pipelines();
    const size_t k = pipelines.size();

    struct Outcome {
        std::uint8_t residual_mask = 0;
        std::uint8_t miscl_mask = 0;
        bool monotone = true;
        bool chain_ok = true;
        bool lift_ran = false;
        bool lift_changed = false;
        bool lift_complete = false;
        bool lift_correct = false;
    };
    auto outcomes = parallel_map<Outcome>(count, opt.threads, [&](long i) {
        auto g = std::make_shared<const ParityGame>(gen_random(cfg, game_seed(seed, i)));
        std::vector<State> states = refinement_chain_states(g);
        Outcome o;
        for (size_t p = 0; p < k; p++) {
            if (!states[p].current.empty()) o.residual_mask |= std::uint8_t(1) << p;
            if (p > 0) {
                const State &prev = states[p - 1];
                if (!prev.won0.is_subset_of(states[p].won0) ||
                    !prev.won1.is_subset_of(states[p].won1) ||
                    states[p].current_rank() > prev.current_rank())
                    o.monotone = false;
            }
        }
        std::optional<WinningRegions> oracle;
        if (opt.oracle) {
            oracle = zielonka(*g);
            for (size_t p = 0; p < k; p++) {
                WinningRegions got(g->node_count());
                got.w0 = states[p].won0;
                got.w1 = states[p].won1;
                if (misclassified_nodes(got, *oracle) > 0) o.miscl_mask |= std::uint8_t(1) << p;
            }
        }
        if (opt.sample_from_scratch > 0 && i % opt.sample_from_scratch == 0) {
            for (size_t p = 0; p < k; p++) {
                State fresh = while_solve(pipelines[p], initial_state(g));
                if (!(fresh == states[p])) o.chain_ok = false;
            }
        }
        if (opt.lift_ps5 && !states[k - 1].current.empty()) {
            o.lift_ran = true;
            PartialSolver ps5 = as_solver(pipelines[k - 1]);
            State after_lifted = lifted(ps5).transform(states[k - 1]);
            o.lift_changed = after_lifted.current_rank() < states[k - 1].current_rank();
            State finished = lift(ps5).transform(states[k - 1]);
            o.lift_complete = finished.current.empty();
            if (!oracle) oracle = zielonka(*g);
            WinningRegions got(g->node_count());
            got.w0 = finished.won0;
            got.w1 = finished.won1;
            o.lift_correct = misclassified_nodes(got, *oracle) == 0;
        }
        return o;
    });

    SweepResult result;
    result.report.experiment = "refinement-sweep";
    result.report.config = cfg.to_string();
    result.report.seed = seed;
    for (size_t p = 0; p < k; p++) result.report.residual_counts[pipelines[p].name] = 0;
    for (long i = 0; i < count; i++) {
        const Outcome &o = outcomes[static_cast<size_t>(i)];
        result.report.games_run++;
        for (size_t p = 0; p < k; p++) {
            if (o.residual_mask & (std::uint8_t(1) << p))
                result.report.residual_counts[pipelines[p].name]++;
            if (o.miscl_mask & (std::uint8_t(1) << p)) result.report.misclassifications++;
        }
        if (!o.monotone) result.monotonicity_violations++;
        if (!o.chain_ok) result.chain_mismatches++;
        if (o.residual_mask & (std::uint8_t(1) << (k - 1)))
            result.ps5_residual_indices.push_back(i);
        if (o.lift_ran) {
            if (!o.lift_changed) result.lift_unchanged++;
            if (!o.lift_complete) result.lift_incomplete++;
            if (!o.lift_correct) result.lift_misclassified++;
        }
    }
    result.report.failures =
        result.monotonicity_violations + result.chain_mismatches + result.lift_unchanged +
        result.lift_incomplete + result.lift_misclassified;
    result.report.counters["monotonicity_violations"] = result.monotonicity_violations;
    result.report.counters["chain_mismatches"] = result.chain_mismatches;
    if (opt.lift_ps5) {
        result.report.counters["lift_unchanged"] = result.lift_unchanged;
        result.report.counters["lift_incomplete"] = result.lift_incomplete;
        result.report.counters["lift_misclassified"] = result.lift_misclassified;
    }
    result.report.wall_seconds = watch.seconds();
    return result;
}

}  // namespace pps
