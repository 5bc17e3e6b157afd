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

#include <map>
#include <optional>

#include "pps/compose.hpp"
#include "pps/random.hpp"

namespace pps {

/// Aggregated outcome of one experiment. The JSON form is bit-for-bit
/// reproducible for fixed (config, seed, count); wall time is reported
/// separately since it never is.
struct ExperimentReport {
    std::string experiment;
    std::string solver;  // empty when the experiment spans several
    std::string config;
    std::uint64_t seed = 0;
    long games_run = 0;
    long tests_run = 0;
    long misclassifications = 0;
    long failures = 0;
    std::map<std::string, long> residual_counts;        // per solver
    std::map<std::string, long> simplification_counts;  // per analysis
    std::map<std::string, long> counters;               // further totals
    double wall_seconds = 0;

    std::string to_json(bool include_timing = false) const;
    std::string human() const;
    bool passing() const { return misclassifications == 0 && failures == 0; }
};

/// Per-game seeds are derived as seed + index throughout the harness.
std::uint64_t game_seed(std::uint64_t base, long index);

/// Regression of one solver against the Zielonka oracle on `count` seeded
/// games: any node decided against the oracle counts as a
/// misclassification; games left with undecided nodes count as residual.
/// With one_player set, every generated game is owned by that player.
ExperimentReport regress(const PartialSolver &solver, const RandomConfig &cfg, long count,
                         std::uint64_t seed, int threads = 1,
                         std::optional<Player> one_player = std::nullopt);

/// Regression on an explicit game list (e.g. re-loaded residual files).
ExperimentReport regress_games(const PartialSolver &solver, const std::vector<ParityGame> &games);

struct HuntResult {
    ExperimentReport report;
    std::vector<std::pair<long, ParityGame>> residuals;  // (game index, game)
};

/// Runs the solver over `count` seeded games and keeps every game it does
/// not solve completely. When out_dir is nonempty the games are persisted
/// as residual_<solver>_<seed>_<index>.gm next to an index.jsonl with
/// per-game statistics.
HuntResult hunt_residuals(const PartialSolver &solver, const RandomConfig &cfg, long count,
                          std::uint64_t seed, const std::string &out_dir = "", int threads = 1);

/// The state left by while(fa), or nullopt when the game is solved
/// completely: the common preparation for analyses that expect a game
/// without fatal attractors.
std::optional<State> fa_residual_state(const ParityGame &g);

/// Prepares `states` fatal-attractor-free states from seeded games of cfg
/// and applies each named analysis once to every state, counting how many
/// states each analysis simplifies.
ExperimentReport effectiveness_compare(const std::vector<std::string> &analysis_names,
                                       const RandomConfig &cfg, long states, std::uint64_t seed,
                                       int threads = 1);

/// The region-preservation protocol: streams seeded games, prepares
/// fatal-attractor-free states, and applies the analysis for as long as it
/// changes the state (and, for analyses that require a fatal-attractor-free
/// game, as long as that still holds). Every state change is one test:
/// the decided sets plus the represented oracle regions of the new
/// continuation game must reproduce the oracle regions of the input game.
ExperimentReport unit_analysis(const std::string &analysis_name, const RandomConfig &cfg,
                               long tests, std::uint64_t seed, int threads = 1);

/// States after ps1..ps5 on one game, computed incrementally: each
/// pipeline extends the previous pipeline's stage list, so its run
/// continues exactly from the previous fixpoint.
std::vector<State> refinement_chain_states(std::shared_ptr<const ParityGame> g);

struct SweepOptions {
    bool oracle = false;    // compare every pipeline against zielonka
    bool lift_ps5 = false;  // drive lift(ps5) on ps5-residual games
    int threads = 1;
    /// Every sample_from_scratch-th game additionally re-runs each
    /// pipeline from the initial state and checks it reproduces the
    /// incrementally computed result. 0 disables.
    long sample_from_scratch = 1000;
};

struct SweepResult {
    ExperimentReport report;             // residual_counts per pipeline
    long monotonicity_violations = 0;    // decided sets or residual ranks out of order
    long chain_mismatches = 0;           // from-scratch sample disagreed
    long lift_unchanged = 0;             // lifted(ps5) left a residual state alone
    long lift_incomplete = 0;            // lift(ps5) failed to finish a game
    long lift_misclassified = 0;
    std::vector<long> ps5_residual_indices;
};

/// The refinement-chain experiment: ps1..ps5 over `count` seeded games.
SweepResult refinement_sweep(const RandomConfig &cfg, long count, std::uint64_t seed,
                             const SweepOptions &opt);

}  // namespace pps
