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

#include "pps/state.hpp"

namespace pps {

/// An ordered, non-empty stage list for the restart-loop composition.
struct Pipeline {
    std::string name;
    std::vector<PartialSolver> stages;
};

/// Raised when a stage breaks a transformer law during composition.
class LawViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

struct WhileStats {
    long iterations = 0;       // stage applications that changed the state
    long initial_rank = 0;
};

/// Restart-loop composition: apply the first stage that strictly decreases
/// the rank and start over from the first stage; stop when no stage does.
/// The result is residual for every stage. The iteration count never
/// exceeds the initial rank of the continuation game. Throws LawViolation
/// when a stage increases the rank, mutates the input game, or returns a
/// changed state of equal rank.
State while_solve(const Pipeline &pipeline, State s, WhileStats *stats = nullptr);

/// The composition packaged as a transformer of its own.
PartialSolver as_solver(const Pipeline &pipeline);

/// Runs a transformer from the initial state of g and extracts the
/// decided regions; nodes in neither region are undecided.
WinningRegions call_solver(const PartialSolver &f, const ParityGame &g);
WinningRegions call_solver(const Pipeline &pipeline, const ParityGame &g);

/// Second-order edge test: for each branching node v and successor w,
/// commits v to (v, w) and solves the committed game fresh with f; if f
/// then decides v for its owner the continuation game becomes the
/// committed game, and if f decides v against its owner the edge is
/// dropped. Expects a state residual for f (checked in debug builds).
PartialSolver lifted(const PartialSolver &f);

/// lift f = while(f, lifted f).
PartialSolver lift(const PartialSolver &f);

/// Analysis registry: scc, sccp, pp, fa, ari, gfa, m_ss, m_scc, er_fa,
/// er_sd, er_sd_owned. Throws std::invalid_argument for unknown names.
PartialSolver named_analysis(const std::string &name);

/// Pipeline registry: ps1..ps5 (the refinement chain) and one-player
/// (while(sccp, ari, fa)). Throws std::invalid_argument for unknown names.
Pipeline named_pipeline(const std::string &name);

/// Solver lookup covering the CLI vocabulary: pipeline names, lift-ps5,
/// any registered analysis, and ad-hoc compositions "while:f1,f2,...".
PartialSolver named_solver(const std::string &name);

/// Names accepted by named_pipeline, in refinement order.
const std::vector<std::string> &pipeline_names();

}  // namespace pps
