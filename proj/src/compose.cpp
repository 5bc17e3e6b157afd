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

#include "pps/compose.hpp"

#include <cassert>
#include <sstream>

#include "pps/analyses.hpp"
#include "pps/refinements.hpp"

namespace pps {

State while_solve(const Pipeline &pipeline, State s, WhileStats *stats)
{
    if (pipeline.stages.empty()) throw std::invalid_argument("while: empty stage list");
    const long initial_rank = s.current_rank();
    long iterations = 0;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (const PartialSolver &stage : pipeline.stages) {
            State next = stage.transform(s);
            bool same_game =
                next.original == s.original ||
                (next.original && s.original && *next.original == *s.original);
            if (!same_game)
                throw LawViolation("while: stage " + stage.name + " mutated the input game");
            const long before = s.current_rank(), after = next.current_rank();
            if (after > before)
                throw LawViolation("while: stage " + stage.name + " increased the rank");
            if (after == before) {
                if (!(next == s))
                    throw LawViolation("while: stage " + stage.name +
                                       " changed the state without decreasing the rank");
                continue;
            }
            if (!s.won0.is_subset_of(next.won0) || !s.won1.is_subset_of(next.won1))
                throw LawViolation("while: stage " + stage.name + " dropped a decided winner");
            s = std::move(next);
            iterations++;
            progressed = true;
            break;  // restart from the first stage
        }
    }
    assert(iterations <= initial_rank);
    if (stats) {
        stats->iterations = iterations;
        stats->initial_rank = initial_rank;
    }
    return s;
}

PartialSolver as_solver(const Pipeline &pipeline)
{
    return {pipeline.name,
            [pipeline](const State &s) { return while_solve(pipeline, s); }};
}

WinningRegions call_solver(const PartialSolver &f, const ParityGame &g)
{
    State s = f.transform(initial_state(g));
    WinningRegions regions(g.node_count());
    regions.w0 = s.won0;
    regions.w1 = s.won1;
    return regions;
}

WinningRegions call_solver(const Pipeline &pipeline, const ParityGame &g)
{
    return call_solver(as_solver(pipeline), g);
}

PartialSolver lifted(const PartialSolver &f)
{
    PartialSolver inner = f;
    return {"lifted(" + f.name + ")", [inner](const State &s) -> State {
                assert(inner.transform(s).current_rank() == s.current_rank() &&
                       "lifted expects a state residual for its argument");
                const ParityGame &h = s.current;
                for (NodeId v = 0; v < h.node_count(); v++) {
                    if (h.out_degree(v) <= 1) continue;
                    const Player p = h.owner(v);
                    for (NodeId w : h.successors(v)) {
                        ParityGame committed = commit_edge(h, v, w);
                        WinningRegions u = call_solver(inner, committed);
                        if (u.won(p).test(v)) {
                            State out = s;
                            out.current = std::move(committed);
                            return out;
                        }
                        if (u.won(opponent(p)).test(v)) {
                            State out = s;
                            out.current = remove_edge(h, v, w);
                            return out;
                        }
                    }
                }
                return s;
            }};
}

PartialSolver lift(const PartialSolver &f)
{
    return as_solver(Pipeline{"lift(" + f.name + ")", {f, lifted(f)}});
}

PartialSolver named_analysis(const std::string &name)
{
    if (name == "scc") return {"scc", scc_compress};
    if (name == "sccp" || name == "scc'") return {"sccp", scc_compress_per_scc};
    if (name == "pp") return {"pp", priority_propagate};
    if (name == "fa") return {"fa", fatal_attractor_step};
    if (name == "ari") return {"ari", rabin_index_reduce};
    if (name == "gfa") return {"gfa", generalized_fatal_step};
    if (name == "m_ss") return {"m_ss", merge_sole_successor};
    if (name == "m_scc")
        return {"m_scc", [](const State &s) { return merge_scc_colorclass(s); }};
    if (name == "m_scc_any_exit")
        return {"m_scc_any_exit",
                [](const State &s) { return merge_scc_colorclass(s, MsccExit::kBeyondSet); }};
    if (name == "er_fa") return {"er_fa", remove_edge_conditional_fa};
    // er_sd defaults to the owned-nodes-only path rule, the variant whose
    // published simplification rates this registry reproduces; the
    // every-node-qualified rule stays available as er_sd_strict.
    if (name == "er_sd")
        return {"er_sd", [](const State &s) {
                    return remove_edge_shared_descendant(s, ErSdPathRule::kOwnedOnly);
                }};
    if (name == "er_sd_strict")
        return {"er_sd_strict", [](const State &s) {
                    return remove_edge_shared_descendant(s, ErSdPathRule::kOwnedOrForced);
                }};
    throw std::invalid_argument("unknown analysis: " + name);
}

namespace {

Pipeline build_pipeline(const std::string &name, const std::vector<std::string> &stage_names)
{
    Pipeline pl;
    pl.name = name;
    for (const auto &sn : stage_names) pl.stages.push_back(named_analysis(sn));
    return pl;
}

}  // namespace

Pipeline named_pipeline(const std::string &name)
{
    if (name == "ps1") return build_pipeline(name, {"scc", "pp", "fa", "ari", "gfa"});
    if (name == "ps2") return build_pipeline(name, {"scc", "pp", "fa", "ari", "gfa", "m_ss"});
    if (name == "ps3")
        return build_pipeline(name, {"scc", "pp", "fa", "ari", "gfa", "m_ss", "m_scc"});
    if (name == "ps4")
        return build_pipeline(name, {"scc", "pp", "fa", "ari", "gfa", "m_ss", "m_scc", "er_fa"});
    if (name == "ps5")
        return build_pipeline(name,
                              {"scc", "pp", "fa", "ari", "gfa", "m_ss", "m_scc", "er_fa", "er_sd"});
    if (name == "one-player" || name == "one_player")
        return build_pipeline("one-player", {"sccp", "ari", "fa"});
    throw std::invalid_argument("unknown pipeline: " + name);
}

const std::vector<std::string> &pipeline_names()
{
    static const std::vector<std::string> names{"ps1", "ps2", "ps3", "ps4", "ps5"};
    return names;
}

PartialSolver named_solver(const std::string &name)
{
    if (name == "lift-ps5" || name == "lift(ps5)") return lift(as_solver(named_pipeline("ps5")));
    if (name.rfind("while:", 0) == 0) {
        std::istringstream in(name.substr(6));
        std::vector<std::string> stage_names;
        std::string item;
        while (std::getline(in, item, ','))
            if (!item.empty()) stage_names.push_back(item);
        if (stage_names.empty())
            throw std::invalid_argument("while: needs at least one stage name");
        return as_solver(build_pipeline(name, stage_names));
    }
    try {
        return as_solver(named_pipeline(name));
    } catch (const std::invalid_argument &) {
    }
    return named_analysis(name);
}

}  // namespace pps
