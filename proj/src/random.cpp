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

#include "pps/random.hpp"

#include <numeric>
#include <stdexcept>

namespace pps {

RandomConfig RandomConfig::parse(const std::string &text)
{
    RandomConfig cfg;
    int fields[4];
    size_t pos = 0;
    for (int i = 0; i < 4; i++) {
        size_t dash = i < 3 ? text.find('-', pos) : text.size();
        if (dash == std::string::npos)
            throw std::invalid_argument("config must look like xx-yy-aa-bb: " + text);
        try {
            fields[i] = std::stoi(text.substr(pos, dash - pos));
        } catch (const std::exception &) {
            throw std::invalid_argument("config must look like xx-yy-aa-bb: " + text);
        }
        pos = dash + 1;
    }
    cfg.nodes = fields[0];
    cfg.color_bound = fields[1];
    cfg.min_degree = fields[2];
    cfg.max_degree = fields[3];
    cfg.validate();
    return cfg;
}

std::string RandomConfig::to_string() const
{
    return std::to_string(nodes) + "-" + std::to_string(color_bound) + "-" +
           std::to_string(min_degree) + "-" + std::to_string(max_degree);
}

void RandomConfig::validate() const
{
    if (nodes < 1 || color_bound < 0 || min_degree < 1 || max_degree < min_degree ||
        max_degree > nodes)
        throw std::invalid_argument("config violates 1 <= aa <= bb <= xx, yy >= 0: " + to_string());
    if (!color_bound_inclusive && color_bound < 1)
        throw std::invalid_argument("exclusive color bound needs yy >= 1");
    if (!allow_self_loops && max_degree > nodes - 1)
        throw std::invalid_argument("self-loop-free games need bb <= xx - 1");
}

namespace {

ParityGame generate(const RandomConfig &cfg, std::uint64_t seed, Player forced_owner, bool force)
{
    cfg.validate();
    SplitMix64 rng(seed);
    const int n = cfg.nodes;
    const int color_values = cfg.color_bound_inclusive ? cfg.color_bound + 1 : cfg.color_bound;

    std::vector<Player> owners(static_cast<size_t>(n));
    std::vector<int> colors(static_cast<size_t>(n));
    std::vector<std::vector<NodeId>> succ(static_cast<size_t>(n));
    std::vector<NodeId> pool(static_cast<size_t>(n));

    for (NodeId v = 0; v < n; v++) {
        owners[static_cast<size_t>(v)] =
            force ? forced_owner : static_cast<Player>(rng.below(2));
        colors[static_cast<size_t>(v)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(color_values)));
        const int degree = rng.range(cfg.min_degree, cfg.max_degree);
        // Partial Fisher-Yates over the candidate pool: distinct targets,
        // in draw order.
        pool.clear();
        for (NodeId w = 0; w < n; w++)
            if (cfg.allow_self_loops || w != v) pool.push_back(w);
        const int pool_size = static_cast<int>(pool.size());
        auto &sv = succ[static_cast<size_t>(v)];
        sv.reserve(static_cast<size_t>(degree));
        for (int j = 0; j < degree; j++) {
            int t = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(pool_size - j)));
            std::swap(pool[static_cast<size_t>(j)], pool[static_cast<size_t>(t)]);
            sv.push_back(pool[static_cast<size_t>(j)]);
        }
    }
    return ParityGame(std::move(owners), std::move(colors), std::move(succ));
}

}  // namespace

ParityGame gen_random(const RandomConfig &cfg, std::uint64_t seed)
{
    return generate(cfg, seed, 0, false);
}

ParityGame gen_one_player(const RandomConfig &cfg, std::uint64_t seed, Player p)
{
    return generate(cfg, seed, p, true);
}

}  // namespace pps
