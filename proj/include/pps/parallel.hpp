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

#include <algorithm>
#include <thread>
#include <vector>

namespace pps {

/// Applies fn to every index in [0, count) and returns the results in
/// index order. Workers own disjoint index stripes, so aggregation order
/// (and therefore every report built from it) is independent of thread
/// count and scheduling.
template <typename T, typename Fn>
std::vector<T> parallel_map(long count, int threads, Fn &&fn)
{
    std::vector<T> results(static_cast<size_t>(count));
    if (count == 0) return results;
    threads = std::max(1, std::min<int>(threads, static_cast<int>(count)));
    if (threads == 1) {
        for (long i = 0; i < count; i++) results[static_cast<size_t>(i)] = fn(i);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int w = 0; w < threads; w++) {
        pool.emplace_back([&, w] {
            for (long i = w; i < count; i += threads) results[static_cast<size_t>(i)] = fn(i);
        });
    }
    for (auto &t : pool) t.join();
    return results;
}

int default_threads();

}  // namespace pps
