// Copyright 2026 The commq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commq/parallel.h"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace commq {

std::size_t chunk_count(std::size_t n, unsigned threads) {
    return std::max<std::size_t>(1, std::min<std::size_t>(n, std::max(1u, threads)));
}

void parallel_for(
    std::size_t n, unsigned threads, const std::function<void(std::size_t, std::size_t, std::size_t)> &body) {
    std::size_t chunks = chunk_count(n, threads);
    if (chunks == 1) {
        body(0, n, 0);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&](std::size_t c) {
        std::size_t begin = n * c / chunks;
        std::size_t end = n * (c + 1) / chunks;
        try {
            body(begin, end, c);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> workers;
    for (std::size_t c = 1; c < chunks; c++) {
        workers.emplace_back(run, c);
    }
    run(0);
    for (auto &w : workers) {
        w.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace commq
