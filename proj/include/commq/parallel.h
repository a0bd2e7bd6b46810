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

#ifndef COMMQ_PARALLEL_H
#define COMMQ_PARALLEL_H

#include <cstddef>
#include <functional>

namespace commq {

/// Splits [0, n) into at most `threads` contiguous chunks and runs
/// body(begin, end, chunk_index) on each, one std::thread per extra chunk.
/// The first exception thrown by any chunk is rethrown after all join.
void parallel_for(
    std::size_t n, unsigned threads, const std::function<void(std::size_t, std::size_t, std::size_t)> &body);

/// Number of chunks parallel_for will use.
std::size_t chunk_count(std::size_t n, unsigned threads);

}  // namespace commq

#endif
