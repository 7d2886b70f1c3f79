// Copyright 2026 The dsynth Authors
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

#ifndef DSYNTH_PARALLEL_H
#define DSYNTH_PARALLEL_H

#include <cstddef>
#include <functional>

namespace dsynth {

/// Number of worker threads to use. Honors DSYNTH_THREADS when set to a
/// positive integer, otherwise std::thread::hardware_concurrency().
size_t worker_count();

/// Splits [0, count) into contiguous chunks and runs body(begin, end) for each
/// chunk, one chunk per worker. Chunk boundaries depend only on count and the
/// worker count, so per-index results never depend on scheduling.
void parallel_for_chunks(size_t count, const std::function<void(size_t, size_t)> &body,
                         size_t min_chunk = 4096);

}  // namespace dsynth

#endif  // DSYNTH_PARALLEL_H
