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

#include "dsynth/parallel.h"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace dsynth {

size_t worker_count() {
    if (const char *env = std::getenv("DSYNTH_THREADS"); env != nullptr) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<size_t>(v);
        }
    }
    size_t hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for_chunks(size_t count, const std::function<void(size_t, size_t)> &body, size_t min_chunk) {
    if (count == 0) {
        return;
    }
    size_t workers = std::min(worker_count(), std::max<size_t>(1, count / std::max<size_t>(1, min_chunk)));
    if (workers <= 1) {
        body(0, count);
        return;
    }
    size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    threads.reserve(workers);
    for (size_t w = 0; w < workers; w++) {
        size_t begin = w * chunk;
        size_t end = std::min(count, begin + chunk);
        if (begin >= end) {
            break;
        }
        threads.emplace_back([&, w, begin, end]() {
            try {
                body(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace dsynth
