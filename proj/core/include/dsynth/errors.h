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

#ifndef DSYNTH_ERRORS_H
#define DSYNTH_ERRORS_H

#include <stdexcept>
#include <string>

namespace dsynth {

/// Malformed or out-of-contract input (bad lengths, non-finite angles, bad files).
struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A request that exceeds a configured resource cap (e.g. simulation qubit limit).
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Broken internal invariant. Never caused by valid input; indicates a bug.
struct InternalInvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace dsynth

#endif  // DSYNTH_ERRORS_H
