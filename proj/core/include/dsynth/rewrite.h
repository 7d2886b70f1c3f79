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

#ifndef DSYNTH_REWRITE_H
#define DSYNTH_REWRITE_H

#include <cstddef>
#include <span>

#include "dsynth/circuit.h"

namespace dsynth {

/// |beta| at or below this, after folding into (-2pi, 2pi], counts as zero.
constexpr double kDefaultZeroEps = 1e-12;

/// Deletes every R_Z whose folded angle is within eps of zero. Remaining gates
/// keep their coordinates; the result is not recompacted.
GridCircuit remove_zero_rz(const GridCircuit &circuit, double eps = kDefaultZeroEps);

struct CancelOptions {
    /// Also apply CNOT(b,c) . CNOT(a,b) . CNOT(a,c) -> CNOT(a,b) . CNOT(b,c)
    /// (time order), which removes one CNOT per application.
    bool three_to_two = true;
};

struct CancelStats {
    size_t pairs_cancelled = 0;
    size_t triples_merged = 0;
};

/// CNOT cancellation to a fixed point.
///
/// Two identical CNOTs cancel when the gates between them commute with that
/// CNOT. With three_to_two enabled, a CNOT(b,c), the next CNOT(a,b) targeting
/// b, and the next CNOT(a,c) merge into two gates when the first can slide right
/// and the last can slide left to meet the middle one. The scan runs left to
/// right and restarts after every rewrite, trying pair cancellation before
/// merging. Every rewrite removes at least one CNOT. The result is ASAP-placed.
GridCircuit cancel_cnots(const GridCircuit &circuit, CancelOptions options = {}, CancelStats *stats = nullptr);

/// remove_zero_rz, then cancel_cnots, then compact. Never increases depth or
/// either gate count: if merging would deepen the circuit, the pair-only
/// cancellation result is returned instead.
GridCircuit optimize(const GridCircuit &circuit, double eps = kDefaultZeroEps);

/// Sufficient commutation test: true when running g before the window and
/// after it yield the same linear reversible map and every R_Z in the window
/// sees the same parity. Both conditions together imply exact equality.
bool commutes_with(int n, const Gate &g, std::span<const Gate> window);

}  // namespace dsynth

#endif  // DSYNTH_REWRITE_H
