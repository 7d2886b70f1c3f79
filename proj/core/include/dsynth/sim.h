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

#ifndef DSYNTH_SIM_H
#define DSYNTH_SIM_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dsynth/circuit.h"
#include "dsynth/walsh.h"

namespace dsynth {

constexpr int kDefaultSimQubitCap = 16;
constexpr double kDefaultVerifyTolerance = 1e-6;

/// Basis-state image of a {CNOT, R_Z} circuit. A circuit over this gate set maps
/// |k> to exp(i phase[k]) |permutation[k]>, so tracking one bitstring and one
/// phase per input state is exact.
struct SimReport {
    int n = 0;
    std::vector<uint64_t> permutation;
    /// Accumulated phase in radians, unreduced.
    std::vector<double> phase;
    bool is_diagonal = false;

    // Filled by verify().
    double global_phase_offset = 0.0;
    double max_phase_error = 0.0;
    std::optional<uint64_t> failed_k;
    bool passed = false;
};

/// Throws ResourceLimitError when n exceeds max_qubits. The basis-state loop is
/// split across worker threads; results are identical to a serial run.
SimReport simulate(const GridCircuit &circuit, int max_qubits = kDefaultSimQubitCap);
SimReport simulate_sequence(int n, std::span<const Gate> sequence, int max_qubits = kDefaultSimQubitCap);

/// Compares a circuit against D(theta) up to global phase. The offset is
/// aligned at k = 0; the error is the largest |phase[k] - theta[k] - offset|
/// folded into (-pi, pi]. Fails (passed == false) for a non-diagonal circuit,
/// reporting the first moved basis state in failed_k, or when the error exceeds
/// tol, reporting the worst k. Throws InvalidInputError on a qubit-count mismatch.
SimReport verify(const GridCircuit &circuit, const PhaseSpec &target, double tol = kDefaultVerifyTolerance,
                 int max_qubits = kDefaultSimQubitCap);

/// Folds an angle into (-pi, pi].
double wrap_phase(double angle);

}  // namespace dsynth

#endif  // DSYNTH_SIM_H
