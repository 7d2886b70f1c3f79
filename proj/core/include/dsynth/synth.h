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

#ifndef DSYNTH_SYNTH_H
#define DSYNTH_SYNTH_H

#include <cstdint>
#include <vector>

#include "dsynth/circuit.h"
#include "dsynth/walsh.h"

namespace dsynth {

/// Angle index j = g 1 0^{(n - pm)} of the R_Z fed by Gray code g in group pm.
inline uint64_t group_angle_index(int n, int pm, uint32_t gray_code) {
    return ((static_cast<uint64_t>(gray_code) << 1) | 1) << (n - pm);
}

/// The stand-alone module realising one parity term: with P_j = {p_1 < ... < p_m}
/// the one-bits of j, emits CNOT(p_1, p_m) ... CNOT(p_{m-1}, p_m), RZ(-beta; p_m),
/// then the CNOTs again in reverse. Throws InvalidInputError for j == 0.
std::vector<Gate> build_module_mj(int n, uint64_t j, double beta);

/// The subcircuit S_pm (1 < pm <= n): CNOT(1, pm), then for i = 2 .. 2^{pm-1}
/// an R_Z on pm followed by CNOT(cc_set(i), pm). R_Z angles come from the
/// spectrum.
std::vector<Gate> s_block(const RotationSpectrum &spectrum, int pm);

/// Gate-count optimal sequential construction G_1 o G_2 o ... o G_n, each group
/// an alternating R_Z / CNOT chain on its target qubit. 2^n - 1 R_Z and 2^n - 2
/// CNOT gates, ASAP-placed.
GridCircuit build_theorem1(const RotationSpectrum &spectrum);

/// Depth-optimised construction: embeds every group directly into a 2^n-column
/// grid at precomputed coordinates. Depth 2^n, same gate counts as
/// build_theorem1. Zero angles still emit gates. For n = 1 the result is the
/// single R_Z(-beta_1; 1) of width 1.
///
/// A collision with an occupied cell throws InternalInvariantError.
GridCircuit build_alg1(const RotationSpectrum &spectrum);

}  // namespace dsynth

#endif  // DSYNTH_SYNTH_H
