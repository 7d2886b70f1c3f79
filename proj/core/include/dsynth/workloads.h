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

#ifndef DSYNTH_WORKLOADS_H
#define DSYNTH_WORKLOADS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsynth/circuit.h"
#include "dsynth/walsh.h"

namespace dsynth {

/// 2^n phases drawn i.i.d. uniform on the open interval (0, 2pi).
///
/// The generator is std::mt19937_64 seeded with `seed`; each 64-bit output x
/// maps to 2pi * ((x >> 11) + 0.5) / 2^53. Both steps are fully specified, so
/// the vector is identical on every platform.
PhaseSpec random_phase(int n, uint64_t seed);

/// Phases of the cost layer of a MaxCut QAOA ansatz on the complete graph K_n:
/// theta_k = gamma * sum over pairs c < t of (-1)^{k_c xor k_t}. Requires n >= 2.
PhaseSpec qaoa_phase(int n, double gamma);

/// The textbook cost layer: one CNOT(c,t) RZ(-2 gamma; t) CNOT(c,t) block per pair,
/// pairs visited row by row with alternating direction
/// (1,2) (1,3) ... (1,n) (2,n) (2,n-1) ... (2,3) (3,4) ... so consecutive
/// blocks always share a qubit. n^2 - n CNOTs, (n^2 - n)/2 R_Z, depth 3(n^2 - n)/2.
GridCircuit qaoa_original_circuit(int n, double gamma);

/// Closed-form depth 2^{n+1} - 3 of the gate-count optimal Walsh-function
/// construction used as the reference baseline.
inline uint64_t baseline_depth(int n) {
    return (uint64_t{2} << n) - 3;
}

enum class BenchMethod {
    kAlg1,
    kTheorem1,
    kBaselineClosedForm,
    kQaoaOriginal,
    kQaoaResynth,
};

std::string_view method_label(BenchMethod method);
/// Inverse of method_label; throws InvalidInputError for unknown labels.
BenchMethod parse_method(std::string_view label);

enum class VerifyStatus {
    kPass,
    kFail,
    kSkipped,
    kError,
};

std::string_view verify_label(VerifyStatus status);

struct BenchRecord {
    int n = 0;
    BenchMethod method = BenchMethod::kAlg1;
    /// Trial number, or nullopt for the per-(n, method) mean row.
    std::optional<int> trial;
    double depth = 0;
    double rz = 0;
    double cnot = 0;
    double synth_seconds = 0;
    VerifyStatus verified = VerifyStatus::kSkipped;
    uint64_t seed = 0;
    std::string error;
};

struct BenchConfig {
    int min_n = 2;
    int max_n = 10;
    int trials = 20;
    uint64_t seed = 1;
    std::vector<BenchMethod> methods = {BenchMethod::kAlg1};
    /// Circuits with n above this are not simulated.
    int verify_cap = 12;
    /// Run optimize() on alg1 / theorem1 output as well; qaoa-resynth always optimizes.
    bool optimize = false;
    SpectrumMethod spectrum = SpectrumMethod::kFast;
    double tolerance = 1e-6;
};

/// Derived per-trial seed (a splitmix64 mix of base seed, n and trial).
uint64_t trial_seed(uint64_t base, int n, int trial);

/// Runs every (n, method, trial) cell in order and appends one mean row after
/// each (n, method) group. Failures are recorded on their row and the run
/// carries on.
std::vector<BenchRecord> run_benchmark(const BenchConfig &config);

/// CSV header: n,method,trial,depth,rz,cnot,synth_seconds,verified,seed.
/// Non-integral values are printed with 6 significant digits.
void write_bench_csv(std::ostream &out, const std::vector<BenchRecord> &records);

}  // namespace dsynth

#endif  // DSYNTH_WORKLOADS_H
