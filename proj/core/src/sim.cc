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

#include "dsynth/sim.h"

#include <cmath>
#include <numbers>
#include <string>

#include "dsynth/errors.h"
#include "dsynth/parallel.h"

namespace dsynth {

namespace {

struct CompiledGate {
    uint64_t control_mask;  // 0 for R_Z
    uint64_t target_mask;
    double half_beta;
};

}  // namespace

double wrap_phase(double angle) {
    constexpr double kTwoPi = 2 * std::numbers::pi;
    double r = std::remainder(angle, kTwoPi);
    if (r <= -std::numbers::pi) {
        r += kTwoPi;
    }
    return r;
}

SimReport simulate_sequence(int n, std::span<const Gate> sequence, int max_qubits) {
    if (n > max_qubits) {
        throw ResourceLimitError("simulation of " + std::to_string(n) + " qubits exceeds the cap of " +
                                 std::to_string(max_qubits));
    }
    std::vector<CompiledGate> program;
    program.reserve(sequence.size());
    for (const Gate &g : sequence) {
        validate_gate(g, n);
        if (g.is_cnot()) {
            program.push_back({qubit_mask(n, g.control), qubit_mask(n, g.target), 0.0});
        } else {
            program.push_back({0, qubit_mask(n, g.target), g.beta / 2});
        }
    }

    const size_t size = size_t{1} << n;
    SimReport report;
    report.n = n;
    report.permutation.resize(size);
    report.phase.resize(size);
    parallel_for_chunks(size, [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            uint64_t state = k;
            double phase = 0.0;
            for (const CompiledGate &g : program) {
                if (g.control_mask != 0) {
                    if (state & g.control_mask) {
                        state ^= g.target_mask;
                    }
                } else {
                    phase += (state & g.target_mask) ? -g.half_beta : g.half_beta;
                }
            }
            report.permutation[k] = state;
            report.phase[k] = phase;
        }
    }, 256);

    report.is_diagonal = true;
    for (size_t k = 0; k < size; k++) {
        if (report.permutation[k] != k) {
            report.is_diagonal = false;
            break;
        }
    }
    return report;
}

SimReport simulate(const GridCircuit &circuit, int max_qubits) {
    std::vector<Gate> seq = circuit.sequence();
    return simulate_sequence(circuit.n(), seq, max_qubits);
}

SimReport verify(const GridCircuit &circuit, const PhaseSpec &target, double tol, int max_qubits) {
    if (circuit.n() != target.n()) {
        throw InvalidInputError("circuit has " + std::to_string(circuit.n()) + " qubits but target has " +
                                std::to_string(target.n()));
    }
    SimReport report = simulate(circuit, max_qubits);
    const size_t size = report.phase.size();
    report.global_phase_offset = report.phase[0] - target[0];
    report.max_phase_error = 0.0;
    uint64_t worst = 0;
    for (size_t k = 0; k < size; k++) {
        double err = std::abs(wrap_phase(report.phase[k] - target[k] - report.global_phase_offset));
        if (err > report.max_phase_error) {
            report.max_phase_error = err;
            worst = k;
        }
    }
    if (!report.is_diagonal) {
        for (size_t k = 0; k < size; k++) {
            if (report.permutation[k] != k) {
                report.failed_k = k;
                break;
            }
        }
        report.passed = false;
    } else if (report.max_phase_error > tol) {
        report.failed_k = worst;
        report.passed = false;
    } else {
        report.passed = true;
    }
    return report;
}

}  // namespace dsynth
