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

#include "dsynth/synth.h"

#include <bit>
#include <string>

#include "dsynth/errors.h"

namespace dsynth {

namespace {

Gate rz_for(const RotationSpectrum &spectrum, int qubit, uint64_t j) {
    return Gate::rz(qubit, reduce_rz_angle(spectrum.beta(j)));
}

void embed(GridBuilder &grid, const Gate &g, int column) {
    if (!grid.try_place(g, column)) {
        throw InternalInvariantError("grid embedding collided at column " + std::to_string(column) + " for " + g.str());
    }
}

}  // namespace

std::vector<Gate> build_module_mj(int n, uint64_t j, double beta) {
    if (n < 1 || n > kMaxQubits) {
        throw InvalidInputError("qubit count out of range");
    }
    if (j == 0 || j >= (uint64_t{1} << n)) {
        throw InvalidInputError("module index must be a non-zero " + std::to_string(n) + "-bit string");
    }
    std::vector<int> ones;
    for (int q = 1; q <= n; q++) {
        if (bit_of(j, n, q)) {
            ones.push_back(q);
        }
    }
    const int last = ones.back();
    std::vector<Gate> out;
    for (size_t i = 0; i + 1 < ones.size(); i++) {
        out.push_back(Gate::cnot(ones[i], last));
    }
    out.push_back(Gate::rz(last, reduce_rz_angle(beta)));
    for (size_t i = ones.size() - 1; i-- > 0;) {
        out.push_back(Gate::cnot(ones[i], last));
    }
    return out;
}

std::vector<Gate> s_block(const RotationSpectrum &spectrum, int pm) {
    const int n = spectrum.n();
    if (pm < 2 || pm > n) {
        throw InvalidInputError("S block index must lie in [2, n]");
    }
    const GraySequence gray = gray_sequence(pm - 1);
    const ControlSequence cc = control_sequence(pm);
    std::vector<Gate> out;
    out.push_back(Gate::cnot(cc.controls[0], pm));
    for (size_t i = 1; i < gray.codes.size(); i++) {
        out.push_back(rz_for(spectrum, pm, group_angle_index(n, pm, gray.codes[i])));
        out.push_back(Gate::cnot(cc.controls[i], pm));
    }
    return out;
}

GridCircuit build_theorem1(const RotationSpectrum &spectrum) {
    const int n = spectrum.n();
    std::vector<Gate> seq;
    seq.reserve(size_t{2} << n);
    seq.push_back(rz_for(spectrum, 1, qubit_mask(n, 1)));
    for (int pm = 2; pm <= n; pm++) {
        const GraySequence gray = gray_sequence(pm - 1);
        const ControlSequence cc = control_sequence(pm);
        for (size_t i = 0; i < gray.codes.size(); i++) {
            seq.push_back(rz_for(spectrum, pm, group_angle_index(n, pm, gray.codes[i])));
            seq.push_back(Gate::cnot(cc.controls[i], pm));
        }
    }
    return GridCircuit::from_sequence(n, seq);
}

GridCircuit build_alg1(const RotationSpectrum &spectrum) {
    const int n = spectrum.n();
    if (n == 1) {
        GridBuilder grid(1, 1);
        embed(grid, rz_for(spectrum, 1, 1), 1);
        return std::move(grid).build();
    }
    const int width = 1 << n;
    GridBuilder grid(n, width);

    // Leading R_Z of every group below n shares column 1.
    for (int r = 1; r <= n - 1; r++) {
        embed(grid, rz_for(spectrum, r, qubit_mask(n, r)), 1);
    }

    // S_pm for 1 < pm < n, placed right of the leftmost CNOT(pm, n) of G_n.
    for (int pm = 2; pm <= n - 1; pm++) {
        const GraySequence gray = gray_sequence(pm - 1);
        const ControlSequence cc = control_sequence(pm);
        const int base = 1 << pm;
        embed(grid, Gate::cnot(cc.controls[0], pm), base + 1);
        for (int i = 2; i <= static_cast<int>(gray.codes.size()); i++) {
            embed(grid, rz_for(spectrum, pm, group_angle_index(n, pm, gray.codes[i - 1])), base + 2 * i - 2);
            embed(grid, Gate::cnot(cc.controls[i - 1], pm), base + 2 * i - 1);
        }
    }

    // G_n fills the bottom row: R_Z in odd columns, CNOT in even columns.
    const GraySequence gray = gray_sequence(n - 1);
    const ControlSequence cc = control_sequence(n);
    for (int i = 1; i <= static_cast<int>(gray.codes.size()); i++) {
        embed(grid, rz_for(spectrum, n, group_angle_index(n, n, gray.codes[i - 1])), 2 * i - 1);
        embed(grid, Gate::cnot(cc.controls[i - 1], n), 2 * i);
    }
    return std::move(grid).build();
}

}  // namespace dsynth
