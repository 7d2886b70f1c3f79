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

#include "dsynth/circuit.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dsynth/errors.h"

namespace dsynth {

namespace {

uint64_t cell_key(int row, int column) {
    return (static_cast<uint64_t>(column) << 6) | static_cast<uint64_t>(row);
}

bool gate_order(const PlacedGate &a, const PlacedGate &b) {
    if (a.column != b.column) {
        return a.column < b.column;
    }
    return a.gate.top_row() < b.gate.top_row();
}

/// Column each gate receives under ASAP placement of the given order.
std::vector<int> asap_columns(int n, std::span<const Gate> sequence) {
    std::vector<int> last(n + 1, 0);
    std::vector<int> columns;
    columns.reserve(sequence.size());
    for (const Gate &g : sequence) {
        int col = last[g.target];
        if (g.is_cnot()) {
            col = std::max(col, last[g.control]);
            last[g.control] = col + 1;
        }
        last[g.target] = col + 1;
        columns.push_back(col + 1);
    }
    return columns;
}

}  // namespace

std::string Gate::str() const {
    std::ostringstream out;
    if (is_rz()) {
        out << "RZ(" << target << ", " << beta << ")";
    } else {
        out << "CNOT(" << control << ", " << target << ")";
    }
    return out.str();
}

double reduce_rz_angle(double beta) {
    constexpr double kTwoPi = 2 * std::numbers::pi;
    constexpr double kFourPi = 4 * std::numbers::pi;
    double r = std::fmod(beta, kFourPi);
    if (r <= -kTwoPi) {
        r += kFourPi;
    } else if (r > kTwoPi) {
        r -= kFourPi;
    }
    return r;
}

void validate_gate(const Gate &g, int n) {
    auto in_range = [n](int q) { return q >= 1 && q <= n; };
    if (!in_range(g.target)) {
        throw InvalidInputError("gate " + g.str() + " acts outside qubits [1, " + std::to_string(n) + "]");
    }
    if (g.is_cnot()) {
        if (!in_range(g.control)) {
            throw InvalidInputError("gate " + g.str() + " acts outside qubits [1, " + std::to_string(n) + "]");
        }
        if (g.control == g.target) {
            throw InvalidInputError("CNOT control equals target in " + g.str());
        }
    } else if (!std::isfinite(g.beta)) {
        throw InvalidInputError("R_Z angle is not finite");
    }
}

GridCircuit::GridCircuit(int n) : n_(n) {
    if (n < 1 || n > 32) {
        throw InvalidInputError("circuit qubit count " + std::to_string(n) + " outside [1, 32]");
    }
}

GridCircuit GridCircuit::from_sequence(int n, std::span<const Gate> sequence) {
    for (const Gate &g : sequence) {
        validate_gate(g, n);
    }
    std::vector<int> columns = asap_columns(n, sequence);
    int width = columns.empty() ? 0 : *std::max_element(columns.begin(), columns.end());
    GridBuilder builder(n, width);
    for (size_t i = 0; i < sequence.size(); i++) {
        if (!builder.try_place(sequence[i], columns[i])) {
            throw InternalInvariantError("ASAP placement produced a cell collision");
        }
    }
    return std::move(builder).build();
}

std::vector<Gate> GridCircuit::sequence() const {
    std::vector<Gate> out;
    out.reserve(gates_.size());
    for (const auto &pg : gates_) {
        out.push_back(pg.gate);
    }
    return out;
}

const PlacedGate *GridCircuit::at(int row, int column) const {
    auto it = cells_.find(cell_key(row, column));
    return it == cells_.end() ? nullptr : &gates_[it->second];
}

GridBuilder::GridBuilder(int n, int width) : circuit_(n) {
    if (width < 0) {
        throw InvalidInputError("circuit width must be non-negative");
    }
    circuit_.width_ = width;
}

bool GridBuilder::is_free(int row, int column) const {
    return !circuit_.cells_.contains(cell_key(row, column));
}

bool GridBuilder::try_place(const Gate &g, int column) {
    validate_gate(g, circuit_.n_);
    if (column < 1 || column > circuit_.width_) {
        throw InvalidInputError("column " + std::to_string(column) + " outside [1, " +
                                std::to_string(circuit_.width_) + "] for " + g.str());
    }
    if (!is_free(g.target, column) || (g.is_cnot() && !is_free(g.control, column))) {
        return false;
    }
    auto index = static_cast<uint32_t>(circuit_.gates_.size());
    circuit_.gates_.push_back(PlacedGate{g, column});
    circuit_.cells_.emplace(cell_key(g.target, column), index);
    if (g.is_cnot()) {
        circuit_.cells_.emplace(cell_key(g.control, column), index);
    }
    return true;
}

GridCircuit GridBuilder::build() && {
    GridCircuit out = std::move(circuit_);
    std::stable_sort(out.gates_.begin(), out.gates_.end(), gate_order);
    out.cells_.clear();
    out.cells_.reserve(out.gates_.size() * 2);
    for (uint32_t i = 0; i < out.gates_.size(); i++) {
        const auto &pg = out.gates_[i];
        out.cells_.emplace(cell_key(pg.gate.target, pg.column), i);
        if (pg.gate.is_cnot()) {
            out.cells_.emplace(cell_key(pg.gate.control, pg.column), i);
        }
    }
    return out;
}

int depth(const GridCircuit &circuit) {
    std::vector<Gate> seq = circuit.sequence();
    std::vector<int> columns = asap_columns(circuit.n(), seq);
    return columns.empty() ? 0 : *std::max_element(columns.begin(), columns.end());
}

GateCounts counts(const GridCircuit &circuit) {
    GateCounts c;
    for (const auto &pg : circuit.gates()) {
        if (pg.gate.is_rz()) {
            c.rz++;
        } else {
            c.cnot++;
        }
    }
    c.total = c.rz + c.cnot;
    return c;
}

GridCircuit compact(const GridCircuit &circuit) {
    std::vector<Gate> seq = circuit.sequence();
    return GridCircuit::from_sequence(circuit.n(), seq);
}

}  // namespace dsynth
