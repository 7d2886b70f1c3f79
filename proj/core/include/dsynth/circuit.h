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

#ifndef DSYNTH_CIRCUIT_H
#define DSYNTH_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace dsynth {

enum class GateKind : uint8_t {
    kRz,
    kCnot,
};

/// A {CNOT, R_Z} gate. Qubits are 1-based.
///
/// RZ(-beta; r) multiplies |k_r> by exp(i beta (-1)^{k_r} / 2).
/// CNOT(c, t) maps |k_c>|k_t> to |k_c>|k_t xor k_c>.
struct Gate {
    GateKind kind;
    int target;   // R_Z qubit, or CNOT target
    int control;  // CNOT control; 0 for R_Z
    double beta;  // R_Z angle; 0 for CNOT

    static Gate rz(int qubit, double beta) {
        return Gate{GateKind::kRz, qubit, 0, beta};
    }
    static Gate cnot(int control, int target) {
        return Gate{GateKind::kCnot, target, control, 0.0};
    }

    bool is_rz() const {
        return kind == GateKind::kRz;
    }
    bool is_cnot() const {
        return kind == GateKind::kCnot;
    }
    bool touches(int qubit) const {
        return target == qubit || (is_cnot() && control == qubit);
    }
    int top_row() const {
        return is_cnot() && control < target ? control : target;
    }

    std::string str() const;

    bool operator==(const Gate &) const = default;
};

struct PlacedGate {
    Gate gate;
    int column;  // 1-based

    bool operator==(const PlacedGate &) const = default;
};

struct GateCounts {
    size_t rz = 0;
    size_t cnot = 0;
    size_t total = 0;

    bool operator==(const GateCounts &) const = default;
};

/// Folds an R_Z angle into (-2pi, 2pi]. R_Z(beta) has period 4pi; the fold is
/// exact up to floating-point remainder.
double reduce_rz_angle(double beta);

/// An n-row grid of gate columns.
///
/// An R_Z occupies the single cell (r, l); a CNOT(c, t) occupies only (c, l) and
/// (t, l), leaving the rows strictly between them free. No cell holds more than
/// one gate, so the gates of one column act on disjoint qubits and columns
/// execute left to right. Storage is column-sparse.
class GridCircuit {
   public:
    explicit GridCircuit(int n);

    /// ASAP placement of an ordered gate sequence: each gate goes into the first
    /// column after the last gate already placed on any of its qubits.
    static GridCircuit from_sequence(int n, std::span<const Gate> sequence);

    int n() const {
        return n_;
    }
    int width() const {
        return width_;
    }
    size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }

    /// All gates ordered by column, then by top row.
    std::span<const PlacedGate> gates() const {
        return gates_;
    }

    /// Gates in execution order (column order).
    std::vector<Gate> sequence() const;

    /// The gate occupying (row, column), or nullptr for a vacancy.
    const PlacedGate *at(int row, int column) const;

    bool operator==(const GridCircuit &other) const {
        return n_ == other.n_ && width_ == other.width_ && gates_ == other.gates_;
    }

   private:
    friend class GridBuilder;

    int n_;
    int width_ = 0;
    std::vector<PlacedGate> gates_;
    std::unordered_map<uint64_t, uint32_t> cells_;
};

/// Incremental construction of a GridCircuit at explicit coordinates.
class GridBuilder {
   public:
    /// Throws InvalidInputError for n outside [1, 32] or a negative width.
    GridBuilder(int n, int width);

    /// Places g at the given column. Returns false, leaving the grid unchanged, if
    /// any cell the gate needs is already occupied. Throws InvalidInputError for
    /// out-of-range coordinates or a CNOT with control == target.
    bool try_place(const Gate &g, int column);

    bool is_free(int row, int column) const;

    int n() const {
        return circuit_.n_;
    }
    int width() const {
        return circuit_.width_;
    }

    GridCircuit build() &&;

   private:
    GridCircuit circuit_;
};

/// Throws InvalidInputError unless g's qubits lie in [1, n] and a CNOT's
/// control differs from its target.
void validate_gate(const Gate &g, int n);

/// Number of non-empty layers after ASAP compaction: the longest chain of gates
/// where consecutive gates share a qubit.
int depth(const GridCircuit &circuit);

GateCounts counts(const GridCircuit &circuit);

/// Reschedules every gate into the earliest column where all its qubits are
/// free, keeping per-qubit gate order. Result width equals depth(circuit).
GridCircuit compact(const GridCircuit &circuit);

}  // namespace dsynth

#endif  // DSYNTH_CIRCUIT_H
