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

#include "dsynth/rewrite.h"

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "dsynth/errors.h"

namespace dsynth {

namespace {

// Parities of every wire as bitmasks over the input bits. Circuits are capped at
// 32 qubits, so one 32-bit mask per wire suffices.
using Parities = std::array<uint32_t, 33>;

Parities identity_parities(int n) {
    Parities p{};
    for (int q = 1; q <= n; q++) {
        p[q] = uint32_t{1} << (q - 1);
    }
    return p;
}

void apply_linear(Parities &p, const Gate &g) {
    if (g.is_cnot()) {
        p[g.target] ^= p[g.control];
    }
}

/// Incremental form of commutes_with: 'moved' has g applied first, 'fixed' has
/// not. Feeding window gates one at a time lets a scan stop at the first R_Z
/// that already rules commutation out.
class CommutationProbe {
   public:
    CommutationProbe(int n, const Gate &g) : gate_(g), moved_(identity_parities(n)), fixed_(moved_) {
        apply_linear(moved_, g);
    }

    /// Returns false once the window can no longer commute with the gate.
    bool feed(const Gate &w) {
        if (w.is_rz()) {
            return moved_[w.target] == fixed_[w.target];
        }
        apply_linear(moved_, w);
        apply_linear(fixed_, w);
        return true;
    }

    /// Whether the window fed so far commutes with the gate.
    bool commutes() const {
        Parities after = fixed_;
        apply_linear(after, gate_);
        return after == moved_;
    }

   private:
    Gate gate_;
    Parities moved_;
    Parities fixed_;
};

bool same_cnot(const Gate &a, int control, int target) {
    return a.is_cnot() && a.control == control && a.target == target;
}

/// Index of an identical CNOT that cancels with seq[i], or nullopt.
std::optional<size_t> find_pair(const std::vector<Gate> &seq, size_t i, int n) {
    const Gate &g = seq[i];
    CommutationProbe probe(n, g);
    for (size_t j = i + 1; j < seq.size(); j++) {
        if (seq[j] == g) {
            if (probe.commutes()) {
                return j;
            }
            return std::nullopt;
        }
        if (!probe.feed(seq[j])) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

struct Triple {
    size_t first;
    size_t middle;
    size_t last;
};

/// Looks for CNOT(b,c) at i, the next CNOT(a,b), and the next CNOT(a,c) after it,
/// with the outer two able to slide next to the middle one.
std::optional<Triple> find_triple(const std::vector<Gate> &seq, size_t i, int n) {
    const Gate &g1 = seq[i];
    const int b = g1.control;
    const int c = g1.target;
    CommutationProbe left(n, g1);
    size_t j = i + 1;
    for (; j < seq.size(); j++) {
        if (seq[j].is_cnot() && seq[j].target == b) {
            break;
        }
        if (!left.feed(seq[j])) {
            return std::nullopt;
        }
    }
    if (j >= seq.size() || !left.commutes()) {
        return std::nullopt;
    }
    const int a = seq[j].control;
    if (a == c) {
        return std::nullopt;
    }
    CommutationProbe right(n, Gate::cnot(a, c));
    for (size_t k = j + 1; k < seq.size(); k++) {
        if (same_cnot(seq[k], a, c)) {
            if (right.commutes()) {
                return Triple{i, j, k};
            }
            return std::nullopt;
        }
        if (!right.feed(seq[k])) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::vector<Gate> cancel_sequence(int n, std::vector<Gate> seq, CancelOptions options, CancelStats &stats) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < seq.size() && !changed; i++) {
            if (!seq[i].is_cnot()) {
                continue;
            }
            if (auto j = find_pair(seq, i, n)) {
                seq.erase(seq.begin() + static_cast<ptrdiff_t>(*j));
                seq.erase(seq.begin() + static_cast<ptrdiff_t>(i));
                stats.pairs_cancelled++;
                changed = true;
            }
        }
        if (changed || !options.three_to_two) {
            continue;
        }
        for (size_t i = 0; i < seq.size() && !changed; i++) {
            if (!seq[i].is_cnot()) {
                continue;
            }
            if (auto t = find_triple(seq, i, n)) {
                // CNOT(b,c) W1 CNOT(a,b) W2 CNOT(a,c) == W1 CNOT(a,b) CNOT(b,c) W2.
                const Gate merged = seq[t->first];
                seq.erase(seq.begin() + static_cast<ptrdiff_t>(t->last));
                seq.insert(seq.begin() + static_cast<ptrdiff_t>(t->middle) + 1, merged);
                seq.erase(seq.begin() + static_cast<ptrdiff_t>(t->first));
                stats.triples_merged++;
                changed = true;
            }
        }
    }
    return seq;
}

}  // namespace

bool commutes_with(int n, const Gate &g, std::span<const Gate> window) {
    validate_gate(g, n);
    CommutationProbe probe(n, g);
    for (const Gate &w : window) {
        validate_gate(w, n);
        if (!probe.feed(w)) {
            return false;
        }
    }
    return probe.commutes();
}

GridCircuit remove_zero_rz(const GridCircuit &circuit, double eps) {
    GridBuilder grid(circuit.n(), circuit.width());
    for (const auto &pg : circuit.gates()) {
        if (pg.gate.is_rz() && std::abs(reduce_rz_angle(pg.gate.beta)) <= eps) {
            continue;
        }
        if (!grid.try_place(pg.gate, pg.column)) {
            throw InternalInvariantError("re-placing a gate collided");
        }
    }
    return std::move(grid).build();
}

GridCircuit cancel_cnots(const GridCircuit &circuit, CancelOptions options, CancelStats *stats) {
    if (circuit.n() > 32) {
        throw InvalidInputError("cancellation supports at most 32 qubits");
    }
    CancelStats local;
    std::vector<Gate> seq = cancel_sequence(circuit.n(), circuit.sequence(), options, local);
    if (stats != nullptr) {
        *stats = local;
    }
    return GridCircuit::from_sequence(circuit.n(), seq);
}

GridCircuit optimize(const GridCircuit &circuit, double eps) {
    const int before_depth = depth(circuit);
    const GridCircuit stripped = remove_zero_rz(circuit, eps);
    GridCircuit result = compact(cancel_cnots(stripped));
    if (depth(result) > before_depth) {
        result = compact(cancel_cnots(stripped, CancelOptions{.three_to_two = false}));
    }
    return result;
}

}  // namespace dsynth
