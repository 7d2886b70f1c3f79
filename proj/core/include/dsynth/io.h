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

#ifndef DSYNTH_IO_H
#define DSYNTH_IO_H

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "dsynth/circuit.h"
#include "dsynth/sim.h"
#include "dsynth/walsh.h"

namespace dsynth {

// Phase vectors.
//
// JSON:   {"n": <int>, "theta": [<float> x 2^n]}
// .phv:   little-endian uint32 n followed by 2^n little-endian IEEE-754 doubles.
//
// All readers throw InvalidInputError on malformed content.

std::string phase_to_json(const PhaseSpec &spec);
PhaseSpec phase_from_json(std::string_view text);
std::string phase_to_phv(const PhaseSpec &spec);
PhaseSpec phase_from_phv(std::string_view bytes);

/// Chooses the format from the extension: ".phv" is binary, anything else JSON.
PhaseSpec load_phase_file(const std::filesystem::path &path);
void save_phase_file(const std::filesystem::path &path, const PhaseSpec &spec);

// Circuits.
//
// JSON: {"n":..,"width":..,"gates":[{"kind":"rz","q":r,"col":l,"beta":b} |
//                                   {"kind":"cnot","c":c,"t":t,"col":l}]}
// with gates sorted by column, then row.

std::string circuit_to_json(const GridCircuit &circuit);
GridCircuit circuit_from_json(std::string_view text);

/// OpenQASM 2.0, column-major. Wire r maps to q[r-1]. qelib1's rz(x) is
/// diag(1, e^{ix}), so RZ(-beta) is written as rz(-beta), equal up to the global
/// phase e^{i beta / 2}. "// col <l>" comments carry grid coordinates so the
/// importer can restore them exactly.
std::string circuit_to_qasm(const GridCircuit &circuit);
/// Accepts the subset written above (rz and cx only). Without column comments
/// the gates are ASAP-placed in file order.
GridCircuit circuit_from_qasm(std::string_view text);

/// ".qasm" selects OpenQASM, anything else circuit JSON.
GridCircuit load_circuit_file(const std::filesystem::path &path);

/// {"diagonal": bool, "max_phase_error": float, "global_phase": float,
///  "failed_k": "<n-bit string>" | null}
std::string report_to_json(const SimReport &report);

/// k_1 ... k_n as characters, k_1 first.
std::string bitstring(uint64_t k, int n);

/// Reads a whole file. Throws InvalidInputError if it cannot be opened.
std::string read_file(const std::filesystem::path &path);

}  // namespace dsynth

#endif  // DSYNTH_IO_H
