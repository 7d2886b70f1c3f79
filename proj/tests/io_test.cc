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


#include "dsynth/io.h"

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "dsynth/errors.h"
#include "dsynth/synth.h"
#include "dsynth/workloads.h"
#include "oracle.h"

namespace dsynth {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string &name) {
    fs::path dir = fs::temp_directory_path() / "dsynth_io_test";
    fs::create_directories(dir);
    return dir / name;
}

GridCircuit random_circuit(uint64_t seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    return GridCircuit::from_sequence(n, testing::random_gates(n, seed % 30, seed));
}

TEST(PhaseJson, RoundTrip) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        PhaseSpec spec = random_phase(1 + static_cast<int>(seed % 8), seed);
        EXPECT_EQ(phase_from_json(phase_to_json(spec)).theta(), spec.theta());
    }
}

TEST(PhaseJson, Malformed) {
    EXPECT_THROW(phase_from_json("{"), InvalidInputError);
    EXPECT_THROW(phase_from_json(R"({"theta": [0, 0]})"), InvalidInputError);
    EXPECT_THROW(phase_from_json(R"({"n": 1})"), InvalidInputError);
    EXPECT_THROW(phase_from_json(R"({"n": 1, "theta": [0, "x"]})"), InvalidInputError);
    EXPECT_THROW(phase_from_json(R"({"n": 2, "theta": [0, 0]})"), InvalidInputError);
    EXPECT_THROW(phase_from_json(R"({"n": 1.5, "theta": [0, 0]})"), InvalidInputError);
}

TEST(PhaseBinary, RoundTripAndLayout) {
    PhaseSpec spec(2, {0.5, -1.0, 2.0, 3.25});
    std::string bytes = phase_to_phv(spec);
    ASSERT_EQ(bytes.size(), 4u + 4 * 8);
    EXPECT_EQ(static_cast<unsigned char>(bytes[0]), 2u);
    EXPECT_EQ(bytes[1], 0);
    EXPECT_EQ(phase_from_phv(bytes).theta(), spec.theta());
    EXPECT_THROW(phase_from_phv(bytes.substr(0, 3)), InvalidInputError);
    EXPECT_THROW(phase_from_phv(bytes.substr(0, bytes.size() - 1)), InvalidInputError);
}

TEST(PhaseFiles, ExtensionSelectsFormat) {
    PhaseSpec spec = random_phase(5, 3);
    for (const char *name : {"p.phv", "p.json"}) {
        fs::path path = scratch(name);
        save_phase_file(path, spec);
        EXPECT_EQ(load_phase_file(path).theta(), spec.theta());
    }
    EXPECT_EQ(read_file(scratch("p.phv")).size(), 4u + 32 * 8);
    EXPECT_THROW(load_phase_file(scratch("missing.json")), InvalidInputError);
}

TEST(CircuitJson, RoundTrip) {
    for (uint64_t seed = 0; seed < 50; seed++) {
        GridCircuit c = random_circuit(seed);
        EXPECT_EQ(circuit_from_json(circuit_to_json(c)), c) << seed;
    }
    GridCircuit sparse = build_alg1(compute_alpha(random_phase(4, 1)));
    EXPECT_EQ(circuit_from_json(circuit_to_json(sparse)), sparse);
}

TEST(CircuitJson, Malformed) {
    EXPECT_THROW(circuit_from_json(R"({"n": 2, "width": 1})"), InvalidInputError);
    EXPECT_THROW(circuit_from_json(R"({"n": 2, "width": 1, "gates": [{"kind": "h", "q": 1, "col": 1}]})"),
                 InvalidInputError);
    EXPECT_THROW(circuit_from_json(
                     R"({"n": 2, "width": 1, "gates": [{"kind": "rz", "q": 1, "col": 1, "beta": 0},
                                                         {"kind": "cnot", "c": 1, "t": 2, "col": 1}]})"),
                 InvalidInputError);
    EXPECT_THROW(circuit_from_json(R"({"n": 2, "width": 1, "gates": [{"kind": "rz", "q": 3, "col": 1, "beta": 0}]})"),
                 InvalidInputError);
}

TEST(Qasm, RoundTrip) {
    for (uint64_t seed = 0; seed < 50; seed++) {
        GridCircuit c = random_circuit(seed);
        EXPECT_EQ(circuit_from_qasm(circuit_to_qasm(c)), c) << seed;
    }
    GridCircuit empty(3);
    EXPECT_EQ(circuit_from_qasm(circuit_to_qasm(empty)), empty);
}

TEST(Qasm, HeaderAndGateLines) {
    GridCircuit c = GridCircuit::from_sequence(2, std::vector<Gate>{Gate::rz(1, 0.5), Gate::cnot(1, 2)});
    std::string text = circuit_to_qasm(c);
    EXPECT_EQ(text.rfind("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n", 0), 0u);
    EXPECT_NE(text.find("rz(-0.5) q[0];"), std::string::npos);
    EXPECT_NE(text.find("cx q[0],q[1];"), std::string::npos);
}

TEST(Qasm, PlainInputIsAsapPlaced) {
    GridCircuit c = circuit_from_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n"
                                      "cx q[0],q[1];\nrz(0.25) q[2];\nrz(-1) q[1];\n");
    EXPECT_EQ(c.width(), 2);
    EXPECT_EQ(c.at(3, 1)->gate, Gate::rz(3, -0.25));
    EXPECT_EQ(c.at(2, 2)->gate, Gate::rz(2, 1.0));
}

TEST(Qasm, Malformed) {
    EXPECT_THROW(circuit_from_qasm("OPENQASM 2.0;\nrz(1) q[0];\n"), InvalidInputError);
    EXPECT_THROW(circuit_from_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[0];\n"), InvalidInputError);
    EXPECT_THROW(circuit_from_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0];\n"), InvalidInputError);
    EXPECT_THROW(circuit_from_qasm("OPENQASM 2.0;\nqreg q[2];\nrz(1) q[5];\n"), InvalidInputError);
    EXPECT_THROW(circuit_from_qasm("OPENQASM 2.0;\nqreg q[2];\nrz(1) q[0]\n"), InvalidInputError);
    EXPECT_THROW(circuit_from_qasm("OPENQASM 2.0;\n"), InvalidInputError);
}

TEST(CircuitFiles, LoadByExtension) {
    GridCircuit c = random_circuit(11);
    {
        std::ofstream(scratch("c.qasm")) << circuit_to_qasm(c);
        std::ofstream(scratch("c.json")) << circuit_to_json(c);
    }
    EXPECT_EQ(load_circuit_file(scratch("c.qasm")), c);
    EXPECT_EQ(load_circuit_file(scratch("c.json")), c);
}

TEST(Report, JsonFields) {
    SimReport r;
    r.n = 3;
    r.is_diagonal = true;
    r.max_phase_error = 0.5;
    r.failed_k = 6;
    std::string text = report_to_json(r);
    EXPECT_NE(text.find(R"("failed_k":"110")"), std::string::npos) << text;
    EXPECT_NE(text.find(R"("diagonal":true)"), std::string::npos);
    r.failed_k.reset();
    EXPECT_NE(report_to_json(r).find(R"("failed_k":null)"), std::string::npos);
    EXPECT_EQ(bitstring(1, 4), "0001");
}

}  // namespace
}  // namespace dsynth
