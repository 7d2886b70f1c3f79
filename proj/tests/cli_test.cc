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


#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "dsynth/io.h"
#include "dsynth/workloads.h"

namespace dsynth {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "dsynth");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string &name) {
    fs::path dir = fs::temp_directory_path() / "dsynth_cli_test";
    fs::create_directories(dir);
    return (dir / name).string();
}

std::string write(const std::string &name, const std::string &text) {
    std::string path = tmp(name);
    std::ofstream(path, std::ios::binary) << text;
    return path;
}

TEST(CliSynth, Summary) {
    std::string in = write("theta3.json", R"({"n": 3, "theta": [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8]})");
    Result r = run({"synth", in, "--method", "alg1"});
    EXPECT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_EQ(r.out, "n=3 depth=8 rz=7 cnot=6\n");
    r = run({"synth", in, "--method", "theorem1"});
    EXPECT_EQ(r.out, "n=3 depth=11 rz=7 cnot=6\n");
}

TEST(CliSynth, ZeroTargetOptimizesAway) {
    std::string in = write("zero.json", R"({"n": 3, "theta": [0, 0, 0, 0, 0, 0, 0, 0]})");
    Result r = run({"synth", in, "--optimize"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, "n=3 depth=0 rz=0 cnot=0\n");
}

TEST(CliSynth, QaoaPipeline) {
    std::string phases = tmp("qaoa4.phv");
    Result q = run({"qaoa", "--n", "4", "--gamma", "0.8", "--out", phases});
    EXPECT_EQ(q.code, cli::kOk);
    EXPECT_EQ(q.out, "n=4 depth=18 rz=6 cnot=12\n");
    Result r = run({"synth", phases, "--optimize", "--spectrum", "naive"});
    EXPECT_EQ(r.out, "n=4 depth=12 rz=6 cnot=11\n");
}

TEST(CliQaoa, ThreeQubitOriginal) {
    Result q = run({"qaoa", "--n", "3", "--gamma", "0.5"});
    EXPECT_EQ(q.out, "n=3 depth=9 rz=3 cnot=6\n");
}

TEST(CliVerify, RoundTripBothFormats) {
    for (int n = 1; n <= 10; n++) {
        std::string phases = tmp("rand" + std::to_string(n) + ".json");
        ASSERT_EQ(run({"rand", "--n", std::to_string(n), "--seed", "5", "--out", phases}).code, cli::kOk);
        for (const char *ext : {".qasm", ".json"}) {
            std::string circuit = tmp("c" + std::to_string(n) + ext);
            ASSERT_EQ(run({"synth", phases, "--out", circuit}).code, cli::kOk);
            Result v = run({"verify", circuit, phases});
            EXPECT_EQ(v.code, cli::kOk) << n << ext << v.out << v.err;
            EXPECT_NE(v.out.find(R"("failed_k":null)"), std::string::npos);
        }
    }
}

TEST(CliVerify, MismatchFails) {
    std::string phases = tmp("mm.json");
    ASSERT_EQ(run({"rand", "--n", "4", "--seed", "2", "--out", phases}).code, cli::kOk);
    std::string circuit = tmp("mm.json.circuit.json");
    ASSERT_EQ(run({"synth", phases, "--out", circuit, "--format", "json"}).code, cli::kOk);
    GridCircuit c = load_circuit_file(circuit);
    std::vector<Gate> seq = c.sequence();
    for (Gate &g : seq) {
        if (g.is_rz()) {
            g.beta += 1e-3;
            break;
        }
    }
    std::string bent = write("bent.json", circuit_to_json(GridCircuit::from_sequence(4, seq)));
    Result v = run({"verify", bent, phases});
    EXPECT_EQ(v.code, cli::kVerifyFailed);
    EXPECT_EQ(v.out.find(R"("failed_k":null)"), std::string::npos);
}

TEST(CliVerify, DimensionMismatchIsBadInput) {
    std::string p3 = tmp("p3.json");
    std::string p4 = tmp("p4.json");
    ASSERT_EQ(run({"rand", "--n", "3", "--out", p3}).code, cli::kOk);
    ASSERT_EQ(run({"rand", "--n", "4", "--out", p4}).code, cli::kOk);
    std::string circuit = tmp("c3.qasm");
    ASSERT_EQ(run({"synth", p3, "--out", circuit}).code, cli::kOk);
    EXPECT_EQ(run({"verify", circuit, p4}).code, cli::kBadInput);
}

TEST(CliErrors, ExitCodes) {
    EXPECT_EQ(run({}).code, cli::kBadInput);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kBadInput);
    EXPECT_EQ(run({"synth", tmp("does_not_exist.json")}).code, cli::kBadInput);
    std::string bad = write("bad.json", R"({"n": 2, "theta": [1, 2, 3]})");
    EXPECT_EQ(run({"synth", bad}).code, cli::kBadInput);
    EXPECT_EQ(run({"synth", bad, "--method", "welch"}).code, cli::kBadInput);
    EXPECT_EQ(run({"bench", "--methods", "nope"}).code, cli::kBadInput);
    EXPECT_EQ(run({"rand", "--n", "3", "--out", "/nonexistent-dir/x/p.json"}).code, cli::kWriteFailed);
    EXPECT_EQ(run({"bench", "--max-n", "3", "--trials", "1", "--csv", "/nonexistent-dir/x/b.csv"}).code,
              cli::kWriteFailed);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(CliBench, DepthColumn) {
    Result r = run({"bench", "--min-n", "2", "--max-n", "8", "--trials", "2", "--methods", "alg1"});
    ASSERT_EQ(r.code, cli::kOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    std::vector<std::string> means;
    while (std::getline(in, line)) {
        if (line.find(",mean,") != std::string::npos) {
            means.push_back(line.substr(0, line.find(',', line.find("mean,") + 5)));
        }
    }
    EXPECT_EQ(means, (std::vector<std::string>{"2,alg1,mean,4", "3,alg1,mean,8", "4,alg1,mean,16", "5,alg1,mean,32",
                                               "6,alg1,mean,64", "7,alg1,mean,128", "8,alg1,mean,256"}));
}

TEST(CliRand, Deterministic) {
    Result a = run({"rand", "--n", "4", "--seed", "17"});
    Result b = run({"rand", "--n", "4", "--seed", "17"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(phase_from_json(a.out).theta(), random_phase(4, 17).theta());
}

}  // namespace
}  // namespace dsynth
