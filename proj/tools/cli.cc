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
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dsynth/errors.h"
#include "dsynth/io.h"
#include "dsynth/rewrite.h"
#include "dsynth/sim.h"
#include "dsynth/synth.h"
#include "dsynth/walsh.h"
#include "dsynth/workloads.h"

namespace dsynth::cli {

namespace {

namespace fs = std::filesystem;

/// Output sink failure, mapped to exit code 3.
struct WriteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw WriteError("cannot open '" + path.string() + "' for writing");
    }
    file << text;
    file.flush();
    if (!file) {
        throw WriteError("failed writing '" + path.string() + "'");
    }
}

void write_phase(const fs::path &path, const PhaseSpec &spec) {
    write_text(path, path.extension() == ".phv" ? phase_to_phv(spec) : phase_to_json(spec));
}

std::string summary(const GridCircuit &circuit) {
    GateCounts c = counts(circuit);
    std::ostringstream s;
    s << "n=" << circuit.n() << " depth=" << depth(circuit) << " rz=" << c.rz << " cnot=" << c.cnot;
    return s.str();
}

std::string render(const GridCircuit &circuit, const std::string &format, const fs::path &out_path) {
    bool qasm = format == "qasm" || (format.empty() && out_path.extension() == ".qasm");
    return qasm ? circuit_to_qasm(circuit) : circuit_to_json(circuit);
}

std::vector<BenchMethod> parse_methods(const std::string &list) {
    std::vector<BenchMethod> methods;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            methods.push_back(parse_method(item));
        }
    }
    if (methods.empty()) {
        throw InvalidInputError("no benchmark methods given");
    }
    return methods;
}

struct SynthArgs {
    std::string input;
    std::string method = "alg1";
    bool optimize = false;
    double eps = kDefaultZeroEps;
    std::string spectrum = "fast";
    std::string out;
    std::string format;
};

struct VerifyArgs {
    std::string circuit;
    std::string phases;
    double tol = kDefaultVerifyTolerance;
    int max_qubits = kDefaultSimQubitCap;
};

struct BenchArgs {
    int min_n = 2;
    int max_n = 10;
    int trials = 20;
    uint64_t seed = 1;
    std::string methods = "alg1";
    int verify_cap = 12;
    bool optimize = false;
    std::string csv;
};

struct QaoaArgs {
    int n = 4;
    double gamma = 0.5;
    std::string out;
    std::string circuit_out;
    std::string format;
};

struct RandArgs {
    int n = 3;
    uint64_t seed = 1;
    std::string out;
};

int cmd_synth(const SynthArgs &a, std::ostream &out) {
    PhaseSpec spec = load_phase_file(a.input);
    SpectrumMethod sm = a.spectrum == "naive" ? SpectrumMethod::kNaive : SpectrumMethod::kFast;
    RotationSpectrum spectrum = compute_alpha(spec, sm);
    GridCircuit circuit = a.method == "theorem1" ? build_theorem1(spectrum) : build_alg1(spectrum);
    if (a.optimize) {
        circuit = optimize(circuit, a.eps);
    }
    if (!a.out.empty()) {
        write_text(a.out, render(circuit, a.format, a.out));
    }
    out << summary(circuit) << "\n";
    return kOk;
}

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
    GridCircuit circuit = load_circuit_file(a.circuit);
    PhaseSpec spec = load_phase_file(a.phases);
    SimReport report = verify(circuit, spec, a.tol, a.max_qubits);
    out << report_to_json(report);
    return report.passed ? kOk : kVerifyFailed;
}

int cmd_bench(const BenchArgs &a, std::ostream &out) {
    BenchConfig config;
    config.min_n = a.min_n;
    config.max_n = a.max_n;
    config.trials = a.trials;
    config.seed = a.seed;
    config.methods = parse_methods(a.methods);
    config.verify_cap = a.verify_cap;
    config.optimize = a.optimize;
    std::vector<BenchRecord> records = run_benchmark(config);
    std::ostringstream csv;
    write_bench_csv(csv, records);
    if (a.csv.empty()) {
        out << csv.str();
    } else {
        write_text(a.csv, csv.str());
    }
    return kOk;
}

int cmd_qaoa(const QaoaArgs &a, std::ostream &out) {
    PhaseSpec spec = qaoa_phase(a.n, a.gamma);
    GridCircuit original = qaoa_original_circuit(a.n, a.gamma);
    if (!a.out.empty()) {
        write_phase(a.out, spec);
    }
    if (!a.circuit_out.empty()) {
        write_text(a.circuit_out, render(original, a.format, a.circuit_out));
    }
    out << summary(original) << "\n";
    return kOk;
}

int cmd_rand(const RandArgs &a, std::ostream &out) {
    PhaseSpec spec = random_phase(a.n, a.seed);
    if (a.out.empty()) {
        out << phase_to_json(spec);
    } else {
        write_phase(a.out, spec);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Depth-optimized {CNOT, R_Z} synthesis of diagonal unitaries", "dsynth"};
    app.require_subcommand(1);

    SynthArgs synth;
    auto *s = app.add_subcommand("synth", "Synthesize a circuit from a phase file (.json or .phv)");
    s->add_option("input", synth.input, "Phase vector file")->required();
    s->add_option("--method", synth.method, "Construction")->check(CLI::IsMember({"alg1", "theorem1"}));
    s->add_flag("--optimize", synth.optimize, "Remove zero rotations, cancel CNOTs, recompact");
    s->add_option("--eps", synth.eps, "Zero-angle threshold for --optimize");
    s->add_option("--spectrum", synth.spectrum, "Spectrum path")->check(CLI::IsMember({"fast", "naive"}));
    s->add_option("--out", synth.out, "Circuit output file");
    s->add_option("--format", synth.format, "Circuit format (default: from --out extension, else json)")
        ->check(CLI::IsMember({"qasm", "json"}));

    VerifyArgs ver;
    auto *v = app.add_subcommand("verify", "Check a circuit against a phase vector up to global phase");
    v->add_option("circuit", ver.circuit, "Circuit file (.json or .qasm)")->required();
    v->add_option("phases", ver.phases, "Phase vector file")->required();
    v->add_option("--tol", ver.tol, "Maximum phase error");
    v->add_option("--max-qubits", ver.max_qubits, "Simulation qubit cap");

    BenchArgs bench;
    auto *b = app.add_subcommand("bench", "Run the depth/gate-count benchmark and emit CSV");
    b->add_option("--min-n", bench.min_n);
    b->add_option("--max-n", bench.max_n);
    b->add_option("--trials", bench.trials);
    b->add_option("--seed", bench.seed);
    b->add_option("--methods", bench.methods,
                  "Comma list of alg1,theorem1,baseline-closed-form,qaoa-original,qaoa-resynth");
    b->add_option("--verify-cap", bench.verify_cap, "Largest n that is simulated");
    b->add_flag("--optimize", bench.optimize, "Optimize alg1/theorem1 output too");
    b->add_option("--csv", bench.csv, "CSV output file (default stdout)");

    QaoaArgs qaoa;
    auto *q = app.add_subcommand("qaoa", "Write MaxCut QAOA cost-layer phases for K_n");
    q->add_option("--n", qaoa.n)->required();
    q->add_option("--gamma", qaoa.gamma)->required();
    q->add_option("--out", qaoa.out, "Phase output file (.phv or JSON)");
    q->add_option("--circuit-out", qaoa.circuit_out, "Write the textbook cost-layer circuit here");
    q->add_option("--format", qaoa.format)->check(CLI::IsMember({"qasm", "json"}));

    RandArgs rnd;
    auto *r = app.add_subcommand("rand", "Write a seeded uniform random phase vector");
    r->add_option("--n", rnd.n)->required();
    r->add_option("--seed", rnd.seed);
    r->add_option("--out", rnd.out, "Phase output file (.phv or JSON, default stdout)");

    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rest);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (s->parsed()) {
            return cmd_synth(synth, out);
        }
        if (v->parsed()) {
            return cmd_verify(ver, out);
        }
        if (b->parsed()) {
            return cmd_bench(bench, out);
        }
        if (q->parsed()) {
            return cmd_qaoa(qaoa, out);
        }
        if (r->parsed()) {
            return cmd_rand(rnd, out);
        }
    } catch (const WriteError &e) {
        err << "dsynth: " << e.what() << "\n";
        return kWriteFailed;
    } catch (const std::exception &e) {
        err << "dsynth: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}

}  // namespace dsynth::cli
