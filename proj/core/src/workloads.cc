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

#include "dsynth/workloads.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "dsynth/errors.h"
#include "dsynth/rewrite.h"
#include "dsynth/sim.h"
#include "dsynth/synth.h"

namespace dsynth {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double open_unit(uint64_t x) {
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::string format_value(double v) {
    char buf[64];
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
    } else {
        std::snprintf(buf, sizeof(buf), "%.6g", v);
    }
    return buf;
}

struct Cell {
    GridCircuit circuit;
    std::optional<PhaseSpec> target;
    double seconds;
};

Cell run_cell(const BenchConfig &config, BenchMethod method, int n, uint64_t seed) {
    using Clock = std::chrono::steady_clock;
    switch (method) {
        case BenchMethod::kAlg1:
        case BenchMethod::kTheorem1: {
            PhaseSpec theta = random_phase(n, seed);
            auto start = Clock::now();
            RotationSpectrum spectrum = compute_alpha(theta, config.spectrum);
            GridCircuit c = method == BenchMethod::kAlg1 ? build_alg1(spectrum) : build_theorem1(spectrum);
            if (config.optimize) {
                c = optimize(c);
            }
            double secs = std::chrono::duration<double>(Clock::now() - start).count();
            return Cell{std::move(c), std::move(theta), secs};
        }
        case BenchMethod::kQaoaOriginal:
        case BenchMethod::kQaoaResynth: {
            std::mt19937_64 rng(seed);
            double gamma = std::numbers::pi * open_unit(rng());
            PhaseSpec theta = qaoa_phase(n, gamma);
            auto start = Clock::now();
            GridCircuit c(n);
            if (method == BenchMethod::kQaoaOriginal) {
                c = qaoa_original_circuit(n, gamma);
            } else {
                c = optimize(build_alg1(compute_alpha(theta, config.spectrum)));
            }
            double secs = std::chrono::duration<double>(Clock::now() - start).count();
            return Cell{std::move(c), std::move(theta), secs};
        }
        case BenchMethod::kBaselineClosedForm:
            break;
    }
    throw InternalInvariantError("run_cell called for a closed-form method");
}

}  // namespace

PhaseSpec random_phase(int n, uint64_t seed) {
    if (n < 1 || n > kMaxQubits) {
        throw InvalidInputError("qubit count out of range");
    }
    std::mt19937_64 rng(seed);
    std::vector<double> theta(size_t{1} << n);
    for (double &v : theta) {
        v = kTwoPi * open_unit(rng());
        if (v >= kTwoPi) {
            v = std::nextafter(kTwoPi, 0.0);
        }
    }
    return PhaseSpec(n, std::move(theta));
}

PhaseSpec qaoa_phase(int n, double gamma) {
    if (n < 2 || n > kMaxQubits) {
        throw InvalidInputError("QAOA phase needs 2 <= n <= " + std::to_string(kMaxQubits));
    }
    std::vector<double> theta(size_t{1} << n);
    for (size_t k = 0; k < theta.size(); k++) {
        long sum = 0;
        for (int c = 1; c <= n; c++) {
            for (int t = c + 1; t <= n; t++) {
                sum += bit_of(k, n, c) != bit_of(k, n, t) ? -1 : 1;
            }
        }
        theta[k] = gamma * static_cast<double>(sum);
    }
    return PhaseSpec(n, std::move(theta));
}

GridCircuit qaoa_original_circuit(int n, double gamma) {
    if (n < 2 || n > 32) {
        throw InvalidInputError("QAOA circuit needs 2 <= n <= 32");
    }
    std::vector<Gate> seq;
    auto block = [&](int c, int t) {
        seq.push_back(Gate::cnot(c, t));
        seq.push_back(Gate::rz(t, reduce_rz_angle(2 * gamma)));
        seq.push_back(Gate::cnot(c, t));
    };
    for (int c = 1; c < n; c++) {
        if (c % 2 == 1) {
            for (int t = c + 1; t <= n; t++) {
                block(c, t);
            }
        } else {
            for (int t = n; t > c; t--) {
                block(c, t);
            }
        }
    }
    return GridCircuit::from_sequence(n, seq);
}

std::string_view method_label(BenchMethod method) {
    switch (method) {
        case BenchMethod::kAlg1:
            return "alg1";
        case BenchMethod::kTheorem1:
            return "theorem1";
        case BenchMethod::kBaselineClosedForm:
            return "baseline-closed-form";
        case BenchMethod::kQaoaOriginal:
            return "qaoa-original";
        case BenchMethod::kQaoaResynth:
            return "qaoa-resynth";
    }
    return "?";
}

BenchMethod parse_method(std::string_view label) {
    for (BenchMethod m : {BenchMethod::kAlg1, BenchMethod::kTheorem1, BenchMethod::kBaselineClosedForm,
                          BenchMethod::kQaoaOriginal, BenchMethod::kQaoaResynth}) {
        if (method_label(m) == label) {
            return m;
        }
    }
    throw InvalidInputError("unknown benchmark method '" + std::string(label) + "'");
}

std::string_view verify_label(VerifyStatus status) {
    switch (status) {
        case VerifyStatus::kPass:
            return "true";
        case VerifyStatus::kFail:
            return "false";
        case VerifyStatus::kSkipped:
            return "skipped";
        case VerifyStatus::kError:
            return "error";
    }
    return "?";
}

uint64_t trial_seed(uint64_t base, int n, int trial) {
    return splitmix64(splitmix64(base ^ (static_cast<uint64_t>(n) << 32)) + static_cast<uint64_t>(trial));
}

std::vector<BenchRecord> run_benchmark(const BenchConfig &config) {
    if (config.min_n < 1 || config.max_n < config.min_n || config.max_n > kMaxQubits) {
        throw InvalidInputError("benchmark qubit range is invalid");
    }
    if (config.trials < 1) {
        throw InvalidInputError("benchmark needs at least one trial");
    }
    std::vector<BenchRecord> records;
    for (int n = config.min_n; n <= config.max_n; n++) {
        for (BenchMethod method : config.methods) {
            bool is_qaoa = method == BenchMethod::kQaoaOriginal || method == BenchMethod::kQaoaResynth;
            if (is_qaoa && n < 2) {
                continue;
            }
            BenchRecord mean;
            mean.n = n;
            mean.method = method;
            mean.seed = config.seed;
            if (method == BenchMethod::kBaselineClosedForm) {
                // Deterministic: one row carries the whole group.
                mean.depth = static_cast<double>(baseline_depth(n));
                mean.rz = std::ldexp(1.0, n) - 1;
                mean.cnot = std::ldexp(1.0, n) - 2;
                records.push_back(mean);
                continue;
            }
            bool any_fail = false;
            bool any_error = false;
            bool any_pass = false;
            int ok_trials = 0;
            for (int trial = 0; trial < config.trials; trial++) {
                BenchRecord rec;
                rec.n = n;
                rec.method = method;
                rec.trial = trial;
                rec.seed = trial_seed(config.seed, n, trial);
                try {
                    Cell cell = run_cell(config, method, n, rec.seed);
                    GateCounts gc = counts(cell.circuit);
                    rec.depth = depth(cell.circuit);
                    rec.rz = static_cast<double>(gc.rz);
                    rec.cnot = static_cast<double>(gc.cnot);
                    rec.synth_seconds = cell.seconds;
                    if (n <= config.verify_cap && cell.target) {
                        SimReport report = verify(cell.circuit, *cell.target, config.tolerance, config.verify_cap);
                        rec.verified = report.passed ? VerifyStatus::kPass : VerifyStatus::kFail;
                    }
                    mean.depth += rec.depth;
                    mean.rz += rec.rz;
                    mean.cnot += rec.cnot;
                    mean.synth_seconds += rec.synth_seconds;
                    ok_trials++;
                } catch (const std::exception &e) {
                    rec.verified = VerifyStatus::kError;
                    rec.error = e.what();
                }
                any_pass |= rec.verified == VerifyStatus::kPass;
                any_fail |= rec.verified == VerifyStatus::kFail;
                any_error |= rec.verified == VerifyStatus::kError;
                records.push_back(std::move(rec));
            }
            if (ok_trials > 0) {
                mean.depth /= ok_trials;
                mean.rz /= ok_trials;
                mean.cnot /= ok_trials;
                mean.synth_seconds /= ok_trials;
            }
            if (any_error) {
                mean.verified = VerifyStatus::kError;
            } else if (any_fail) {
                mean.verified = VerifyStatus::kFail;
            } else if (any_pass) {
                mean.verified = VerifyStatus::kPass;
            }
            records.push_back(mean);
        }
    }
    return records;
}

void write_bench_csv(std::ostream &out, const std::vector<BenchRecord> &records) {
    out << "n,method,trial,depth,rz,cnot,synth_seconds,verified,seed\n";
    for (const BenchRecord &r : records) {
        char secs[32];
        std::snprintf(secs, sizeof(secs), "%.6g", r.synth_seconds);
        out << r.n << ',' << method_label(r.method) << ',' << (r.trial ? std::to_string(*r.trial) : "mean") << ','
            << format_value(r.depth) << ',' << format_value(r.rz) << ',' << format_value(r.cnot) << ',' << secs
            << ',' << verify_label(r.verified) << ',' << r.seed << '\n';
    }
}

}  // namespace dsynth
