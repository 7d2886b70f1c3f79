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

#include "dsynth/walsh.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "dsynth/errors.h"
#include "dsynth/parallel.h"

namespace dsynth {

namespace {

int log2_exact(size_t size) {
    if (size == 0 || !std::has_single_bit(size)) {
        throw InvalidInputError("vector length " + std::to_string(size) + " is not a power of two");
    }
    return std::countr_zero(size);
}

void fast_walsh_hadamard(std::vector<double> &a) {
    const size_t size = a.size();
    for (size_t half = 1; half < size; half <<= 1) {
        for (size_t block = 0; block < size; block += half << 1) {
            for (size_t i = block; i < block + half; i++) {
                double x = a[i];
                double y = a[i + half];
                a[i] = x + y;
                a[i + half] = x - y;
            }
        }
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(size));
    for (double &v : a) {
        v *= norm;
    }
}

std::vector<double> naive_walsh_hadamard(std::span<const double> values) {
    const size_t size = values.size();
    // Zero entries contribute nothing to any sum.
    std::vector<std::pair<uint64_t, double>> terms;
    for (size_t k = 0; k < size; k++) {
        if (values[k] != 0.0) {
            terms.emplace_back(k, values[k]);
        }
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(size));
    std::vector<double> out(size, 0.0);
    parallel_for_chunks(
        size,
        [&](size_t begin, size_t end) {
            for (size_t j = begin; j < end; j++) {
                double acc = 0.0;
                for (const auto &[k, v] : terms) {
                    acc += (std::popcount(j & k) & 1) ? -v : v;
                }
                out[j] = acc * norm;
            }
        },
        64);
    return out;
}

}  // namespace

PhaseSpec::PhaseSpec(int n, std::vector<double> theta) : n_(n), theta_(std::move(theta)) {
    if (n < 1 || n > kMaxQubits) {
        throw InvalidInputError("qubit count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (theta_.size() != (size_t{1} << n)) {
        throw InvalidInputError("phase vector has " + std::to_string(theta_.size()) + " entries, expected 2^" +
                                std::to_string(n));
    }
    for (size_t k = 0; k < theta_.size(); k++) {
        if (!std::isfinite(theta_[k])) {
            throw InvalidInputError("phase entry " + std::to_string(k) + " is not finite");
        }
    }
}

double RotationSpectrum::beta_scale(int n) {
    return std::sqrt(std::ldexp(1.0, n - 2));
}

RotationSpectrum::RotationSpectrum(int n, std::vector<double> alpha, std::vector<double> beta)
    : n_(n), alpha_(std::move(alpha)), beta_(std::move(beta)) {
}

RotationSpectrum RotationSpectrum::from_alpha(int n, std::vector<double> alpha) {
    PhaseSpec check(n, alpha);  // same shape and finiteness rules as a phase vector
    (void)check;
    const double scale = beta_scale(n);
    std::vector<double> beta(alpha.size());
    for (size_t j = 0; j < alpha.size(); j++) {
        beta[j] = alpha[j] / scale;
    }
    return RotationSpectrum(n, std::move(alpha), std::move(beta));
}

RotationSpectrum RotationSpectrum::from_beta(int n, std::vector<double> beta) {
    PhaseSpec check(n, beta);
    (void)check;
    const double scale = beta_scale(n);
    std::vector<double> alpha(beta.size());
    for (size_t j = 0; j < beta.size(); j++) {
        alpha[j] = beta[j] * scale;
    }
    return RotationSpectrum(n, std::move(alpha), std::move(beta));
}

std::vector<double> hadamard_transform(std::span<const double> values, SpectrumMethod method) {
    log2_exact(values.size());
    if (method == SpectrumMethod::kNaive) {
        return naive_walsh_hadamard(values);
    }
    std::vector<double> out(values.begin(), values.end());
    fast_walsh_hadamard(out);
    return out;
}

RotationSpectrum compute_alpha(const PhaseSpec &spec, SpectrumMethod method) {
    return RotationSpectrum::from_alpha(spec.n(), hadamard_transform(spec.theta(), method));
}

PhaseSpec invert_alpha(const RotationSpectrum &spectrum) {
    return PhaseSpec(spectrum.n(), hadamard_transform(spectrum.alpha(), SpectrumMethod::kFast));
}

GraySequence gray_sequence(int m) {
    if (m < 1 || m > 31) {
        throw InvalidInputError("Gray code width must be in [1, 31], got " + std::to_string(m));
    }
    GraySequence seq{m, {0, 1}};
    seq.codes.reserve(size_t{1} << m);
    for (int width = 1; width < m; width++) {
        const size_t half = seq.codes.size();
        for (size_t i = half; i-- > 0;) {
            seq.codes.push_back((seq.codes[i] << 1) | 1);
        }
        for (size_t i = 0; i < half; i++) {
            seq.codes[i] <<= 1;
        }
    }
    return seq;
}

ControlSequence control_sequence(int pm) {
    if (pm < 2 || pm > 32) {
        throw InvalidInputError("control sequence group index must be in [2, 32], got " + std::to_string(pm));
    }
    ControlSequence seq{pm, {0}};
    seq.controls.reserve(size_t{1} << (pm - 1));
    for (int p = 2; p <= pm; p++) {
        const size_t t = size_t{1} << (p - 1);
        seq.controls[t / 2 - 1] = p - 1;
        const size_t size = seq.controls.size();
        seq.controls.resize(2 * size);
        std::copy_n(seq.controls.begin(), size, seq.controls.begin() + size);
    }
    return seq;
}

}  // namespace dsynth
