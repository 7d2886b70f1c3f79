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

#ifndef DSYNTH_WALSH_H
#define DSYNTH_WALSH_H

#include <cstdint>
#include <span>
#include <vector>

namespace dsynth {

/// Largest qubit count accepted by phase vectors and spectra.
constexpr int kMaxQubits = 24;

/// Index helpers for the global bit-order convention.
///
/// A basis index k of an n-qubit register is the n-bit string k_1 k_2 ... k_n
/// read as a binary number with k_1 the most significant bit. Qubit r (1-based)
/// therefore lives at bit (n - r) of the integer index.
inline bool bit_of(uint64_t index, int n, int qubit) {
    return ((index >> (n - qubit)) & 1) != 0;
}
inline uint64_t qubit_mask(int n, int qubit) {
    return uint64_t{1} << (n - qubit);
}

/// The target diagonal D(theta): n qubits and 2^n phases in radians.
class PhaseSpec {
   public:
    /// Throws InvalidInputError unless theta.size() == 2^n, 1 <= n <= kMaxQubits
    /// and every entry is finite.
    PhaseSpec(int n, std::vector<double> theta);

    int n() const {
        return n_;
    }
    size_t size() const {
        return theta_.size();
    }
    const std::vector<double> &theta() const {
        return theta_;
    }
    double operator[](size_t k) const {
        return theta_[k];
    }

   private:
    int n_;
    std::vector<double> theta_;
};

/// Walsh-Hadamard spectrum of a phase vector.
///
/// alpha = H^{(x)n} theta with the orthonormal kernel (-1)^{j.k} / sqrt(2^n), and
/// beta[j] = alpha[j] / sqrt(2^{n-2}) is the R_Z angle realising the j-th
/// parity term. beta[0] only carries the global phase.
class RotationSpectrum {
   public:
    static RotationSpectrum from_alpha(int n, std::vector<double> alpha);
    static RotationSpectrum from_beta(int n, std::vector<double> beta);

    int n() const {
        return n_;
    }
    size_t size() const {
        return alpha_.size();
    }
    const std::vector<double> &alpha() const {
        return alpha_;
    }
    const std::vector<double> &beta() const {
        return beta_;
    }
    double beta(uint64_t j) const {
        return beta_[j];
    }

    /// sqrt(2^{n-2}), the alpha -> beta scale factor.
    static double beta_scale(int n);

   private:
    RotationSpectrum(int n, std::vector<double> alpha, std::vector<double> beta);

    int n_;
    std::vector<double> alpha_;
    std::vector<double> beta_;
};

enum class SpectrumMethod {
    /// In-place O(n 2^n) butterfly.
    kFast,
    /// Direct per-entry double sum, O(q 2^n) for q non-zero inputs and O(2^n) memory.
    kNaive,
};

/// Normalised Walsh-Hadamard transform of a length-2^n vector. The transform is
/// its own inverse.
std::vector<double> hadamard_transform(std::span<const double> values, SpectrumMethod method = SpectrumMethod::kFast);

RotationSpectrum compute_alpha(const PhaseSpec &spec, SpectrumMethod method = SpectrumMethod::kFast);

PhaseSpec invert_alpha(const RotationSpectrum &spectrum);

/// The reflected Gray code built by suffix appending:
///   GC_2 = {0, 1},  GC_2t = {GC_t with suffix 0, reverse(GC_t) with suffix 1}.
/// Each code is stored as the integer value of its bit string g_1 ... g_m
/// (g_1 most significant), so appending suffix b maps g to 2g + b.
struct GraySequence {
    int bits;
    std::vector<uint32_t> codes;
};

/// CNOT controls for a group with target p_m: controls[i] is the 1-based
/// position of the bit that flips between codes i and i+1 (cyclically) of the
/// (p_m - 1)-bit Gray sequence.
struct ControlSequence {
    int pm;
    std::vector<int> controls;
};

GraySequence gray_sequence(int m);

ControlSequence control_sequence(int pm);

}  // namespace dsynth

#endif  // DSYNTH_WALSH_H
