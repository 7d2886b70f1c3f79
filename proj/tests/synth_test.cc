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


#include "dsynth/synth.h"

#include <bit>
#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "dsynth/errors.h"
#include "dsynth/sim.h"
#include "oracle.h"

namespace dsynth {
namespace {

// beta_j = (j + 1) / 1024 makes every R_Z angle name its own index.
RotationSpectrum tagged_spectrum(int n) {
    std::vector<double> beta(size_t{1} << n);
    for (size_t j = 0; j < beta.size(); j++) {
        beta[j] = static_cast<double>(j + 1) / 1024;
    }
    return RotationSpectrum::from_beta(n, beta);
}

uint64_t tag_of(const Gate &g) {
    return static_cast<uint64_t>(std::lround(g.beta * 1024)) - 1;
}

RotationSpectrum random_spectrum(int n, uint64_t seed) {
    return compute_alpha(PhaseSpec(n, testing::random_angles(size_t{1} << n, seed)));
}

TEST(ModuleMj, Structure) {
    EXPECT_EQ(build_module_mj(3, 0b010, 0.5), (std::vector<Gate>{Gate::rz(2, 0.5)}));
    EXPECT_EQ(build_module_mj(3, 0b110, 0.5),
              (std::vector<Gate>{Gate::cnot(1, 2), Gate::rz(2, 0.5), Gate::cnot(1, 2)}));
    EXPECT_EQ(build_module_mj(4, 0b1011, 0.5),
              (std::vector<Gate>{Gate::cnot(1, 4), Gate::cnot(3, 4), Gate::rz(4, 0.5), Gate::cnot(3, 4),
                                 Gate::cnot(1, 4)}));
    EXPECT_THROW(build_module_mj(3, 0, 0.5), InvalidInputError);
    EXPECT_THROW(build_module_mj(3, 8, 0.5), InvalidInputError);
}

TEST(ModuleMj, PhaseIsParityFunction) {
    const double beta = 0.8125;
    for (int n = 1; n <= 5; n++) {
        for (uint64_t j = 1; j < (uint64_t{1} << n); j++) {
            auto seq = build_module_mj(n, j, beta);
            SimReport r = simulate_sequence(n, seq);
            ASSERT_TRUE(r.is_diagonal);
            std::vector<double> want(size_t{1} << n);
            for (uint64_t k = 0; k < want.size(); k++) {
                want[k] = (std::popcount(j & k) % 2 ? -beta : beta) / 2;
                ASSERT_NEAR(r.phase[k], want[k], 1e-15) << "j=" << j << " k=" << k;
            }
            ASSERT_LT(testing::diagonal_distance(n, seq, want), 1e-12);
        }
    }
}

TEST(Theorem1, ThreeQubitLayout) {
    GridCircuit c = build_theorem1(random_spectrum(3, 1));
    EXPECT_EQ(depth(c), 11);
    EXPECT_EQ(counts(c), (GateCounts{7, 6, 13}));
}

TEST(Theorem1, FourQubitDepth) {
    GridCircuit c = build_theorem1(random_spectrum(4, 2));
    EXPECT_EQ(depth(c), 24);
    EXPECT_EQ(counts(c), (GateCounts{15, 14, 29}));
}

TEST(Alg1, ThreeQubitLayout) {
    GridCircuit c = build_alg1(random_spectrum(3, 3));
    EXPECT_EQ(depth(c), 8);
    EXPECT_EQ(c.width(), 8);
    EXPECT_EQ(counts(c), (GateCounts{7, 6, 13}));
}

TEST(Alg1, FourQubitLayout) {
    GridCircuit c = build_alg1(tagged_spectrum(4));
    EXPECT_EQ(depth(c), 16);
    EXPECT_EQ(c.width(), 16);

    // column 1 rows 1..3 carry the first rotation of G_1, G_2, G_3
    EXPECT_EQ(tag_of(c.at(1, 1)->gate), 0b1000u);
    EXPECT_EQ(tag_of(c.at(2, 1)->gate), 0b0100u);
    EXPECT_EQ(tag_of(c.at(3, 1)->gate), 0b0010u);

    // S_2 in columns 5..7 on row 2
    EXPECT_EQ(c.at(2, 5)->gate, Gate::cnot(1, 2));
    EXPECT_EQ(tag_of(c.at(2, 6)->gate), 0b1100u);
    EXPECT_EQ(c.at(2, 7)->gate, Gate::cnot(1, 2));

    // S_3 in columns 9..15 on row 3
    EXPECT_EQ(c.at(3, 9)->gate, Gate::cnot(1, 3));
    EXPECT_EQ(tag_of(c.at(3, 10)->gate), 0b1010u);
    EXPECT_EQ(c.at(3, 11)->gate, Gate::cnot(2, 3));
    EXPECT_EQ(tag_of(c.at(3, 12)->gate), 0b1110u);
    EXPECT_EQ(c.at(3, 13)->gate, Gate::cnot(1, 3));
    EXPECT_EQ(tag_of(c.at(3, 14)->gate), 0b0110u);
    EXPECT_EQ(c.at(3, 15)->gate, Gate::cnot(2, 3));

    // G_4 along row 4
    const uint64_t rz_tags[] = {0b0001, 0b1001, 0b1101, 0b0101, 0b0111, 0b1111, 0b1011, 0b0011};
    const int controls[] = {1, 2, 1, 3, 1, 2, 1, 3};
    for (int i = 0; i < 8; i++) {
        EXPECT_EQ(tag_of(c.at(4, 2 * i + 1)->gate), rz_tags[i]) << i;
        EXPECT_EQ(c.at(4, 2 * i + 2)->gate, Gate::cnot(controls[i], 4)) << i;
    }
}

TEST(Alg1, SingleQubit) {
    GridCircuit c = build_alg1(RotationSpectrum::from_beta(1, {0.0, 0.3}));
    EXPECT_EQ(c.width(), 1);
    EXPECT_EQ(counts(c), (GateCounts{1, 0, 1}));
    EXPECT_EQ(c.at(1, 1)->gate, Gate::rz(1, 0.3));
}

TEST(Alg1, EveryAngleIndexUsedOnce) {
    for (int n = 2; n <= 10; n++) {
        GridCircuit c = build_alg1(tagged_spectrum(n));
        std::map<uint64_t, int> hits;
        for (const PlacedGate &pg : c.gates()) {
            if (pg.gate.is_rz()) {
                hits[tag_of(pg.gate)]++;
                // the rotation acts on the lowest set qubit of its index
                uint64_t j = tag_of(pg.gate);
                EXPECT_EQ(pg.gate.target, n - std::countr_zero(j));
            }
        }
        EXPECT_EQ(hits.size(), (size_t{1} << n) - 1) << n;
        EXPECT_EQ(hits.count(0), 0u);
        for (auto [j, count] : hits) {
            EXPECT_EQ(count, 1) << "n=" << n << " j=" << j;
        }
        EXPECT_EQ(counts(c), (GateCounts{(size_t{1} << n) - 1, (size_t{1} << n) - 2, (size_t{2} << n) - 3}));
        EXPECT_EQ(depth(c), 1 << n);
    }
}

TEST(Alg1, DepthAndCountsByFormula) {
    for (int n = 2; n <= 14; n++) {
        GridCircuit c = build_alg1(RotationSpectrum::from_beta(n, std::vector<double>(size_t{1} << n, 0.25)));
        EXPECT_EQ(depth(c), 1 << n);
        EXPECT_EQ(counts(c).rz, (size_t{1} << n) - 1);
        EXPECT_EQ(counts(c).cnot, (size_t{1} << n) - 2);
    }
}

TEST(Builders, MatchDenseOracle) {
    for (int n = 1; n <= 6; n++) {
        for (uint64_t seed = 0; seed < 5; seed++) {
            auto theta = testing::random_angles(size_t{1} << n, 1000 * n + seed);
            RotationSpectrum s = compute_alpha(PhaseSpec(n, theta));
            EXPECT_LT(testing::diagonal_distance(n, build_alg1(s).sequence(), theta), 1e-9) << n;
            EXPECT_LT(testing::diagonal_distance(n, build_theorem1(s).sequence(), theta), 1e-9) << n;
        }
    }
}

TEST(Builders, VerifyOnRandomTargets) {
    for (int n = 2; n <= 10; n++) {
        for (uint64_t seed = 0; seed < 3; seed++) {
            PhaseSpec spec(n, testing::random_angles(size_t{1} << n, 77 * n + seed, 0.0, 6.28));
            RotationSpectrum s = compute_alpha(spec);
            EXPECT_TRUE(verify(build_alg1(s), spec).passed) << n;
            EXPECT_TRUE(verify(build_theorem1(s), spec).passed) << n;
        }
    }
}

TEST(SBlock, Structure) {
    RotationSpectrum s = tagged_spectrum(4);
    auto block = s_block(s, 3);
    ASSERT_EQ(block.size(), 7u);
    EXPECT_EQ(block[0], Gate::cnot(1, 3));
    EXPECT_EQ(tag_of(block[1]), 0b1010u);
    EXPECT_EQ(block[6], Gate::cnot(2, 3));
    EXPECT_THROW(s_block(s, 1), InvalidInputError);
    EXPECT_THROW(s_block(s, 5), InvalidInputError);
}

TEST(SBlock, CommutesWithCnotToLastQubit) {
    for (int n = 3; n <= 6; n++) {
        for (int pm = 2; pm <= n - 1; pm++) {
            for (uint64_t seed = 0; seed < 10; seed++) {
                auto block = s_block(random_spectrum(n, 500 * n + 10 * pm + seed), pm);
                std::vector<Gate> before = block;
                before.push_back(Gate::cnot(pm, n));
                std::vector<Gate> after = {Gate::cnot(pm, n)};
                after.insert(after.end(), block.begin(), block.end());
                SimReport a = simulate_sequence(n, before);
                SimReport b = simulate_sequence(n, after);
                ASSERT_EQ(a.permutation, b.permutation);
                for (size_t k = 0; k < a.phase.size(); k++) {
                    ASSERT_NEAR(a.phase[k], b.phase[k], 1e-9);
                }
                if (n <= 5) {
                    ASSERT_LT(testing::unitary_distance(n, before, after), 1e-9);
                }
            }
        }
    }
}

}  // namespace
}  // namespace dsynth
