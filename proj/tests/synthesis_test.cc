// Copyright 2026 The unisup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unisup/synthesis.h"

#include <bit>
#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "oracle.h"
#include "unisup/lowering.h"
#include "unisup/simulator.h"

using namespace unisup;

namespace {

QubitIndex q(std::uint32_t i) {
    return QubitIndex(i);
}

double oracle_uniform_distance(const std::vector<oracle::cd> &state, std::uint64_t N) {
    double worst = 0;
    for (std::size_t i = 0; i < state.size(); i++) {
        double want = i < N ? 1 / std::sqrt(static_cast<double>(N)) : 0.0;
        worst = std::max(worst, std::abs(state[i] - want));
    }
    return worst;
}

Circuit m7_with_second_prob(Rational p1) {
    CircuitBuilder b(3, Level::Abstract);
    b.append(Gate::g(Rational(4, 7), q(0)));
    b.append(Gate::cg(p1, q(0), q(1)));
    b.append(Gate::zero_ch(q(1), q(2)));
    b.append(Gate::zero_ch(q(0), q(1)));
    return std::move(b).freeze();
}

}  // namespace

TEST(synthesis, ceil_log2) {
    EXPECT_EQ(ceil_log2(1), 0u);
    EXPECT_EQ(ceil_log2(2), 1u);
    EXPECT_EQ(ceil_log2(3), 2u);
    EXPECT_EQ(ceil_log2(4), 2u);
    EXPECT_EQ(ceil_log2(5), 3u);
    EXPECT_EQ(ceil_log2(std::uint64_t{1} << 40), 40u);
    EXPECT_EQ(ceil_log2((std::uint64_t{1} << 40) + 1), 41u);
}

TEST(synthesis, factor) {
    EXPECT_EQ(factor(12), (Factorization{2, 3}));
    EXPECT_EQ(factor(7), (Factorization{0, 7}));
    EXPECT_EQ(factor(16), (Factorization{4, 1}));
    EXPECT_EQ(factor(1), (Factorization{0, 1}));
    EXPECT_THROW(factor(0), std::invalid_argument);
}

TEST(synthesis, binary_decompose) {
    EXPECT_EQ(binary_decompose(7), (BinaryDecomposition{3, {2, 1}}));
    EXPECT_EQ(binary_decompose(29), (BinaryDecomposition{4, {4, 3, 2}}));
    EXPECT_EQ(binary_decompose(3), (BinaryDecomposition{2, {1}}));
    EXPECT_THROW(binary_decompose(8), std::invalid_argument);
    EXPECT_THROW(binary_decompose(1), std::invalid_argument);
    EXPECT_THROW(binary_decompose(0), std::invalid_argument);
}

TEST(synthesis, binary_decompose_reconstructs) {
    for (std::uint64_t M = 3; M < 5000; M += 2) {
        auto d = binary_decompose(M);
        std::uint64_t sum = 1;
        for (std::size_t i = 0; i < d.exps.size(); i++) {
            EXPECT_GT(d.exps[i], 0u);
            if (i > 0) {
                EXPECT_LT(d.exps[i], d.exps[i - 1]);
            }
            sum += std::uint64_t{1} << d.exps[i];
        }
        EXPECT_EQ(sum, M);
        EXPECT_EQ(d.weight, static_cast<std::uint32_t>(std::popcount(M)));
        EXPECT_EQ(d.exps.size() + 1, d.weight);
    }
}

TEST(synthesis, rotation_params) {
    EXPECT_EQ(rotation_params(3), (std::vector<Rational>{Rational(2, 3)}));
    EXPECT_EQ(rotation_params(5), (std::vector<Rational>{Rational(4, 5)}));
    EXPECT_EQ(rotation_params(7), (std::vector<Rational>{Rational(4, 7), Rational(2, 3)}));
}

TEST(synthesis, rotation_param_last_denominator) {
    for (std::uint64_t M = 5; M < 2000; M += 2) {
        auto p = rotation_params(M);
        auto k = binary_decompose(M).exps;
        Rational expect(std::uint64_t{1} << k.back(), (std::uint64_t{1} << k.back()) + 1);
        EXPECT_EQ(p.back(), expect) << M;
    }
}

// Only the residual-mass reading (sum from l = 0) makes the M = 7 circuit
// uniform; the literal sum from l = 1 gives p_1 = 2/7.
TEST(synthesis, m7_second_probability_oracle) {
    EXPECT_LT(oracle_uniform_distance(oracle::circuit_state(m7_with_second_prob(Rational(2, 3))), 7), 1e-12);
    EXPECT_GT(oracle_uniform_distance(oracle::circuit_state(m7_with_second_prob(Rational(2, 7))), 7), 0.1);

    std::set<std::pair<std::uint64_t, std::uint64_t>> uniform;
    for (std::uint64_t den = 1; den <= 24; den++) {
        for (std::uint64_t num = 0; num <= den; num++) {
            Rational p(num, den);
            if (oracle_uniform_distance(oracle::circuit_state(m7_with_second_prob(p)), 7) < 1e-12) {
                uniform.insert({p.num(), p.den()});
            }
        }
    }
    EXPECT_EQ(uniform, (std::set<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}}));
}

TEST(synthesis, n1_is_empty_one_qubit) {
    Circuit c = synthesize(1);
    EXPECT_EQ(c.num_qubits(), 1u);
    EXPECT_TRUE(c.empty());
}

TEST(synthesis, n2_single_hadamard) {
    Circuit c = synthesize(2);
    EXPECT_EQ(c.num_qubits(), 1u);
    EXPECT_EQ(std::vector<Gate>(c.begin(), c.end()), std::vector<Gate>{Gate::h(q(0))});
}

TEST(synthesis, n7_gate_list) {
    Circuit c = synthesize(7);
    std::vector<Gate> expected{
        Gate::g(Rational(4, 7), q(0)),
        Gate::cg(Rational(2, 3), q(0), q(1)),
        Gate::zero_ch(q(1), q(2)),
        Gate::zero_ch(q(0), q(1)),
    };
    EXPECT_EQ(c.num_qubits(), 3u);
    EXPECT_EQ(c.level(), Level::Abstract);
    EXPECT_EQ(std::vector<Gate>(c.begin(), c.end()), expected);
    EXPECT_LT(oracle_uniform_distance(oracle::circuit_state(c), 7), 1e-12);
}

TEST(synthesis, n12_odd_part_then_hadamards) {
    Circuit c = synthesize(12);
    std::vector<Gate> expected{
        Gate::g(Rational(2, 3), q(0)),
        Gate::zero_ch(q(0), q(1)),
        Gate::h(q(2)),
        Gate::h(q(3)),
    };
    EXPECT_EQ(c.num_qubits(), 4u);
    EXPECT_EQ(std::vector<Gate>(c.begin(), c.end()), expected);
    EXPECT_LT(oracle_uniform_distance(oracle::circuit_state(c), 12), 1e-12);
}

TEST(synthesis, zero_rejected) {
    EXPECT_THROW(synthesize(0), std::invalid_argument);
    EXPECT_THROW(plan(0), std::invalid_argument);
}

TEST(synthesis, plan_examples) {
    SynthesisPlan p7 = plan(7);
    EXPECT_EQ(p7, (SynthesisPlan{7, 3, 0, 7, 3, 3, {2, 1}, {Rational(4, 7), Rational(2, 3)}}));

    SynthesisPlan p16 = plan(16);
    EXPECT_EQ(p16, (SynthesisPlan{16, 4, 4, 1, 0, 1, {}, {}}));

    SynthesisPlan p30 = plan(30);
    EXPECT_EQ(p30, (SynthesisPlan{30, 5, 1, 15, 4, 4, {3, 2, 1}, {Rational(8, 15), Rational(4, 7), Rational(2, 3)}}));
}

TEST(synthesis, plan_invariants) {
    for (std::uint64_t N = 1; N <= 5000; N++) {
        SynthesisPlan p = plan(N);
        EXPECT_EQ((std::uint64_t{1} << p.xi) * p.M, N);
        EXPECT_EQ(p.M % 2, 1u);
        EXPECT_LE(p.xi, p.n);
        EXPECT_EQ(p.n, std::max<std::uint32_t>(1, ceil_log2(N)));
        if (p.M > 1) {
            EXPECT_EQ(p.n, p.xi + p.m) << N;
            EXPECT_EQ(p.k.size() + 1, p.g);
            EXPECT_EQ(p.m, p.k[0] + 1) << N;
            for (const auto &prob : p.p) {
                EXPECT_GT(2 * prob.num(), prob.den()) << N;
                EXPECT_LT(prob.num(), prob.den()) << N;
            }
        } else {
            EXPECT_TRUE(p.k.empty());
            EXPECT_TRUE(p.p.empty());
        }
        EXPECT_EQ(synthesize(p), synthesize(N));
    }
}

TEST(synthesis, gate_count_structure) {
    for (std::uint64_t N = 2; N <= 4096; N++) {
        SynthesisPlan p = plan(N);
        auto h = gate_histogram(synthesize(p));
        if (p.g >= 2) {
            EXPECT_EQ(h[GateKind::G], 1u) << N;
            EXPECT_EQ(h[GateKind::CG], p.g - 2) << N;
            EXPECT_EQ(h[GateKind::ZeroCH], p.m - 1) << N;
            EXPECT_EQ(h[GateKind::H], p.xi) << N;
        } else {
            EXPECT_EQ(h, (std::map<GateKind, std::size_t>{{GateKind::H, p.xi}})) << N;
        }
    }
}

TEST(synthesis, cg_targets_are_fresh) {
    for (std::uint64_t N = 2; N <= 4096; N++) {
        Circuit c = synthesize(N);
        std::set<std::uint32_t> targeted;
        for (const auto &gate : c) {
            if (gate.kind == GateKind::CG) {
                EXPECT_EQ(targeted.count(gate.target.value), 0u) << N;
            }
            targeted.insert(gate.target.value);
        }
    }
}

TEST(synthesis, uniform_small_n_dense_oracle) {
    for (std::uint64_t N = 1; N <= 64; N++) {
        EXPECT_LT(oracle_uniform_distance(oracle::circuit_state(synthesize(N)), N), 1e-12) << N;
    }
}

TEST(synthesis, hadamard_layer_is_least_significant) {
    // With xi = 2 the last two qubits must carry the low bits: indices 0..11.
    StateVector s = run(synthesize(12));
    for (std::size_t i = 0; i < 16; i++) {
        double want = i < 12 ? 1 / std::sqrt(12.0) : 0.0;
        EXPECT_NEAR(s[i].real(), want, 1e-12) << i;
    }
}

TEST(synthesis, large_n_structure) {
    SynthesisPlan p = plan((std::uint64_t{1} << 40) - 1);
    EXPECT_EQ(p.n, 40u);
    EXPECT_EQ(p.g, 40u);
    Circuit c = synthesize(p);
    EXPECT_EQ(entangler_count(c), 77u);
    EXPECT_EQ(entangler_count(lower(c).circuit), 77u);
}
