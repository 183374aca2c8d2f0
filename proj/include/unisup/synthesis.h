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

#ifndef UNISUP_SYNTHESIS_H
#define UNISUP_SYNTHESIS_H

#include <cstdint>
#include <vector>

#include "unisup/circuit.h"
#include "unisup/rational.h"

namespace unisup {

/// Synthesis of circuits preparing (1/sqrt(N)) * sum_{j<N} |j> from |0...0>.
///
/// Basis index convention throughout the library: q[0] is the most significant
/// bit, so index(j_0 j_1 ... j_{n-1}) = sum_k j_k 2^(n-1-k). This is the only
/// ordering under which the trailing Hadamard layer on q[n-xi..n-1] enumerates
/// the low 2^xi values of the consecutive range.
///
/// N is factored as 2^xi * M with M odd. The Hadamard layer handles 2^xi; the
/// odd part is written as M = 2^k_0 + ... + 2^k_{g-2} + 1 with
/// k_0 > ... > k_{g-2} > 0 and prepared on q[0..m-1] by one G rotation, g-2
/// controlled-G rotations and m-1 zero-controlled Hadamards.

struct Factorization {
    std::uint32_t xi;
    std::uint64_t odd;

    friend bool operator==(const Factorization &, const Factorization &) = default;
};

struct BinaryDecomposition {
    std::uint32_t weight;              // g = popcount(M)
    std::vector<std::uint32_t> exps;  // k_0 > k_1 > ... > k_{g-2} > 0

    friend bool operator==(const BinaryDecomposition &, const BinaryDecomposition &) = default;
};

struct SynthesisPlan {
    std::uint64_t N = 0;
    std::uint32_t n = 0;   // register width, max(1, ceil(log2 N))
    std::uint32_t xi = 0;  // Hadamard layer width
    std::uint64_t M = 0;   // odd cofactor
    std::uint32_t m = 0;   // ceil(log2 M)
    std::uint32_t g = 0;   // popcount(M)
    std::vector<std::uint32_t> k;
    std::vector<Rational> p;

    friend bool operator==(const SynthesisPlan &, const SynthesisPlan &) = default;
};

/// ceil(log2(x)) for x >= 1.
std::uint32_t ceil_log2(std::uint64_t x);

/// N = 2^xi * odd with xi maximal. Throws std::invalid_argument for N == 0.
Factorization factor(std::uint64_t N);

/// Throws std::invalid_argument unless M is odd and >= 3.
BinaryDecomposition binary_decompose(std::uint64_t M);

/// p_0 = 2^k_0 / M and p_i = 2^k_i / (M - sum_{l<i} 2^k_l): each rotation
/// splits off 2^k_i of the mass still remaining on its branch.
std::vector<Rational> rotation_params(std::uint64_t M);

/// Throws std::invalid_argument for N == 0.
SynthesisPlan plan(std::uint64_t N);

/// Abstract circuit for the plan. N == 1 yields an empty one-qubit circuit.
Circuit synthesize(const SynthesisPlan &plan);
Circuit synthesize(std::uint64_t N);

}  // namespace unisup

#endif
