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

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace unisup {

std::uint32_t ceil_log2(std::uint64_t x) {
    if (x == 0) {
        throw std::invalid_argument("ceil_log2(0)");
    }
    return static_cast<std::uint32_t>(std::bit_width(x - 1));
}

Factorization factor(std::uint64_t N) {
    if (N == 0) {
        throw std::invalid_argument("N must be positive");
    }
    auto xi = static_cast<std::uint32_t>(std::countr_zero(N));
    return {xi, N >> xi};
}

BinaryDecomposition binary_decompose(std::uint64_t M) {
    if (M < 3 || M % 2 == 0) {
        throw std::invalid_argument("expected an odd number >= 3, got " + std::to_string(M));
    }
    BinaryDecomposition result;
    result.weight = static_cast<std::uint32_t>(std::popcount(M));
    for (std::uint32_t bit = static_cast<std::uint32_t>(std::bit_width(M)) - 1; bit > 0; bit--) {
        if ((M >> bit) & 1) {
            result.exps.push_back(bit);
        }
    }
    return result;
}

std::vector<Rational> rotation_params(std::uint64_t M) {
    auto decomposition = binary_decompose(M);
    std::vector<Rational> p;
    std::uint64_t remaining = M;
    for (auto k : decomposition.exps) {
        std::uint64_t chunk = std::uint64_t{1} << k;
        p.emplace_back(chunk, remaining);
        remaining -= chunk;
    }
    return p;
}

SynthesisPlan plan(std::uint64_t N) {
    if (N == 0) {
        throw std::invalid_argument("N must be positive");
    }
    SynthesisPlan result;
    result.N = N;
    result.n = std::max<std::uint32_t>(1, ceil_log2(N));
    auto [xi, M] = factor(N);
    result.xi = xi;
    result.M = M;
    result.m = ceil_log2(M);
    result.g = static_cast<std::uint32_t>(std::popcount(M));
    if (M > 1) {
        result.k = binary_decompose(M).exps;
        result.p = rotation_params(M);
    }
    return result;
}

Circuit synthesize(const SynthesisPlan &plan) {
    CircuitBuilder builder(plan.n, Level::Abstract);
    auto q = [](std::uint64_t i) {
        return QubitIndex(static_cast<std::uint32_t>(i));
    };

    if (plan.M > 1) {
        const auto &k = plan.k;
        const auto &p = plan.p;
        const std::uint32_t m = plan.m;
        const std::size_t last = k.size() - 1;  // index g-2

        builder.append(Gate::g(p[0], q(0)));
        for (std::size_t i = 1; i <= last; i++) {
            builder.append(Gate::cg(p[i], q(m - k[i - 1] - 1), q(m - k[i] - 1)));
        }
        // The branch selected by the last rotation fans out over the k_{g-2}
        // qubits below it.
        for (std::uint32_t j = 0; j < k[last]; j++) {
            builder.append(Gate::zero_ch(q(m - k[last] - 1), q(m - k[last] + j)));
        }
        // Each earlier branch fans out over the qubits between its own target
        // and the next rotation's target, innermost branch first.
        for (std::size_t j = last; j >= 1; j--) {
            for (std::uint32_t l = 1; l <= k[j - 1] - k[j]; l++) {
                builder.append(Gate::zero_ch(q(m - k[j - 1] - 1), q(m - k[j] - l)));
            }
        }
    }

    for (std::uint32_t i = plan.n - plan.xi; i < plan.n; i++) {
        builder.append(Gate::h(q(i)));
    }
    return std::move(builder).freeze();
}

Circuit synthesize(std::uint64_t N) {
    return synthesize(plan(N));
}

}  // namespace unisup
