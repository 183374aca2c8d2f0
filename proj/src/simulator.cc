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

#include "unisup/simulator.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace unisup {

namespace {

using cd = std::complex<double>;
using Mat2 = cd[2][2];

constexpr double INV_SQRT2 = 0.70710678118654752440;

void g_matrix(const Rational &p, Mat2 &u) {
    // sqrt(1 - p) computed as sqrt((den - num) / den) to avoid cancellation.
    double a = std::sqrt(p.to_double());
    double b = std::sqrt(static_cast<double>(p.den() - p.num()) / static_cast<double>(p.den()));
    u[0][0] = a;
    u[0][1] = -b;
    u[1][0] = b;
    u[1][1] = a;
}

void ry_matrix(double theta, Mat2 &u) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    u[0][0] = c;
    u[0][1] = -s;
    u[1][0] = s;
    u[1][1] = c;
}

void h_matrix(Mat2 &u) {
    u[0][0] = INV_SQRT2;
    u[0][1] = INV_SQRT2;
    u[1][0] = INV_SQRT2;
    u[1][1] = -INV_SQRT2;
}

void x_matrix(Mat2 &u) {
    u[0][0] = 0;
    u[0][1] = 1;
    u[1][0] = 1;
    u[1][1] = 0;
}

}  // namespace

StateVector::StateVector(std::uint32_t num_qubits)
    : num_qubits_(num_qubits), amps_(std::size_t{1} << num_qubits, cd{0, 0}) {
    amps_[0] = 1;
}

StateVector StateVector::zero(std::uint32_t num_qubits) {
    if (num_qubits == 0 || num_qubits > MAX_SIM_QUBITS) {
        throw std::out_of_range(
            "qubit cap exceeded: " + std::to_string(num_qubits) + " not in [1, " + std::to_string(MAX_SIM_QUBITS) +
            "]");
    }
    return StateVector(num_qubits);
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::apply_1q(std::uint32_t target, const Mat2 &u) {
    const std::size_t stride = std::size_t{1} << (num_qubits_ - 1 - target);
    const std::size_t size = amps_.size();
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i++) {
            cd a = amps_[i];
            cd b = amps_[i + stride];
            amps_[i] = u[0][0] * a + u[0][1] * b;
            amps_[i + stride] = u[1][0] * a + u[1][1] * b;
        }
    }
}

void StateVector::apply_controlled_1q(std::uint32_t control, bool control_value, std::uint32_t target,
                                      const Mat2 &u) {
    const std::size_t stride = std::size_t{1} << (num_qubits_ - 1 - target);
    const std::size_t control_mask = std::size_t{1} << (num_qubits_ - 1 - control);
    const std::size_t size = amps_.size();
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i++) {
            if (((i & control_mask) != 0) != control_value) {
                continue;
            }
            cd a = amps_[i];
            cd b = amps_[i + stride];
            amps_[i] = u[0][0] * a + u[0][1] * b;
            amps_[i + stride] = u[1][0] * a + u[1][1] * b;
        }
    }
}

void StateVector::apply(const Gate &gate) {
    if (gate.max_qubit() >= num_qubits_) {
        throw std::out_of_range(
            "operand q[" + std::to_string(gate.max_qubit()) + "] out of range for " + std::to_string(num_qubits_) +
            "-qubit state");
    }
    const std::uint32_t t = gate.target.value;
    Mat2 u;
    switch (gate.kind) {
        case GateKind::H:
            h_matrix(u);
            apply_1q(t, u);
            return;
        case GateKind::X:
            x_matrix(u);
            apply_1q(t, u);
            return;
        case GateKind::Z: {
            const std::size_t mask = std::size_t{1} << (num_qubits_ - 1 - t);
            for (std::size_t i = 0; i < amps_.size(); i++) {
                if (i & mask) {
                    amps_[i] = -amps_[i];
                }
            }
            return;
        }
        case GateKind::Ry:
            ry_matrix(gate.angle, u);
            apply_1q(t, u);
            return;
        case GateKind::G:
            g_matrix(gate.prob, u);
            apply_1q(t, u);
            return;
        case GateKind::CG:
            g_matrix(gate.prob, u);
            apply_controlled_1q(gate.control->value, true, t, u);
            return;
        case GateKind::ZeroCH:
            h_matrix(u);
            apply_controlled_1q(gate.control->value, false, t, u);
            return;
        case GateKind::CNOT:
            x_matrix(u);
            apply_controlled_1q(gate.control->value, true, t, u);
            return;
        case GateKind::CZ: {
            const std::size_t mask =
                (std::size_t{1} << (num_qubits_ - 1 - t)) | (std::size_t{1} << (num_qubits_ - 1 - gate.control->value));
            for (std::size_t i = 0; i < amps_.size(); i++) {
                if ((i & mask) == mask) {
                    amps_[i] = -amps_[i];
                }
            }
            return;
        }
    }
    throw std::logic_error("unhandled gate kind");
}

StateVector init_zero(std::uint32_t num_qubits) {
    return StateVector::zero(num_qubits);
}

StateVector apply(StateVector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

StateVector run(const Circuit &circuit) {
    auto state = StateVector::zero(circuit.num_qubits());
    for (const auto &gate : circuit) {
        state.apply(gate);
    }
    return state;
}

double uniform_distance(const StateVector &state, std::uint64_t N) {
    if (N == 0 || N > state.size()) {
        throw std::invalid_argument(
            "N = " + std::to_string(N) + " does not fit a " + std::to_string(state.num_qubits()) + "-qubit state");
    }
    const double expected = 1.0 / std::sqrt(static_cast<double>(N));
    double worst = 0;
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++) {
        double want = i < N ? expected : 0.0;
        worst = std::max(worst, std::abs(amps[i] - want));
    }
    return worst;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("state size mismatch");
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace unisup
