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

#include "unisup/lowering.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace unisup {

namespace {

void check_prob(const Rational &p) {
    if (!p.is_probability()) {
        throw std::invalid_argument("probability " + p.str() + " outside [0, 1]");
    }
}

double sqrt_prob(const Rational &p) {
    return std::sqrt(p.to_double());
}

}  // namespace

std::vector<Gate> lower_g(const Rational &p, QubitIndex target) {
    check_prob(p);
    return {Gate::ry(2 * std::acos(sqrt_prob(p)), target)};
}

std::vector<Gate> lower_cg(const Rational &p, QubitIndex control, QubitIndex target) {
    check_prob(p);
    double a = std::asin(sqrt_prob(p));
    return {
        Gate::ry(a, target),
        Gate::cnot(control, target),
        Gate::ry(-a, target),
    };
}

std::vector<Gate> lower_zero_ch(QubitIndex control, QubitIndex target) {
    constexpr double quarter = std::numbers::pi / 4;
    return {
        Gate::ry(-quarter, target),
        Gate::cz(control, target),
        Gate::z(target),
        Gate::ry(quarter, target),
    };
}

LoweredCircuit lower(const Circuit &circuit) {
    CircuitBuilder builder(circuit.num_qubits(), Level::Lowered);
    LoweringReport report;
    std::vector<bool> touched(circuit.num_qubits(), false);

    auto emit = [&](const std::vector<Gate> &gates) {
        for (const auto &gate : gates) {
            builder.append(gate);
            if (is_two_qubit(gate.kind)) {
                report.entanglers_emitted++;
            } else {
                report.single_qubit_gates_emitted++;
            }
        }
    };

    auto gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size(); i++) {
        const Gate &gate = gates[i];
        switch (gate.kind) {
            case GateKind::G:
                emit(lower_g(gate.prob, gate.target));
                break;
            case GateKind::CG:
                if (touched[gate.target.value]) {
                    throw std::invalid_argument(
                        "gate " + std::to_string(i) + " (" + gate.str() +
                        ") targets a qubit that is not guaranteed to be |0>");
                }
                emit(lower_cg(gate.prob, *gate.control, gate.target));
                report.assumptions_used.push_back({i});
                break;
            case GateKind::ZeroCH:
                emit(lower_zero_ch(*gate.control, gate.target));
                break;
            default:
                emit({gate});
                break;
        }
        touched[gate.target.value] = true;
    }
    return {std::move(builder).freeze(), std::move(report)};
}

}  // namespace unisup
