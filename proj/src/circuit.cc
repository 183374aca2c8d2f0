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

#include "unisup/circuit.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace unisup {

namespace {

struct KindInfo {
    GateKind kind;
    std::string_view name;
    bool two_qubit;
    bool lowered;
};

constexpr std::array<KindInfo, 9> KIND_TABLE{{
    {GateKind::H, "H", false, true},
    {GateKind::X, "X", false, true},
    {GateKind::Z, "Z", false, true},
    {GateKind::Ry, "Ry", false, true},
    {GateKind::G, "G", false, false},
    {GateKind::CG, "CG", true, false},
    {GateKind::ZeroCH, "ZeroCH", true, false},
    {GateKind::CNOT, "CNOT", true, true},
    {GateKind::CZ, "CZ", true, true},
}};

const KindInfo &info(GateKind kind) {
    return KIND_TABLE[static_cast<std::size_t>(kind)];
}

void check_distinct(QubitIndex control, QubitIndex target) {
    if (control == target) {
        throw std::invalid_argument("control equals target (q[" + std::to_string(target.value) + "])");
    }
}

void check_prob(const Rational &p) {
    if (!p.is_probability()) {
        throw std::invalid_argument("probability " + p.str() + " outside [0, 1]");
    }
}

Gate two_qubit(GateKind kind, QubitIndex control, QubitIndex target) {
    check_distinct(control, target);
    Gate gate;
    gate.kind = kind;
    gate.control = control;
    gate.target = target;
    return gate;
}

Gate one_qubit(GateKind kind, QubitIndex target) {
    Gate gate;
    gate.kind = kind;
    gate.target = target;
    return gate;
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
    return info(kind).name;
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (const auto &entry : KIND_TABLE) {
        if (entry.name == name) {
            return entry.kind;
        }
    }
    return std::nullopt;
}

bool is_two_qubit(GateKind kind) {
    return info(kind).two_qubit;
}

bool has_prob(GateKind kind) {
    return kind == GateKind::G || kind == GateKind::CG;
}

bool is_lowered_kind(GateKind kind) {
    return info(kind).lowered;
}

Gate Gate::h(QubitIndex q) {
    return one_qubit(GateKind::H, q);
}

Gate Gate::x(QubitIndex q) {
    return one_qubit(GateKind::X, q);
}

Gate Gate::z(QubitIndex q) {
    return one_qubit(GateKind::Z, q);
}

Gate Gate::ry(double theta, QubitIndex q) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rotation angle is not finite");
    }
    Gate gate = one_qubit(GateKind::Ry, q);
    gate.angle = theta;
    return gate;
}

Gate Gate::g(Rational p, QubitIndex q) {
    check_prob(p);
    Gate gate = one_qubit(GateKind::G, q);
    gate.prob = p;
    return gate;
}

Gate Gate::cg(Rational p, QubitIndex control, QubitIndex target) {
    check_prob(p);
    Gate gate = two_qubit(GateKind::CG, control, target);
    gate.prob = p;
    return gate;
}

Gate Gate::zero_ch(QubitIndex control, QubitIndex target) {
    return two_qubit(GateKind::ZeroCH, control, target);
}

Gate Gate::cnot(QubitIndex control, QubitIndex target) {
    return two_qubit(GateKind::CNOT, control, target);
}

Gate Gate::cz(QubitIndex control, QubitIndex target) {
    return two_qubit(GateKind::CZ, control, target);
}

std::uint32_t Gate::max_qubit() const {
    return control ? std::max(control->value, target.value) : target.value;
}

std::string Gate::str() const {
    std::ostringstream out;
    out << gate_kind_name(kind);
    if (kind == GateKind::Ry) {
        out << "(" << angle << ")";
    } else if (has_prob(kind)) {
        out << "(" << prob.str() << ")";
    }
    if (control) {
        out << " q[" << control->value << "] ->";
    }
    out << " q[" << target.value << "]";
    return out.str();
}

std::string_view level_name(Level level) {
    return level == Level::Abstract ? "abstract" : "lowered";
}

std::optional<Level> level_from_name(std::string_view name) {
    if (name == "abstract") {
        return Level::Abstract;
    }
    if (name == "lowered") {
        return Level::Lowered;
    }
    return std::nullopt;
}

std::string Circuit::str() const {
    std::ostringstream out;
    out << "circuit(" << num_qubits_ << " qubits, " << level_name(level_) << ")\n";
    for (const auto &gate : gates_) {
        out << "  " << gate.str() << "\n";
    }
    return out.str();
}

CircuitBuilder::CircuitBuilder(std::uint32_t num_qubits, Level level) : num_qubits_(num_qubits), level_(level) {
    if (num_qubits == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
}

CircuitBuilder &CircuitBuilder::append(const Gate &gate) {
    if (gate.max_qubit() >= num_qubits_) {
        throw std::out_of_range(
            "operand q[" + std::to_string(gate.max_qubit()) + "] out of range for " + std::to_string(num_qubits_) +
            "-qubit circuit");
    }
    if (gate.control.has_value() != is_two_qubit(gate.kind)) {
        throw std::invalid_argument("gate " + std::string(gate_kind_name(gate.kind)) + " has wrong operand count");
    }
    if (gate.control) {
        check_distinct(*gate.control, gate.target);
    }
    if (has_prob(gate.kind)) {
        check_prob(gate.prob);
    }
    if (gate.kind == GateKind::Ry && !std::isfinite(gate.angle)) {
        throw std::invalid_argument("rotation angle is not finite");
    }
    if (level_ == Level::Lowered && !is_lowered_kind(gate.kind)) {
        throw std::invalid_argument(
            "gate " + std::string(gate_kind_name(gate.kind)) + " is not allowed in a lowered circuit");
    }
    gates_.push_back(gate);
    return *this;
}

Circuit CircuitBuilder::freeze() && {
    return Circuit(num_qubits_, level_, std::move(gates_));
}

std::map<GateKind, std::size_t> gate_histogram(const Circuit &circuit) {
    std::map<GateKind, std::size_t> counts;
    for (const auto &gate : circuit) {
        counts[gate.kind]++;
    }
    return counts;
}

std::size_t entangler_count(const Circuit &circuit) {
    return std::count_if(circuit.begin(), circuit.end(), [](const Gate &g) {
        return is_two_qubit(g.kind);
    });
}

std::size_t depth(const Circuit &circuit) {
    std::vector<std::size_t> layer(circuit.num_qubits(), 0);
    std::size_t result = 0;
    for (const auto &gate : circuit) {
        std::size_t d = layer[gate.target.value];
        if (gate.control) {
            d = std::max(d, layer[gate.control->value]);
        }
        d++;
        layer[gate.target.value] = d;
        if (gate.control) {
            layer[gate.control->value] = d;
        }
        result = std::max(result, d);
    }
    return result;
}

}  // namespace unisup
