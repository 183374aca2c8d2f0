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

#ifndef UNISUP_CIRCUIT_H
#define UNISUP_CIRCUIT_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unisup/rational.h"

namespace unisup {

/// Position in the register q[0..n-1]. q[0] is the most significant bit of a
/// basis index.
struct QubitIndex {
    std::uint32_t value = 0;

    constexpr QubitIndex() = default;
    constexpr explicit QubitIndex(std::uint32_t v) : value(v) {
    }

    friend constexpr auto operator<=>(const QubitIndex &, const QubitIndex &) = default;
};

enum class GateKind : std::uint8_t {
    H,
    X,
    Z,
    Ry,
    G,       // Ry(2 acos(sqrt(p))): |0> -> sqrt(p)|0> + sqrt(1-p)|1>.
    CG,      // G(p) on target when control is |1>.
    ZeroCH,  // H on target when control is |0>.
    CNOT,
    CZ,
};

std::string_view gate_kind_name(GateKind kind);

/// Inverse of gate_kind_name. Returns nullopt for unknown names.
std::optional<GateKind> gate_kind_from_name(std::string_view name);

bool is_two_qubit(GateKind kind);
bool has_prob(GateKind kind);

/// Gates the hardware-facing level is allowed to contain.
bool is_lowered_kind(GateKind kind);

/// A single gate with its operands.
///
/// `angle` is meaningful only for Ry, `prob` only for G and CG, and `control`
/// is engaged exactly for the two-qubit kinds. Construct through the named
/// factories; they check the per-gate invariants (control != target,
/// probability in [0, 1], finite angle).
struct Gate {
    GateKind kind = GateKind::H;
    QubitIndex target;
    std::optional<QubitIndex> control;
    double angle = 0;
    Rational prob;

    static Gate h(QubitIndex q);
    static Gate x(QubitIndex q);
    static Gate z(QubitIndex q);
    static Gate ry(double theta, QubitIndex q);
    static Gate g(Rational p, QubitIndex q);
    static Gate cg(Rational p, QubitIndex control, QubitIndex target);
    static Gate zero_ch(QubitIndex control, QubitIndex target);
    static Gate cnot(QubitIndex control, QubitIndex target);
    static Gate cz(QubitIndex control, QubitIndex target);

    /// Largest qubit index referenced by the gate.
    std::uint32_t max_qubit() const;

    /// Human readable, e.g. "CG(2/3) q[0] -> q[1]".
    std::string str() const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

enum class Level : std::uint8_t { Abstract, Lowered };

std::string_view level_name(Level level);
std::optional<Level> level_from_name(std::string_view name);

/// A frozen gate sequence over a fixed register. Produced by CircuitBuilder.
class Circuit {
   public:
    std::uint32_t num_qubits() const {
        return num_qubits_;
    }
    Level level() const {
        return level_;
    }
    std::span<const Gate> gates() const {
        return gates_;
    }
    std::size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }
    auto begin() const {
        return gates_.cbegin();
    }
    auto end() const {
        return gates_.cend();
    }

    std::string str() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

   private:
    friend class CircuitBuilder;
    Circuit(std::uint32_t num_qubits, Level level, std::vector<Gate> gates)
        : num_qubits_(num_qubits), level_(level), gates_(std::move(gates)) {
    }

    std::uint32_t num_qubits_;
    Level level_;
    std::vector<Gate> gates_;
};

/// Append-only builder. Every append is validated against the register width
/// and the target level, so a frozen Circuit always satisfies its invariants.
class CircuitBuilder {
   public:
    /// Throws std::invalid_argument if num_qubits == 0.
    CircuitBuilder(std::uint32_t num_qubits, Level level);

    /// Throws std::out_of_range for an operand outside the register and
    /// std::invalid_argument for a gate kind the level does not admit.
    CircuitBuilder &append(const Gate &gate);

    std::uint32_t num_qubits() const {
        return num_qubits_;
    }
    Level level() const {
        return level_;
    }
    std::size_t size() const {
        return gates_.size();
    }

    Circuit freeze() &&;

   private:
    std::uint32_t num_qubits_;
    Level level_;
    std::vector<Gate> gates_;
};

/// Number of gates of each kind present in the circuit.
std::map<GateKind, std::size_t> gate_histogram(const Circuit &circuit);

/// Number of two-qubit gates. Every two-qubit gate at either level costs
/// exactly one CNOT-equivalent entangler once lowered.
std::size_t entangler_count(const Circuit &circuit);

/// ASAP layer count: each gate sits one layer after the latest gate sharing
/// any of its qubits.
std::size_t depth(const Circuit &circuit);

}  // namespace unisup

#endif
