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

#ifndef UNISUP_LOWERING_H
#define UNISUP_LOWERING_H

#include <cstddef>
#include <vector>

#include "unisup/circuit.h"
#include "unisup/rational.h"

namespace unisup {

// Rotation convention: Ry(t) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]].
//
// G(p) is exactly Ry(2 acos(sqrt(p))).
//
// CG(p), assuming the target is |0> on every branch:
//     Ry(a) t; CNOT c->t; Ry(-a) t        with a = asin(sqrt(p))
// Control |0>: Ry(-a) Ry(a) = I, exact for any target state.
// Control |1>: Ry(-a) X Ry(a) |0> = sin(a)|0> + cos(a)|1> = sqrt(p)|0> + sqrt(1-p)|1>.
// On a target already in |1> the control-|1> branch is wrong, so the
// construction is only used when the target has not been acted on before.
//
// ZeroCH, exact on all four basis states:
//     Ry(-pi/4) t; CZ c,t; Z t; Ry(pi/4) t
// H = Ry(pi/4) Z Ry(-pi/4), and CZ (I x Z) applies Z when the control is |0>
// and Z Z = I when it is |1>. Conjugating by Ry(pi/4) turns that zero-controlled
// Z into the zero-controlled H, with a single entangler.

/// Record of a CG lowered under the target-in-|0> precondition.
struct LoweringAssumption {
    std::size_t gate_index;  // index into the abstract circuit

    friend bool operator==(const LoweringAssumption &, const LoweringAssumption &) = default;
};

struct LoweringReport {
    std::size_t entanglers_emitted = 0;
    std::size_t single_qubit_gates_emitted = 0;
    std::vector<LoweringAssumption> assumptions_used;  // each one is "target-in-|0>"
};

struct LoweredCircuit {
    Circuit circuit;
    LoweringReport report;
};

/// Throws std::invalid_argument if p is not in [0, 1].
std::vector<Gate> lower_g(const Rational &p, QubitIndex target);

/// Valid only when the target is |0> in every branch. Throws
/// std::invalid_argument if p is not in [0, 1] or control == target.
std::vector<Gate> lower_cg(const Rational &p, QubitIndex control, QubitIndex target);

/// Exact. Throws std::invalid_argument if control == target.
std::vector<Gate> lower_zero_ch(QubitIndex control, QubitIndex target);

/// Rewrites G, CG and ZeroCH into {H, X, Z, Ry, CNOT, CZ}; gates already in
/// that set pass through unchanged.
///
/// Throws std::invalid_argument if a CG targets a qubit that an earlier gate
/// already acted on, since its target is then not guaranteed to be |0>.
LoweredCircuit lower(const Circuit &circuit);

}  // namespace unisup

#endif
