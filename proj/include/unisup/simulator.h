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

#ifndef UNISUP_SIMULATOR_H
#define UNISUP_SIMULATOR_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "unisup/circuit.h"

namespace unisup {

/// Largest register the dense simulator accepts (2^24 amplitudes, 256 MiB).
constexpr std::uint32_t MAX_SIM_QUBITS = 24;

/// Dense statevector. Amplitude i belongs to the basis state whose bits, read
/// from q[0] (most significant) to q[n-1], spell i.
class StateVector {
   public:
    /// |0...0> on n qubits. Throws std::out_of_range unless 1 <= n <= 24.
    static StateVector zero(std::uint32_t num_qubits);

    std::uint32_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const std::complex<double>> amplitudes() const {
        return amps_;
    }
    std::complex<double> operator[](std::size_t index) const {
        return amps_[index];
    }
    std::size_t size() const {
        return amps_.size();
    }

    double norm_squared() const;

    /// Multiplies the state by the gate's unitary in place. Throws
    /// std::out_of_range for operands outside the register.
    void apply(const Gate &gate);

   private:
    explicit StateVector(std::uint32_t num_qubits);

    void apply_1q(std::uint32_t target, const std::complex<double> (&u)[2][2]);
    void apply_controlled_1q(std::uint32_t control, bool control_value, std::uint32_t target,
                             const std::complex<double> (&u)[2][2]);

    std::uint32_t num_qubits_;
    std::vector<std::complex<double>> amps_;
};

StateVector init_zero(std::uint32_t num_qubits);

StateVector apply(StateVector state, const Gate &gate);

/// Applies every gate of the circuit to |0...0>.
StateVector run(const Circuit &circuit);

/// max_i |amp_i - expected_i| with expected_i = 1/sqrt(N) for i < N and 0
/// otherwise. Throws std::invalid_argument if N is 0 or exceeds 2^n.
double uniform_distance(const StateVector &state, std::uint64_t N);

/// max_i |a_i - b_i|. Throws std::invalid_argument on a size mismatch.
double max_abs_diff(const StateVector &a, const StateVector &b);

}  // namespace unisup

#endif
