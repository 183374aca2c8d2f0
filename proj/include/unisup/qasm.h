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

#ifndef UNISUP_QASM_H
#define UNISUP_QASM_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "unisup/circuit.h"

namespace unisup {

/// Error raised by parse_qasm. Positions are 1-based.
class QasmError : public std::runtime_error {
   public:
    QasmError(std::size_t line, std::size_t column, const std::string &message);

    std::size_t line() const {
        return line_;
    }
    std::size_t column() const {
        return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
};

/// OpenQASM 2.0 text for a lowered circuit, using only h, x, z, ry, cx, cz on
/// a single register `q`. Angles are printed with 17 significant digits, so
/// parsing the output recovers every angle bit for bit.
///
/// Throws std::invalid_argument for an abstract-level circuit.
std::string emit_qasm(const Circuit &circuit);

/// Parses the subset emit_qasm produces. Accepts `//` comments, an optional
/// `include "qelib1.inc";`, and angle expressions built from numbers, `pi`,
/// parentheses and + - * /. Anything else, including gates outside the
/// subset, raises QasmError at the offending token.
Circuit parse_qasm(std::string_view text);

}  // namespace unisup

#endif
