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

#ifndef UNISUP_CIRCUIT_DOCUMENT_H
#define UNISUP_CIRCUIT_DOCUMENT_H

#include <string>
#include <string_view>

#include "unisup/circuit.h"

namespace unisup {

constexpr int CIRCUIT_FORMAT_VERSION = 1;

/// Lossless JSON form of a circuit at either level:
///
///   {"version": 1, "n_qubits": 3, "level": "abstract",
///    "gates": [{"kind": "G", "target": 0, "p": "4/7"},
///              {"kind": "CG", "control": 0, "target": 1, "p": "2/3"}, ...]}
///
/// Probabilities are exact "num/den" strings, Ry angles are JSON numbers
/// printed with round-trip precision.
std::string emit_document(const Circuit &circuit);

/// Throws std::runtime_error on malformed input, including gates the
/// declared level does not admit.
Circuit parse_document(std::string_view text);

}  // namespace unisup

#endif
