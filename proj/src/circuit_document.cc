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

#include "unisup/circuit_document.h"

#include <stdexcept>

#include "json.hpp"

namespace unisup {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string &why) {
    throw std::runtime_error("malformed circuit document: " + why);
}

QubitIndex qubit_field(const json &gate, const char *key) {
    if (!gate.contains(key) || !gate[key].is_number_unsigned()) {
        bad(std::string("gate field '") + key + "' missing or not a qubit index");
    }
    auto value = gate[key].get<std::uint64_t>();
    if (value > UINT32_MAX) {
        bad(std::string("gate field '") + key + "' too large");
    }
    return QubitIndex(static_cast<std::uint32_t>(value));
}

Gate parse_gate(const json &entry) {
    if (!entry.is_object() || !entry.contains("kind") || !entry["kind"].is_string()) {
        bad("gate entry without a 'kind'");
    }
    const auto &name = entry["kind"].get_ref<const std::string &>();
    auto kind = gate_kind_from_name(name);
    if (!kind) {
        bad("unknown gate kind '" + name + "'");
    }
    Gate gate;
    gate.kind = *kind;
    gate.target = qubit_field(entry, "target");
    if (is_two_qubit(*kind)) {
        gate.control = qubit_field(entry, "control");
    } else if (entry.contains("control")) {
        bad("single-qubit gate " + name + " has a control");
    }
    if (*kind == GateKind::Ry) {
        if (!entry.contains("angle") || !entry["angle"].is_number()) {
            bad("Ry gate without a numeric 'angle'");
        }
        gate.angle = entry["angle"].get<double>();
    }
    if (has_prob(*kind)) {
        if (!entry.contains("p") || !entry["p"].is_string()) {
            bad(name + " gate without a rational 'p'");
        }
        try {
            gate.prob = Rational::parse(entry["p"].get_ref<const std::string &>());
        } catch (const std::invalid_argument &e) {
            bad(e.what());
        }
    }
    return gate;
}

}  // namespace

std::string emit_document(const Circuit &circuit) {
    json doc;
    doc["version"] = CIRCUIT_FORMAT_VERSION;
    doc["n_qubits"] = circuit.num_qubits();
    doc["level"] = level_name(circuit.level());
    json gates = json::array();
    for (const auto &gate : circuit) {
        json entry;
        entry["kind"] = gate_kind_name(gate.kind);
        if (gate.control) {
            entry["control"] = gate.control->value;
        }
        entry["target"] = gate.target.value;
        if (gate.kind == GateKind::Ry) {
            entry["angle"] = gate.angle;
        }
        if (has_prob(gate.kind)) {
            entry["p"] = gate.prob.str();
        }
        gates.push_back(std::move(entry));
    }
    doc["gates"] = std::move(gates);
    return doc.dump(2) + "\n";
}

Circuit parse_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        bad(e.what());
    }
    if (!doc.is_object()) {
        bad("top level is not an object");
    }
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<int>() != CIRCUIT_FORMAT_VERSION) {
        throw std::runtime_error("circuit document version mismatch");
    }
    if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_unsigned()) {
        bad("missing 'n_qubits'");
    }
    if (!doc.contains("level") || !doc["level"].is_string()) {
        bad("missing 'level'");
    }
    auto level = level_from_name(doc["level"].get_ref<const std::string &>());
    if (!level) {
        bad("unknown level '" + doc["level"].get<std::string>() + "'");
    }
    if (!doc.contains("gates") || !doc["gates"].is_array()) {
        bad("missing 'gates' list");
    }
    auto width = doc["n_qubits"].get<std::uint64_t>();
    if (width == 0 || width > UINT32_MAX) {
        bad("n_qubits out of range");
    }
    CircuitBuilder builder(static_cast<std::uint32_t>(width), *level);
    std::size_t index = 0;
    for (const auto &entry : doc["gates"]) {
        try {
            builder.append(parse_gate(entry));
        } catch (const std::logic_error &e) {
            bad("gate " + std::to_string(index) + ": " + e.what());
        }
        index++;
    }
    return std::move(builder).freeze();
}

}  // namespace unisup
