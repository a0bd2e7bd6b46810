// Copyright 2026 The commq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMMQ_CIRCUIT_JSON_H
#define COMMQ_CIRCUIT_JSON_H

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "commq/circuit.h"

namespace commq {

// Circuit file format (UTF-8 JSON):
//
//   {"qubits": 3,
//    "roles": ["input", "zero", {"state": [[0.7071, 0], [0.5, 0.5]]}],
//    "outputs": [2], "postselect": [1],
//    "gates": [{"type": "H", "q": 0},
//              {"type": "R", "q": 1, "sign": -1, "k": 3},
//              {"type": "CZ", "a": 0, "b": 1},
//              {"type": "X", "q": 2},
//              {"type": "CNOT", "control": 0, "target": 2},
//              {"type": "CR", "control": 0, "target": 2, "sign": 1, "k": 2},
//              {"type": "U", "qubits": [0, 1], "matrix": [[re, im], ...]}]}
//
// "U" matrices are row-major and list-ordered over "qubits".

nlohmann::json circuit_to_json(const Circuit &circuit);
nlohmann::json gate_to_json(const Gate &gate);

/// Throws ParseError with a JSON pointer for missing or ill-typed fields, and
/// ValidationError if the decoded circuit is structurally invalid.
Circuit circuit_from_json(const nlohmann::json &j);
Gate gate_from_json(const nlohmann::json &j, const std::string &where = "");

std::string serialize(const Circuit &circuit);
/// Throws ParseError (with byte offset) on malformed text.
Circuit deserialize(std::string_view text);

Circuit load_circuit(const std::string &path);
void save_circuit(const Circuit &circuit, const std::string &path);

}  // namespace commq

#endif
