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

#include "commq/circuit_json.h"

#include <fstream>
#include <sstream>

#include "commq/error.h"

namespace commq {

using nlohmann::json;

namespace {

json complex_to_json(Complex c) {
    return json::array({c.real(), c.imag()});
}

const json &field(const json &j, const char *key, const std::string &where) {
    if (!j.is_object()) {
        throw ParseError("expected an object", where);
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string("missing field '") + key + "'", where);
    }
    return *it;
}

std::int64_t get_int(const json &j, const char *key, const std::string &where) {
    const auto &v = field(j, key, where);
    if (!v.is_number_integer()) {
        throw ParseError(std::string("field '") + key + "' must be an integer", where + "/" + key);
    }
    return v.get<std::int64_t>();
}

Qubit get_qubit(const json &j, const char *key, const std::string &where) {
    auto v = get_int(j, key, where);
    if (v < 0 || v > std::int64_t{UINT32_MAX}) {
        throw ParseError(std::string("field '") + key + "' must be a non-negative qubit index", where + "/" + key);
    }
    return static_cast<Qubit>(v);
}

int get_sign(const json &j, const std::string &where) {
    auto s = get_int(j, "sign", where);
    if (s != 1 && s != -1) {
        throw ParseError("sign must be 1 or -1", where + "/sign");
    }
    return static_cast<int>(s);
}

int get_level(const json &j, const std::string &where) {
    auto k = get_int(j, "k", where);
    if (k < 0 || k > kMaxPhaseLevel) {
        throw ParseError("k must be in [0, 62]", where + "/k");
    }
    return static_cast<int>(k);
}

Complex complex_from_json(const json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("expected [re, im]", where);
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Qubit> qubit_list(const json &j, const std::string &where) {
    if (!j.is_array()) {
        throw ParseError("expected an array of qubit indices", where);
    }
    std::vector<Qubit> out;
    for (std::size_t i = 0; i < j.size(); i++) {
        if (!j[i].is_number_integer() || j[i].get<std::int64_t>() < 0) {
            throw ParseError("expected a non-negative integer", where + "/" + std::to_string(i));
        }
        out.push_back(j[i].get<Qubit>());
    }
    return out;
}

}  // namespace

json gate_to_json(const Gate &gate) {
    json j;
    j["type"] = std::string(gate.type_name());
    if (auto g = gate.get_if<gates::H>()) {
        j["q"] = g->q;
    } else if (auto g = gate.get_if<gates::PhaseShift>()) {
        j["q"] = g->q;
        j["sign"] = g->sign;
        j["k"] = g->level;
    } else if (auto g = gate.get_if<gates::CZ>()) {
        j["a"] = g->a;
        j["b"] = g->b;
    } else if (auto g = gate.get_if<gates::X>()) {
        j["q"] = g->q;
    } else if (auto g = gate.get_if<gates::CNOT>()) {
        j["control"] = g->control;
        j["target"] = g->target;
    } else if (auto g = gate.get_if<gates::ControlledPhase>()) {
        j["control"] = g->control;
        j["target"] = g->target;
        j["sign"] = g->sign;
        j["k"] = g->level;
    } else if (auto g = gate.get_if<gates::Composite>()) {
        j["qubits"] = g->qubits;
        json m = json::array();
        for (Eigen::Index r = 0; r < g->matrix.rows(); r++) {
            for (Eigen::Index c = 0; c < g->matrix.cols(); c++) {
                m.push_back(complex_to_json(g->matrix(r, c)));
            }
        }
        j["matrix"] = std::move(m);
    }
    return j;
}

json circuit_to_json(const Circuit &circuit) {
    json j;
    j["qubits"] = circuit.n_qubits();
    json roles = json::array();
    for (const auto &r : circuit.roles()) {
        switch (r.kind()) {
            case RoleKind::kInput:
                roles.push_back("input");
                break;
            case RoleKind::kZero:
                roles.push_back("zero");
                break;
            case RoleKind::kProduct:
                roles.push_back({{"state", json::array({complex_to_json(r.state()[0]), complex_to_json(r.state()[1])})}});
                break;
        }
    }
    j["roles"] = std::move(roles);
    j["outputs"] = circuit.outputs();
    j["postselect"] = circuit.postselect();
    json gs = json::array();
    for (const auto &g : circuit.gates()) {
        gs.push_back(gate_to_json(g));
    }
    j["gates"] = std::move(gs);
    return j;
}

Gate gate_from_json(const json &j, const std::string &where) {
    const auto &type_field = field(j, "type", where);
    if (!type_field.is_string()) {
        throw ParseError("gate type must be a string", where + "/type");
    }
    auto type = type_field.get<std::string>();
    if (type == "H") {
        return Gate::h(get_qubit(j, "q", where));
    }
    if (type == "R") {
        return Gate::phase(get_qubit(j, "q", where), get_sign(j, where), get_level(j, where));
    }
    if (type == "CZ") {
        return Gate::cz(get_qubit(j, "a", where), get_qubit(j, "b", where));
    }
    if (type == "X") {
        return Gate::x(get_qubit(j, "q", where));
    }
    if (type == "CNOT") {
        return Gate::cnot(get_qubit(j, "control", where), get_qubit(j, "target", where));
    }
    if (type == "CR") {
        return Gate::cphase(
            get_qubit(j, "control", where), get_qubit(j, "target", where), get_sign(j, where), get_level(j, where));
    }
    if (type == "U") {
        auto qs = qubit_list(field(j, "qubits", where), where + "/qubits");
        if (qs.empty() || qs.size() > 16) {
            throw ParseError("composite gate needs 1 to 16 qubits", where + "/qubits");
        }
        const auto &m = field(j, "matrix", where);
        std::size_t dim = std::size_t{1} << qs.size();
        if (!m.is_array() || m.size() != dim * dim) {
            throw ParseError("matrix must list " + std::to_string(dim * dim) + " entries", where + "/matrix");
        }
        Matrix mat(dim, dim);
        for (std::size_t i = 0; i < dim * dim; i++) {
            mat(i / dim, i % dim) = complex_from_json(m[i], where + "/matrix/" + std::to_string(i));
        }
        return Gate::composite(std::move(qs), std::move(mat));
    }
    throw ParseError("unknown gate type '" + type + "'", where + "/type");
}

Circuit circuit_from_json(const json &j) {
    auto n = get_int(j, "qubits", "");
    if (n < 0) {
        throw ParseError("qubit count must be non-negative", "/qubits");
    }
    Circuit c(static_cast<std::size_t>(n));
    const auto &roles = field(j, "roles", "");
    if (!roles.is_array() || roles.size() != static_cast<std::size_t>(n)) {
        throw ParseError("roles must list one role per qubit", "/roles");
    }
    for (std::size_t q = 0; q < roles.size(); q++) {
        std::string where = "/roles/" + std::to_string(q);
        const auto &r = roles[q];
        if (r.is_string() && r.get<std::string>() == "input") {
            c.set_role(static_cast<Qubit>(q), QubitRole::input());
        } else if (r.is_string() && r.get<std::string>() == "zero") {
            c.set_role(static_cast<Qubit>(q), QubitRole::zero());
        } else if (r.is_object()) {
            const auto &s = field(r, "state", where);
            if (!s.is_array() || s.size() != 2) {
                throw ParseError("state must be two amplitudes", where + "/state");
            }
            QubitState st{complex_from_json(s[0], where + "/state/0"), complex_from_json(s[1], where + "/state/1")};
            c.set_role(static_cast<Qubit>(q), QubitRole::product(st));
        } else {
            throw ParseError("role must be \"input\", \"zero\" or {\"state\": ...}", where);
        }
    }
    c.set_outputs(j.contains("outputs") ? qubit_list(j["outputs"], "/outputs") : std::vector<Qubit>{});
    c.set_postselect(j.contains("postselect") ? qubit_list(j["postselect"], "/postselect") : std::vector<Qubit>{});
    const auto &gs = field(j, "gates", "");
    if (!gs.is_array()) {
        throw ParseError("gates must be an array", "/gates");
    }
    for (std::size_t i = 0; i < gs.size(); i++) {
        c.append(gate_from_json(gs[i], "/gates/" + std::to_string(i)));
    }
    require_valid(c);
    return c;
}

std::string serialize(const Circuit &circuit) {
    return circuit_to_json(circuit).dump();
}

Circuit deserialize(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(e.what(), "byte " + std::to_string(e.byte));
    }
    return circuit_from_json(j);
}

Circuit load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ContractError("cannot open circuit file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return deserialize(buf.str());
}

void save_circuit(const Circuit &circuit, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw ContractError("cannot write circuit file '" + path + "'");
    }
    out << circuit_to_json(circuit).dump(1) << "\n";
}

}  // namespace commq
