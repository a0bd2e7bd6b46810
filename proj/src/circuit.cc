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

#include "commq/circuit.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "commq/error.h"

namespace commq {

QubitRole QubitRole::product(QubitState state) {
    double norm = std::norm(state[0]) + std::norm(state[1]);
    if (!std::isfinite(norm) || std::abs(norm - 1) > 1e-12) {
        throw ValidationError({"product ancilla state has squared norm " + std::to_string(norm)});
    }
    return QubitRole(RoleKind::kProduct, state);
}

Circuit::Circuit(std::size_t n_qubits, QubitRole role) : roles_(n_qubits, role) {
}

void Circuit::set_role(Qubit q, QubitRole role) {
    if (q >= roles_.size()) {
        throw ContractError("qubit " + std::to_string(q) + " out of range");
    }
    roles_[q] = role;
}

Qubit Circuit::add_qubit(QubitRole role) {
    roles_.push_back(role);
    return static_cast<Qubit>(roles_.size() - 1);
}

std::vector<Qubit> Circuit::input_qubits() const {
    std::vector<Qubit> out;
    for (std::size_t q = 0; q < roles_.size(); q++) {
        if (roles_[q].kind() == RoleKind::kInput) {
            out.push_back(static_cast<Qubit>(q));
        }
    }
    return out;
}

std::size_t Circuit::n_inputs() const {
    return std::count_if(roles_.begin(), roles_.end(), [](const QubitRole &r) { return r.kind() == RoleKind::kInput; });
}

namespace {

void check_list(const std::vector<Qubit> &list, std::size_t n, const std::string &what, std::vector<std::string> &out) {
    std::set<Qubit> seen;
    for (auto q : list) {
        if (q >= n) {
            out.push_back(what + " qubit " + std::to_string(q) + " out of range (" + std::to_string(n) + " qubits)");
        }
        if (!seen.insert(q).second) {
            out.push_back(what + " list has duplicate qubit " + std::to_string(q));
        }
    }
}

}  // namespace

std::vector<std::string> validate(const Circuit &circuit, const ValidationOptions &options) {
    std::vector<std::string> out;
    std::size_t n = circuit.n_qubits();
    check_list(circuit.outputs(), n, "output", out);
    check_list(circuit.postselect(), n, "postselect", out);
    for (std::size_t i = 0; i < circuit.gates().size(); i++) {
        for (auto &d : gate_diagnostics(circuit.gates()[i], n, options.max_composite_arity)) {
            out.push_back("gate " + std::to_string(i) + " " + d);
        }
    }
    return out;
}

void require_valid(const Circuit &circuit, const ValidationOptions &options) {
    auto d = validate(circuit, options);
    if (!d.empty()) {
        throw ValidationError(std::move(d));
    }
}

Circuit compose(const Circuit &first, const Circuit &second) {
    if (first.n_qubits() != second.n_qubits()) {
        throw ValidationError({"compose: qubit counts differ (" + std::to_string(first.n_qubits()) + " vs " +
                               std::to_string(second.n_qubits()) + ")"});
    }
    Circuit out = first;
    out.append(second.gates());
    return out;
}

Circuit embed(const Circuit &circuit, std::span<const Qubit> qubit_map, std::size_t n_total) {
    std::vector<std::string> problems;
    if (qubit_map.size() != circuit.n_qubits()) {
        problems.push_back("embed: qubit map has " + std::to_string(qubit_map.size()) + " entries for " +
                           std::to_string(circuit.n_qubits()) + " qubits");
    }
    std::set<Qubit> seen;
    for (auto q : qubit_map) {
        if (q >= n_total) {
            problems.push_back("embed: target qubit " + std::to_string(q) + " out of range");
        }
        if (!seen.insert(q).second) {
            problems.push_back("embed: qubit collision on " + std::to_string(q));
        }
    }
    if (!problems.empty()) {
        throw ValidationError(std::move(problems));
    }
    Circuit out(n_total);
    for (std::size_t q = 0; q < qubit_map.size(); q++) {
        out.set_role(qubit_map[q], circuit.role(static_cast<Qubit>(q)));
    }
    auto map_list = [&](const std::vector<Qubit> &list) {
        std::vector<Qubit> r;
        for (auto q : list) {
            r.push_back(qubit_map[q]);
        }
        return r;
    };
    out.set_outputs(map_list(circuit.outputs()));
    out.set_postselect(map_list(circuit.postselect()));
    for (const auto &g : circuit.gates()) {
        out.append(remap(g, qubit_map));
    }
    return out;
}

Circuit inverse(const Circuit &circuit) {
    Circuit out = circuit;
    std::vector<Gate> gs;
    gs.reserve(circuit.gates().size());
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        gs.push_back(adjoint(*it));
    }
    out.set_gates(std::move(gs));
    return out;
}

LayerDecomposition layer_decomposition(const Circuit &circuit) {
    LayerDecomposition out;
    std::vector<std::size_t> next(circuit.n_qubits(), 0);
    for (std::size_t i = 0; i < circuit.gates().size(); i++) {
        auto qs = circuit.gates()[i].qubits();
        std::size_t layer = 0;
        for (auto q : qs) {
            layer = std::max(layer, next.at(q));
        }
        if (layer == out.layers.size()) {
            out.layers.emplace_back();
        }
        out.layers[layer].push_back(i);
        for (auto q : qs) {
            next[q] = layer + 1;
        }
    }
    return out;
}

std::size_t depth(const Circuit &circuit) {
    return layer_decomposition(circuit).depth();
}

bool is_valid_layering(const Circuit &circuit, const LayerDecomposition &layers) {
    std::size_t n_gates = circuit.gates().size();
    std::vector<std::size_t> layer_of(n_gates, SIZE_MAX);
    for (std::size_t l = 0; l < layers.layers.size(); l++) {
        std::set<Qubit> used;
        for (auto i : layers.layers[l]) {
            if (i >= n_gates || layer_of[i] != SIZE_MAX) {
                return false;
            }
            layer_of[i] = l;
            for (auto q : circuit.gates()[i].qubits()) {
                if (!used.insert(q).second) {
                    return false;
                }
            }
        }
    }
    // every gate placed, and gates sharing a qubit keep their order
    std::vector<std::size_t> last(circuit.n_qubits(), SIZE_MAX);
    for (std::size_t i = 0; i < n_gates; i++) {
        if (layer_of[i] == SIZE_MAX) {
            return false;
        }
        for (auto q : circuit.gates()[i].qubits()) {
            if (last[q] != SIZE_MAX && layer_of[last[q]] >= layer_of[i]) {
                return false;
            }
            last[q] = i;
        }
    }
    return true;
}

}  // namespace commq
