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

#ifndef COMMQ_CIRCUIT_H
#define COMMQ_CIRCUIT_H

#include <array>
#include <span>
#include <string>
#include <vector>

#include "commq/gate.h"

namespace commq {

using QubitState = std::array<Complex, 2>;

enum class RoleKind { kInput, kZero, kProduct };

/// How a qubit is initialised: an input bit, |0>, or a fixed single-qubit state.
class QubitRole {
   public:
    static QubitRole input() {
        return QubitRole(RoleKind::kInput, {Complex{1}, Complex{0}});
    }
    static QubitRole zero() {
        return QubitRole(RoleKind::kZero, {Complex{1}, Complex{0}});
    }
    /// Throws ValidationError unless |a0|^2 + |a1|^2 = 1 within 1e-12.
    static QubitRole product(QubitState state);

    RoleKind kind() const {
        return kind_;
    }
    const QubitState &state() const {
        return state_;
    }
    bool operator==(const QubitRole &) const = default;

   private:
    QubitRole(RoleKind kind, QubitState state) : kind_(kind), state_(state) {
    }
    RoleKind kind_;
    QubitState state_;
};

struct ValidationOptions {
    std::size_t max_composite_arity = kDefaultCompositeArity;
};

/// Qubit register with per-qubit roles, output and postselection lists, and an
/// ordered gate sequence. Output and postselection lists may overlap.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t n_qubits, QubitRole role = QubitRole::zero());

    std::size_t n_qubits() const {
        return roles_.size();
    }
    const std::vector<QubitRole> &roles() const {
        return roles_;
    }
    const QubitRole &role(Qubit q) const {
        return roles_.at(q);
    }
    void set_role(Qubit q, QubitRole role);
    /// Appends a qubit and returns its index.
    Qubit add_qubit(QubitRole role = QubitRole::zero());

    const std::vector<Qubit> &outputs() const {
        return outputs_;
    }
    void set_outputs(std::vector<Qubit> qubits) {
        outputs_ = std::move(qubits);
    }
    const std::vector<Qubit> &postselect() const {
        return postselect_;
    }
    void set_postselect(std::vector<Qubit> qubits) {
        postselect_ = std::move(qubits);
    }

    const std::vector<Gate> &gates() const {
        return gates_;
    }
    Circuit &append(Gate gate) {
        gates_.push_back(std::move(gate));
        return *this;
    }
    Circuit &append(std::span<const Gate> gates) {
        gates_.insert(gates_.end(), gates.begin(), gates.end());
        return *this;
    }
    void set_gates(std::vector<Gate> gates) {
        gates_ = std::move(gates);
    }

    /// Qubits with the Input role, ascending; input bit i initialises input_qubits()[i].
    std::vector<Qubit> input_qubits() const;
    std::size_t n_inputs() const;

    bool operator==(const Circuit &) const = default;

   private:
    std::vector<QubitRole> roles_;
    std::vector<Qubit> outputs_;
    std::vector<Qubit> postselect_;
    std::vector<Gate> gates_;
};

/// Every structural problem with the circuit, one message per problem. Empty means valid.
std::vector<std::string> validate(const Circuit &circuit, const ValidationOptions &options = {});
/// Throws ValidationError carrying validate()'s diagnostics.
void require_valid(const Circuit &circuit, const ValidationOptions &options = {});

/// Gates of `second` appended after those of `first`. Both must have the same
/// qubit count; the register metadata (roles, outputs, postselection) is `first`'s.
Circuit compose(const Circuit &first, const Circuit &second);

/// Relabels qubit q as qubit_map[q] inside an n_total-qubit register. Unmapped
/// qubits become |0> ancillas.
Circuit embed(const Circuit &circuit, std::span<const Qubit> qubit_map, std::size_t n_total);

/// Reversed gate order, each gate replaced by its adjoint. Metadata is kept.
Circuit inverse(const Circuit &circuit);

/// Gates grouped into layers of pairwise-disjoint gates, in circuit order.
struct LayerDecomposition {
    std::vector<std::vector<std::size_t>> layers;
    std::size_t depth() const {
        return layers.size();
    }
};

/// Greedy-left layering: each gate goes to the earliest layer after every
/// earlier gate that shares a qubit with it. Each gate counts as one unit.
LayerDecomposition layer_decomposition(const Circuit &circuit);
std::size_t depth(const Circuit &circuit);

/// True if `layers` covers every gate once, each layer is qubit-disjoint, and
/// gates sharing a qubit keep their circuit order.
bool is_valid_layering(const Circuit &circuit, const LayerDecomposition &layers);

}  // namespace commq

#endif
