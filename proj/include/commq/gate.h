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

#ifndef COMMQ_GATE_H
#define COMMQ_GATE_H

#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "commq/bits.h"
#include "commq/dyadic_phase.h"
#include "commq/matrix.h"

namespace commq {

/// Default cap on the number of qubits a Composite gate may act on.
inline constexpr std::size_t kDefaultCompositeArity = 9;

namespace gates {

// Elementary gates.
struct H {
    Qubit q;
    bool operator==(const H &) const = default;
};
/// R(sign * 2*pi / 2^level) = diag(1, e^{i*angle}).
struct PhaseShift {
    Qubit q;
    int sign;
    int level;
    bool operator==(const PhaseShift &) const = default;
};
struct CZ {
    Qubit a;
    Qubit b;
    bool operator==(const CZ &) const = default;
};

// Derived gates; each has a fixed expansion into elementary gates.
struct X {
    Qubit q;
    bool operator==(const X &) const = default;
};
struct CNOT {
    Qubit control;
    Qubit target;
    bool operator==(const CNOT &) const = default;
};
/// diag(1, 1, 1, e^{i*angle}) on (control, target).
struct ControlledPhase {
    Qubit control;
    Qubit target;
    int sign;
    int level;
    bool operator==(const ControlledPhase &) const = default;
};

/// Arbitrary small unitary. `matrix` is list-ordered over `qubits` (see matrix.h).
struct Composite {
    std::vector<Qubit> qubits;
    Matrix matrix;
    bool operator==(const Composite &other) const {
        return qubits == other.qubits && matrix.rows() == other.matrix.rows() &&
               matrix.cols() == other.matrix.cols() && matrix == other.matrix;
    }
};

}  // namespace gates

class Gate {
   public:
    using Kind = std::variant<
        gates::H,
        gates::PhaseShift,
        gates::CZ,
        gates::X,
        gates::CNOT,
        gates::ControlledPhase,
        gates::Composite>;

    template <typename T>
        requires std::is_constructible_v<Kind, T>
    Gate(T kind) : kind_(std::move(kind)) {
    }

    static Gate h(Qubit q) {
        return gates::H{q};
    }
    static Gate phase(Qubit q, int sign, int level) {
        return gates::PhaseShift{q, sign, level};
    }
    /// R(pi).
    static Gate z(Qubit q) {
        return gates::PhaseShift{q, +1, 1};
    }
    /// R(pi/2).
    static Gate p(Qubit q) {
        return gates::PhaseShift{q, +1, 2};
    }
    /// R(pi/4).
    static Gate t(Qubit q) {
        return gates::PhaseShift{q, +1, 3};
    }
    static Gate cz(Qubit a, Qubit b) {
        return gates::CZ{a, b};
    }
    static Gate x(Qubit q) {
        return gates::X{q};
    }
    static Gate cnot(Qubit control, Qubit target) {
        return gates::CNOT{control, target};
    }
    static Gate cphase(Qubit control, Qubit target, int sign, int level) {
        return gates::ControlledPhase{control, target, sign, level};
    }
    static Gate composite(std::vector<Qubit> qubits, Matrix matrix) {
        return gates::Composite{std::move(qubits), std::move(matrix)};
    }

    const Kind &kind() const {
        return kind_;
    }
    template <typename T>
    const T *get_if() const {
        return std::get_if<T>(&kind_);
    }
    template <typename T>
    bool is() const {
        return std::holds_alternative<T>(kind_);
    }

    /// Qubits in matrix order.
    std::vector<Qubit> qubits() const;
    std::size_t arity() const;
    bool touches(Qubit q) const;

    /// Short type name matching the circuit file format ("H", "R", "CZ", "X", "CNOT", "CR", "U").
    std::string_view type_name() const;
    /// Human-readable form, e.g. "CR(0->2, +2pi/2^3)".
    std::string str() const;

    bool is_elementary() const;

    bool operator==(const Gate &other) const = default;

   private:
    Kind kind_;
};

/// Matrix in the computational basis, list-ordered over gate.qubits().
Matrix unitary_of(const Gate &gate);

/// The phase of a PhaseShift or ControlledPhase gate.
DyadicPhase phase_of(const gates::PhaseShift &g);
DyadicPhase phase_of(const gates::ControlledPhase &g);

Gate adjoint(const Gate &gate);

/// Deterministic expansion into H / PhaseShift / CZ. Elementary gates expand
/// to themselves. Throws DomainError for Composite gates.
std::vector<Gate> expand_elementary(const Gate &gate);

/// Same gate acting on relabelled qubits: q -> qubit_map[q].
Gate remap(const Gate &gate, std::span<const Qubit> qubit_map);

/// Structural problems with `gate` in an n-qubit register (empty when valid).
std::vector<std::string> gate_diagnostics(const Gate &gate, std::size_t n_qubits, std::size_t max_arity = kDefaultCompositeArity);

/// True for gates whose matrix is diagonal in the Z basis by construction;
/// Composite gates are checked numerically against `tolerance`.
bool is_diagonal(const Gate &gate, double tolerance = 1e-12);

}  // namespace commq

#endif
