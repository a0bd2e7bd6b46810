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

#include "commq/gate.h"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "commq/error.h"

namespace commq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string sign_char(int sign) {
    return sign > 0 ? "+" : "-";
}

}  // namespace

std::vector<Qubit> Gate::qubits() const {
    return std::visit(
        overloaded{
            [](const gates::H &g) { return std::vector<Qubit>{g.q}; },
            [](const gates::PhaseShift &g) { return std::vector<Qubit>{g.q}; },
            [](const gates::CZ &g) { return std::vector<Qubit>{g.a, g.b}; },
            [](const gates::X &g) { return std::vector<Qubit>{g.q}; },
            [](const gates::CNOT &g) { return std::vector<Qubit>{g.control, g.target}; },
            [](const gates::ControlledPhase &g) { return std::vector<Qubit>{g.control, g.target}; },
            [](const gates::Composite &g) { return g.qubits; },
        },
        kind_);
}

std::size_t Gate::arity() const {
    if (auto c = get_if<gates::Composite>()) {
        return c->qubits.size();
    }
    return (is<gates::CZ>() || is<gates::CNOT>() || is<gates::ControlledPhase>()) ? 2 : 1;
}

bool Gate::touches(Qubit q) const {
    for (auto x : qubits()) {
        if (x == q) {
            return true;
        }
    }
    return false;
}

std::string_view Gate::type_name() const {
    return std::visit(
        overloaded{
            [](const gates::H &) { return std::string_view("H"); },
            [](const gates::PhaseShift &) { return std::string_view("R"); },
            [](const gates::CZ &) { return std::string_view("CZ"); },
            [](const gates::X &) { return std::string_view("X"); },
            [](const gates::CNOT &) { return std::string_view("CNOT"); },
            [](const gates::ControlledPhase &) { return std::string_view("CR"); },
            [](const gates::Composite &) { return std::string_view("U"); },
        },
        kind_);
}

std::string Gate::str() const {
    std::ostringstream out;
    std::visit(
        overloaded{
            [&](const gates::H &g) { out << "H(" << g.q << ")"; },
            [&](const gates::PhaseShift &g) {
                out << "R(" << g.q << ", " << sign_char(g.sign) << "2pi/2^" << g.level << ")";
            },
            [&](const gates::CZ &g) { out << "CZ(" << g.a << "," << g.b << ")"; },
            [&](const gates::X &g) { out << "X(" << g.q << ")"; },
            [&](const gates::CNOT &g) { out << "CNOT(" << g.control << "->" << g.target << ")"; },
            [&](const gates::ControlledPhase &g) {
                out << "CR(" << g.control << "->" << g.target << ", " << sign_char(g.sign) << "2pi/2^" << g.level
                    << ")";
            },
            [&](const gates::Composite &g) {
                out << "U(";
                for (std::size_t i = 0; i < g.qubits.size(); i++) {
                    out << (i ? "," : "") << g.qubits[i];
                }
                out << ")";
            },
        },
        kind_);
    return out.str();
}

bool Gate::is_elementary() const {
    return is<gates::H>() || is<gates::PhaseShift>() || is<gates::CZ>();
}

DyadicPhase phase_of(const gates::PhaseShift &g) {
    return DyadicPhase::elementary(g.sign, g.level);
}

DyadicPhase phase_of(const gates::ControlledPhase &g) {
    return DyadicPhase::elementary(g.sign, g.level);
}

Matrix unitary_of(const Gate &gate) {
    return std::visit(
        overloaded{
            [](const gates::H &) {
                Matrix m(2, 2);
                double s = std::numbers::sqrt2 / 2;
                m << s, s, s, -s;
                return m;
            },
            [](const gates::PhaseShift &g) {
                Matrix m = Matrix::Identity(2, 2);
                m(1, 1) = phase_of(g).unit();
                return m;
            },
            [](const gates::CZ &) {
                Matrix m = Matrix::Identity(4, 4);
                m(3, 3) = -1;
                return m;
            },
            [](const gates::X &) {
                Matrix m = Matrix::Zero(2, 2);
                m(0, 1) = 1;
                m(1, 0) = 1;
                return m;
            },
            [](const gates::CNOT &) {
                Matrix m = Matrix::Zero(4, 4);
                m(0, 0) = 1;
                m(1, 1) = 1;
                m(2, 3) = 1;
                m(3, 2) = 1;
                return m;
            },
            [](const gates::ControlledPhase &g) {
                Matrix m = Matrix::Identity(4, 4);
                m(3, 3) = phase_of(g).unit();
                return m;
            },
            [](const gates::Composite &g) { return g.matrix; },
        },
        gate.kind());
}

Gate adjoint(const Gate &gate) {
    if (auto g = gate.get_if<gates::PhaseShift>()) {
        return gates::PhaseShift{g->q, -g->sign, g->level};
    }
    if (auto g = gate.get_if<gates::ControlledPhase>()) {
        return gates::ControlledPhase{g->control, g->target, -g->sign, g->level};
    }
    if (auto g = gate.get_if<gates::Composite>()) {
        return gates::Composite{g->qubits, g->matrix.adjoint()};
    }
    return gate;
}

std::vector<Gate> expand_elementary(const Gate &gate) {
    if (gate.is_elementary()) {
        return {gate};
    }
    if (auto g = gate.get_if<gates::X>()) {
        return {Gate::h(g->q), Gate::z(g->q), Gate::h(g->q)};
    }
    if (auto g = gate.get_if<gates::CNOT>()) {
        return {Gate::h(g->target), Gate::cz(g->control, g->target), Gate::h(g->target)};
    }
    if (auto g = gate.get_if<gates::ControlledPhase>()) {
        if (g->level + 1 > kMaxPhaseLevel) {
            throw DomainError("cannot expand " + gate.str() + ": half angle exceeds the phase level cap");
        }
        int half = g->level + 1;
        Qubit c = g->control, t = g->target;
        return {
            Gate::phase(c, g->sign, half),
            Gate::phase(t, g->sign, half),
            Gate::h(t),
            Gate::cz(c, t),
            Gate::h(t),
            Gate::phase(t, -g->sign, half),
            Gate::h(t),
            Gate::cz(c, t),
            Gate::h(t),
        };
    }
    throw DomainError("composite gate " + gate.str() + " has no elementary expansion");
}

Gate remap(const Gate &gate, std::span<const Qubit> qubit_map) {
    auto m = [&](Qubit q) {
        if (q >= qubit_map.size()) {
            throw ContractError("qubit " + std::to_string(q) + " missing from qubit map");
        }
        return qubit_map[q];
    };
    return std::visit(
        overloaded{
            [&](const gates::H &g) { return Gate(gates::H{m(g.q)}); },
            [&](const gates::PhaseShift &g) { return Gate(gates::PhaseShift{m(g.q), g.sign, g.level}); },
            [&](const gates::CZ &g) { return Gate(gates::CZ{m(g.a), m(g.b)}); },
            [&](const gates::X &g) { return Gate(gates::X{m(g.q)}); },
            [&](const gates::CNOT &g) { return Gate(gates::CNOT{m(g.control), m(g.target)}); },
            [&](const gates::ControlledPhase &g) {
                return Gate(gates::ControlledPhase{m(g.control), m(g.target), g.sign, g.level});
            },
            [&](const gates::Composite &g) {
                std::vector<Qubit> qs;
                for (auto q : g.qubits) {
                    qs.push_back(m(q));
                }
                return Gate(gates::Composite{std::move(qs), g.matrix});
            },
        },
        gate.kind());
}

std::vector<std::string> gate_diagnostics(const Gate &gate, std::size_t n_qubits, std::size_t max_arity) {
    std::vector<std::string> out;
    std::string name = gate.str();
    auto qs = gate.qubits();
    std::set<Qubit> seen;
    for (auto q : qs) {
        if (q >= n_qubits) {
            out.push_back(name + ": qubit " + std::to_string(q) + " out of range (" + std::to_string(n_qubits) +
                          " qubits)");
        }
        if (!seen.insert(q).second) {
            out.push_back(name + ": duplicate qubit " + std::to_string(q));
        }
    }
    auto check_phase = [&](int sign, int level, int max_level) {
        if (sign != 1 && sign != -1) {
            out.push_back(name + ": sign must be +1 or -1");
        }
        if (level < 0 || level > max_level) {
            out.push_back(name + ": level " + std::to_string(level) + " outside [0, " + std::to_string(max_level) +
                          "]");
        }
    };
    if (auto g = gate.get_if<gates::PhaseShift>()) {
        check_phase(g->sign, g->level, kMaxPhaseLevel);
    } else if (auto g = gate.get_if<gates::ControlledPhase>()) {
        // the elementary expansion needs level + 1
        check_phase(g->sign, g->level, kMaxPhaseLevel - 1);
    } else if (auto g = gate.get_if<gates::Composite>()) {
        std::size_t k = g->qubits.size();
        if (k == 0) {
            out.push_back(name + ": composite gate with no qubits");
        } else if (k > max_arity) {
            out.push_back(name + ": arity " + std::to_string(k) + " exceeds cap " + std::to_string(max_arity));
        } else {
            auto dim = static_cast<Eigen::Index>(std::size_t{1} << k);
            if (g->matrix.rows() != dim || g->matrix.cols() != dim) {
                out.push_back(name + ": matrix is " + std::to_string(g->matrix.rows()) + "x" +
                              std::to_string(g->matrix.cols()) + ", expected " + std::to_string(dim) + "x" +
                              std::to_string(dim));
            } else if (!g->matrix.allFinite()) {
                out.push_back(name + ": matrix has non-finite entries");
            } else {
                double defect = unitarity_defect(g->matrix);
                if (defect > 1e-9) {
                    out.push_back(name + ": not unitary (defect " + std::to_string(defect) + ")");
                }
            }
        }
    }
    return out;
}

bool is_diagonal(const Gate &gate, double tolerance) {
    if (gate.is<gates::PhaseShift>() || gate.is<gates::CZ>() || gate.is<gates::ControlledPhase>()) {
        return true;
    }
    if (auto g = gate.get_if<gates::Composite>()) {
        const auto &m = g->matrix;
        for (Eigen::Index r = 0; r < m.rows(); r++) {
            for (Eigen::Index c = 0; c < m.cols(); c++) {
                if (r != c && std::abs(m(r, c)) > tolerance) {
                    return false;
                }
            }
        }
        return true;
    }
    return false;
}

}  // namespace commq
