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

#include "commq/statevector.h"

#include <cmath>
#include <unordered_map>

#include "commq/error.h"

namespace commq {

namespace {

// Above this a dense unitary is 4^n complex doubles and no longer desk scale.
constexpr std::size_t kMaxUnitaryQubits = 14;

struct ConditionMask {
    std::size_t mask = 0;
    std::size_t value = 0;
    // the same qubit is conditioned on both values
    bool impossible = false;
};

ConditionMask condition_mask(const Condition &condition, std::size_t n_qubits) {
    if (condition.qubits.size() != condition.outcome.size()) {
        throw ContractError("condition lists " + std::to_string(condition.qubits.size()) + " qubits but outcome '" +
                            condition.outcome + "'");
    }
    ConditionMask m;
    for (std::size_t j = 0; j < condition.qubits.size(); j++) {
        Qubit q = condition.qubits[j];
        if (q >= n_qubits) {
            throw ContractError("condition qubit " + std::to_string(q) + " out of range");
        }
        char c = condition.outcome[j];
        if (c != '0' && c != '1') {
            throw ContractError("bad condition outcome '" + condition.outcome + "'");
        }
        std::size_t bit = std::size_t{1} << q;
        if ((m.mask & bit) && (((m.value & bit) != 0) != (c == '1'))) {
            m.impossible = true;
        }
        m.mask |= bit;
        if (c == '1') {
            m.value |= bit;
        }
    }
    return m;
}

bool matches(std::size_t index, const ConditionMask &m) {
    return !m.impossible && (index & m.mask) == m.value;
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits, 0.0) {
    amps_[0] = 1;
}

double StateVector::norm_squared() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

StateVector prepare(const Circuit &circuit, const Bits &input, const SimOptions &options) {
    std::size_t n = circuit.n_qubits();
    if (n > options.max_qubits) {
        throw ResourceError("circuit has " + std::to_string(n) + " qubits; the statevector cap is " +
                            std::to_string(options.max_qubits));
    }
    if (input.size() != circuit.n_inputs()) {
        throw ContractError("input has " + std::to_string(input.size()) + " bits; circuit has " +
                            std::to_string(circuit.n_inputs()) + " input qubits");
    }
    require_valid(circuit, {.max_composite_arity = kMaxUnitaryQubits});
    StateVector state(n);
    auto amps = state.amplitudes();
    std::size_t size = 1;
    std::size_t next_input = 0;
    for (std::size_t q = 0; q < n; q++) {
        const auto &role = circuit.role(static_cast<Qubit>(q));
        QubitState s = role.state();
        if (role.kind() == RoleKind::kInput) {
            std::uint8_t b = input[next_input++];
            s = b ? QubitState{0.0, 1.0} : QubitState{1.0, 0.0};
        }
        for (std::size_t i = 0; i < size; i++) {
            amps[i + size] = amps[i] * s[1];
            amps[i] *= s[0];
        }
        size <<= 1;
    }
    return state;
}

void apply_gate(StateVector &state, const Gate &gate) {
    auto amps = state.amplitudes();
    if (auto c = gate.get_if<gates::Composite>()) {
        apply_matrix(amps, c->qubits, c->matrix);
        return;
    }
    auto qs = gate.qubits();
    if (is_diagonal(gate)) {
        Matrix u = unitary_of(gate);
        std::vector<Complex> d(u.rows());
        for (Eigen::Index i = 0; i < u.rows(); i++) {
            d[i] = u(i, i);
        }
        apply_diagonal(amps, qs, d);
        return;
    }
    apply_matrix(amps, qs, unitary_of(gate));
}

StateVector apply(const Circuit &circuit, StateVector state, const SimOptions &options) {
    if (state.n_qubits() != circuit.n_qubits()) {
        throw ContractError("state and circuit qubit counts differ");
    }
    for (std::size_t i = 0; i < circuit.gates().size(); i++) {
        apply_gate(state, circuit.gates()[i]);
        double drift = std::abs(state.norm_squared() - 1);
        if (drift > options.norm_tolerance) {
            throw ConsistencyError("norm drift " + std::to_string(drift) + " after gate " + std::to_string(i) + " " +
                                   circuit.gates()[i].str());
        }
    }
    return state;
}

StateVector run(const Circuit &circuit, const Bits &input, const SimOptions &options) {
    return apply(circuit, prepare(circuit, input, options), options);
}

Distribution marginal(const StateVector &state, std::span<const Qubit> qubits) {
    for (auto q : qubits) {
        if (q >= state.n_qubits()) {
            throw ContractError("qubit " + std::to_string(q) + " out of range");
        }
    }
    std::vector<double> p(std::size_t{1} << qubits.size(), 0.0);
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++) {
        double w = std::norm(amps[i]);
        if (w == 0) {
            continue;
        }
        std::size_t o = 0;
        for (std::size_t j = 0; j < qubits.size(); j++) {
            o |= ((i >> qubits[j]) & 1) << j;
        }
        p[o] += w;
    }
    return Distribution(qubits.size(), std::move(p));
}

Distribution output_distribution(
    const Circuit &circuit, const Bits &input, std::span<const Qubit> qubits, const SimOptions &options) {
    return marginal(run(circuit, input, options), qubits);
}

Distribution output_distribution(const Circuit &circuit, const Bits &input, const SimOptions &options) {
    return output_distribution(circuit, input, circuit.outputs(), options);
}

double condition_probability(const StateVector &state, const Condition &condition) {
    auto m = condition_mask(condition, state.n_qubits());
    double s = 0;
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (matches(i, m)) {
            s += std::norm(amps[i]);
        }
    }
    return s;
}

Distribution conditional_distribution(
    const StateVector &state, const Condition &condition, std::span<const Qubit> target, const SimOptions &options) {
    double pc = condition_probability(state, condition);
    if (!(pc >= options.min_condition_probability) || pc <= 0) {
        throw UnconditionableError(pc);
    }
    auto projected = project(state, condition, options);
    return marginal(projected, target);
}

Distribution conditional_distribution(
    const Circuit &circuit,
    const Bits &input,
    const Condition &condition,
    std::span<const Qubit> target,
    const SimOptions &options) {
    return conditional_distribution(run(circuit, input, options), condition, target, options);
}

StateVector project(const StateVector &state, const Condition &condition, const SimOptions &options) {
    auto m = condition_mask(condition, state.n_qubits());
    double pc = condition_probability(state, condition);
    if (!(pc >= options.min_condition_probability) || pc <= 0) {
        throw UnconditionableError(pc);
    }
    StateVector out = state;
    auto amps = out.amplitudes();
    double scale = 1 / std::sqrt(pc);
    for (std::size_t i = 0; i < amps.size(); i++) {
        amps[i] = matches(i, m) ? amps[i] * scale : Complex{0};
    }
    return out;
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw ContractError("fidelity: qubit counts differ");
    }
    Complex s = 0;
    for (std::size_t i = 0; i < a.amplitudes().size(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return std::norm(s);
}

namespace {

Matrix unitary_from_gates(std::span<const Gate> gates, std::size_t n) {
    std::size_t dim = std::size_t{1} << n;
    Matrix u(dim, dim);
    StateVector col(n);
    for (std::size_t c = 0; c < dim; c++) {
        auto amps = col.amplitudes();
        std::fill(amps.begin(), amps.end(), Complex{0});
        amps[c] = 1;
        for (const auto &g : gates) {
            apply_gate(col, g);
        }
        for (std::size_t r = 0; r < dim; r++) {
            u(r, c) = amps[r];
        }
    }
    return u;
}

}  // namespace

Matrix circuit_unitary(const Circuit &circuit, const SimOptions &options) {
    std::size_t n = circuit.n_qubits();
    if (n > std::min(options.max_qubits, kMaxUnitaryQubits)) {
        throw ResourceError("dense unitary of " + std::to_string(n) + " qubits exceeds the cap");
    }
    return unitary_from_gates(circuit.gates(), n);
}

Matrix local_unitary(std::span<const Gate> gates, std::span<const Qubit> register_qubits) {
    if (register_qubits.size() > kMaxUnitaryQubits) {
        throw ResourceError("local register of " + std::to_string(register_qubits.size()) + " qubits exceeds the cap");
    }
    std::unordered_map<Qubit, Qubit> local;
    for (std::size_t i = 0; i < register_qubits.size(); i++) {
        local[register_qubits[i]] = static_cast<Qubit>(i);
    }
    Qubit max_q = 0;
    for (const auto &g : gates) {
        for (auto q : g.qubits()) {
            max_q = std::max(max_q, q);
        }
    }
    std::vector<Qubit> map(std::size_t{max_q} + 1, 0);
    std::vector<Gate> remapped;
    for (const auto &g : gates) {
        for (auto q : g.qubits()) {
            auto it = local.find(q);
            if (it == local.end()) {
                throw ContractError("gate " + g.str() + " acts outside the local register");
            }
            map[q] = it->second;
        }
        remapped.push_back(remap(g, map));
    }
    return unitary_from_gates(remapped, register_qubits.size());
}

}  // namespace commq
