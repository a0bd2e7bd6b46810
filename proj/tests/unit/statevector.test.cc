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


#include <gtest/gtest.h>

#include <cmath>

#include "commq/error.h"
#include "commq/statevector.h"
#include "oracle.h"

namespace commq {
namespace {

using namespace commq::testing;

Circuit random_circuit(TestRng &rng, std::size_t n, std::size_t gates, GateSet set) {
    Circuit c(n);
    for (std::size_t q = 0; q < n; q++) {
        switch (rng() % 3) {
            case 0:
                c.set_role(static_cast<Qubit>(q), QubitRole::input());
                break;
            case 1:
                break;
            default:
                c.set_role(static_cast<Qubit>(q), QubitRole::product(random_qubit_state(rng)));
        }
    }
    c.append(random_gates(rng, n, gates, set));
    return c;
}

TEST(StateVector, MatchesKroneckerOracle) {
    TestRng rng(2024);
    for (int trial = 0; trial < 60; trial++) {
        std::size_t n = 1 + rng() % 5;
        Circuit c = random_circuit(rng, n, 3 + rng() % 12, GateSet::kElementary);
        if (trial % 3 == 0) {
            c.append(Gate::composite({0}, unitary_of(Gate::h(0)) * unitary_of(Gate::t(0))));
        }
        Bits x = random_bits(rng, c.n_inputs());
        auto sv = run(c, x);
        auto ref = dense_final_state(c, x);
        for (std::size_t i = 0; i < sv.amplitudes().size(); i++) {
            EXPECT_LT(std::abs(sv[i] - ref(static_cast<Eigen::Index>(i))), 1e-12);
        }
        EXPECT_NEAR(sv.norm_squared(), 1.0, 1e-12);
    }
}

TEST(StateVector, UnitaryMatchesKroneckerOracle) {
    TestRng rng(5);
    for (int trial = 0; trial < 20; trial++) {
        std::size_t n = 1 + rng() % 4;
        Circuit c(n);
        c.append(random_gates(rng, n, 10, GateSet::kElementary));
        EXPECT_LT(max_abs_difference(circuit_unitary(c), dense_unitary(c)), 1e-12);
    }
}

TEST(StateVector, CompositeOnPermutedQubits) {
    TestRng rng(17);
    Circuit inner(3);
    inner.append(random_gates(rng, 3, 15, GateSet::kElementary));
    Matrix u = dense_unitary(inner);  // little-endian over (0, 1, 2): list order (2, 1, 0)
    Circuit c(4);
    c.append(Gate::h(3)).append(Gate::h(1));
    c.append(Gate::composite({3, 0, 1}, u));
    EXPECT_LT(max_abs_difference(circuit_unitary(c), dense_unitary(c)), 1e-12);
}

TEST(StateVector, MarginalsAndConditionals) {
    TestRng rng(99);
    for (int trial = 0; trial < 30; trial++) {
        std::size_t n = 2 + rng() % 4;
        Circuit c = random_circuit(rng, n, 4 + rng() % 10, GateSet::kCliffordT);
        Bits x = random_bits(rng, c.n_inputs());
        std::vector<Qubit> qs{static_cast<Qubit>(n - 1), 0};
        auto d = output_distribution(c, x, qs);
        auto ref = dense_distribution(c, x, qs);
        EXPECT_LT(max_abs_difference(d, ref), 1e-12);

        Condition cond{{1}, std::string(1, "01"[rng() & 1])};
        std::vector<Qubit> target{0};
        double p = condition_probability(run(c, x), cond);
        EXPECT_NEAR(p, dense_condition_probability(c, x, cond.qubits, cond.outcome), 1e-12);
        if (p > 1e-6) {
            auto cd = conditional_distribution(c, x, cond, target);
            auto cref = dense_conditional(c, x, cond.qubits, cond.outcome, target);
            EXPECT_LT(max_abs_difference(cd, cref), 1e-10);
        }
    }
}

TEST(StateVector, UnconditionableIsReported) {
    Circuit c(2);
    Condition cond{{0}, "1"};
    std::vector<Qubit> target{1};
    try {
        conditional_distribution(c, {}, cond, target);
        FAIL();
    } catch (const UnconditionableError &e) {
        EXPECT_EQ(e.probability(), 0.0);
    }
    Condition contradict{{0, 0}, "01"};
    EXPECT_EQ(condition_probability(run(c, {}), contradict), 0.0);
}

TEST(StateVector, ProjectAndFidelity) {
    Circuit c(2);
    c.append(Gate::h(0)).append(Gate::cnot(0, 1));
    auto s = run(c, {});
    auto p = project(s, {{0}, "1"});
    EXPECT_NEAR(p.norm_squared(), 1.0, 1e-12);
    EXPECT_NEAR(std::norm(p[3]), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(s, s), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(s, p), 0.5, 1e-12);
}

TEST(StateVector, ErrorsAndLimits) {
    Circuit c(2);
    c.set_role(0, QubitRole::input());
    EXPECT_THROW(run(c, Bits{1, 0}), ContractError);
    SimOptions small;
    small.max_qubits = 1;
    EXPECT_THROW(run(c, Bits{1}, small), ResourceError);
    Circuit bad(1);
    bad.append(Gate::composite({0}, Matrix::Identity(2, 2) * 1.5));
    EXPECT_THROW(run(bad, {}), ValidationError);
}

TEST(StateVector, LocalUnitaryIsListOrdered) {
    std::vector<Gate> gs{Gate::cnot(5, 9)};
    std::vector<Qubit> reg{9, 5};
    Matrix u = local_unitary(gs, reg);
    // little-endian over reg: bit 0 = qubit 9 (target), bit 1 = qubit 5 (control)
    // which is the list order (control, target) again
    EXPECT_LT(max_abs_difference(u, unitary_of(Gate::cnot(1, 0))), 1e-15);
}

}  // namespace
}  // namespace commq
