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
#include <numbers>

#include "commq/circuit.h"
#include "commq/circuit_json.h"
#include "commq/error.h"
#include "oracle.h"

namespace commq {
namespace {

using testing::dense_unitary;
using testing::kron_gate;

Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    Matrix m(rows.size(), rows.size());
    Eigen::Index r = 0;
    for (auto row : rows) {
        Eigen::Index c = 0;
        for (auto v : row) {
            m(r, c++) = v;
        }
        r++;
    }
    return m;
}

TEST(Gate, SmallMatrices) {
    double s = std::sqrt(0.5);
    EXPECT_LT(max_abs_difference(unitary_of(Gate::h(0)), from_rows({{s, s}, {s, -s}})), 1e-15);
    EXPECT_LT(max_abs_difference(unitary_of(Gate::p(0)), from_rows({{1, 0}, {0, Complex(0, 1)}})), 1e-15);
    EXPECT_LT(max_abs_difference(unitary_of(Gate::x(0)), from_rows({{0, 1}, {1, 0}})), 1e-15);
    // list order: control first, most significant
    Matrix cnot = from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    EXPECT_LT(max_abs_difference(unitary_of(Gate::cnot(0, 1)), cnot), 1e-15);
    Matrix cr = Matrix::Identity(4, 4);
    cr(3, 3) = std::polar(1.0, -2 * std::numbers::pi / 8);
    EXPECT_LT(max_abs_difference(unitary_of(Gate::cphase(0, 1, -1, 3)), cr), 1e-15);
    EXPECT_EQ(unitary_of(Gate::cz(0, 1))(3, 3), Complex(-1));
}

TEST(Gate, StrAndTypeNames) {
    EXPECT_EQ(Gate::cphase(0, 2, +1, 3).str(), "CR(0->2, +2pi/2^3)");
    EXPECT_EQ(Gate::h(1).type_name(), "H");
    EXPECT_EQ(Gate::composite({0, 1}, Matrix::Identity(4, 4)).type_name(), "U");
    EXPECT_TRUE(Gate::cz(0, 1).is_elementary());
    EXPECT_FALSE(Gate::cnot(0, 1).is_elementary());
}

TEST(Gate, AdjointInvertsEveryKind) {
    testing::TestRng rng(3);
    std::vector<Gate> gs = testing::random_gates(rng, 3, 40, testing::GateSet::kElementary);
    gs.push_back(Gate::composite({2, 0}, unitary_of(Gate::cphase(0, 1, 1, 3)) * unitary_of(Gate::cnot(1, 0))));
    for (const auto &g : gs) {
        Matrix prod = unitary_of(adjoint(g)) * unitary_of(g);
        EXPECT_LT(max_abs_difference(prod, Matrix::Identity(prod.rows(), prod.cols())), 1e-12) << g.str();
    }
}

TEST(Gate, ElementaryExpansionMatchesUnitary) {
    std::vector<Gate> gs = {
        Gate::x(1), Gate::cnot(0, 2), Gate::cnot(2, 0), Gate::cphase(1, 0, +1, 3), Gate::cphase(0, 2, -1, 5),
        Gate::cphase(2, 1, +1, 1)};
    for (const auto &g : gs) {
        Circuit c(3);
        c.append(expand_elementary(g));
        for (const auto &e : c.gates()) {
            EXPECT_TRUE(e.is_elementary()) << e.str();
        }
        EXPECT_LT(max_abs_difference(dense_unitary(c), kron_gate(g, 3)), 1e-12) << g.str();
    }
}

TEST(Gate, RemapAndDiagnostics) {
    std::vector<Qubit> map{4, 2, 7};
    EXPECT_EQ(remap(Gate::cnot(0, 2), map), Gate::cnot(4, 7));
    EXPECT_TRUE(gate_diagnostics(Gate::cz(0, 1), 2).empty());
    EXPECT_FALSE(gate_diagnostics(Gate::cz(1, 1), 2).empty());
    EXPECT_FALSE(gate_diagnostics(Gate::h(5), 2).empty());
    EXPECT_FALSE(gate_diagnostics(Gate::phase(0, 3, 2), 1).empty());
    Matrix not_unitary = Matrix::Identity(2, 2) * 2.0;
    EXPECT_FALSE(gate_diagnostics(Gate::composite({0}, not_unitary), 1).empty());
    EXPECT_FALSE(gate_diagnostics(Gate::composite({0, 1}, Matrix::Identity(2, 2)), 2).empty());
    EXPECT_TRUE(is_diagonal(Gate::cphase(0, 1, 1, 4)));
    EXPECT_FALSE(is_diagonal(Gate::h(0)));
}

TEST(Circuit, DepthAndLayers) {
    Circuit c(3);
    c.append(Gate::h(0)).append(Gate::h(1)).append(Gate::cz(0, 1)).append(Gate::h(2)).append(Gate::cz(1, 2));
    auto layers = layer_decomposition(c);
    EXPECT_EQ(layers.depth(), 3u);
    EXPECT_EQ(depth(c), 3u);
    EXPECT_TRUE(is_valid_layering(c, layers));
    LayerDecomposition bad{{{0, 1, 2, 3, 4}}};
    EXPECT_FALSE(is_valid_layering(c, bad));
    EXPECT_EQ(depth(Circuit(2)), 0u);
}

TEST(Circuit, InverseComposeEmbed) {
    testing::TestRng rng(11);
    Circuit c(3);
    c.append(testing::random_gates(rng, 3, 12, testing::GateSet::kElementary));
    Matrix u = dense_unitary(c);
    Matrix ui = dense_unitary(inverse(c));
    EXPECT_LT(max_abs_difference(ui * u, Matrix::Identity(8, 8)), 1e-12);
    EXPECT_LT(max_abs_difference(dense_unitary(compose(c, inverse(c))), Matrix::Identity(8, 8)), 1e-12);

    std::vector<Qubit> map{3, 0, 1};
    Circuit e = embed(c, map, 4);
    EXPECT_EQ(e.n_qubits(), 4u);
    EXPECT_EQ(e.gates().size(), c.gates().size());
    EXPECT_TRUE(validate(e).empty());
}

TEST(Circuit, ValidationReportsEveryProblem) {
    Circuit c(2);
    c.append(Gate::h(3));
    c.append(Gate::cz(0, 0));
    c.set_outputs({0, 0});
    c.set_postselect({0});
    auto diags = validate(c);
    EXPECT_GE(diags.size(), 3u);
    EXPECT_THROW(require_valid(c), ValidationError);
    EXPECT_THROW(QubitRole::product({Complex(1), Complex(1)}), ValidationError);
    Circuit big(1);
    big.append(Gate::composite({0}, Matrix::Identity(2, 2)));
    EXPECT_TRUE(validate(big).empty());
}

TEST(Circuit, InputQubitsAreAscending) {
    Circuit c(4);
    c.set_role(3, QubitRole::input());
    c.set_role(1, QubitRole::input());
    EXPECT_EQ(c.input_qubits(), (std::vector<Qubit>{1, 3}));
    EXPECT_EQ(c.n_inputs(), 2u);
}

TEST(CircuitJson, RoundTripAllGateKinds) {
    Circuit c(3);
    c.set_role(0, QubitRole::input());
    c.set_role(2, QubitRole::product({Complex(std::sqrt(0.5)), Complex(0, std::sqrt(0.5))}));
    c.append(Gate::h(0))
        .append(Gate::phase(1, -1, 3))
        .append(Gate::cz(0, 1))
        .append(Gate::x(2))
        .append(Gate::cnot(2, 0))
        .append(Gate::cphase(1, 2, 1, 4))
        .append(Gate::composite({1, 0}, unitary_of(Gate::cnot(0, 1))));
    c.set_outputs({1, 2});
    c.set_postselect({0});
    auto text = serialize(c);
    Circuit back = deserialize(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(serialize(back), text);
}

TEST(CircuitJson, ParseErrorsCarryPositions) {
    try {
        deserialize(R"({"qubits": 1, "roles": ["zero"], "gates": [{"type": "Q", "q": 0}]})");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), "/gates/0/type");
    }
    try {
        deserialize(R"({"qubits": 1, "roles": ["zero"], "gates": [{"type": "R", "q": 0, "sign": 2, "k": 1}]})");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), "/gates/0/sign");
    }
    EXPECT_THROW(deserialize("{"), ParseError);
    EXPECT_THROW(
        deserialize(R"({"qubits": 1, "roles": ["zero"], "outputs": [4], "gates": []})"), ValidationError);
}

}  // namespace
}  // namespace commq
