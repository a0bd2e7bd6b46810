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

// Cross-module properties that hold for every input, checked on random draws.

#include <gtest/gtest.h>

#include <cmath>

#include "commq/analysis.h"
#include "commq/clifford_sim.h"
#include "commq/constructions.h"
#include "commq/dyadic_phase.h"
#include "commq/pauli.h"
#include "commq/statevector.h"
#include "commq/weak_sim.h"
#include "oracle.h"

namespace commq {
namespace {

using namespace commq::testing;

TEST(Layering, ReplayReproducesUnitary) {
    TestRng rng(21);
    for (int trial = 0; trial < 12; trial++) {
        std::size_t n = 3 + rng() % 6;
        Circuit c(n);
        c.append(random_gates(rng, n, 10 + rng() % 15, GateSet::kElementary));
        auto layers = layer_decomposition(c);
        ASSERT_TRUE(is_valid_layering(c, layers));
        EXPECT_EQ(layers.depth(), depth(c));
        Circuit replay(n);
        for (const auto &layer : layers.layers) {
            for (auto i : layer) {
                replay.append(c.gates()[i]);
            }
        }
        EXPECT_LT(max_abs_difference(dense_unitary(replay), dense_unitary(c)), 1e-9);
    }
}

TEST(DyadicPhase, FullTurnOfEveryLevelIsZero) {
    for (int k = 1; k <= 16; k++) {
        DyadicPhase s;
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); i++) {
            s += DyadicPhase::elementary(+1, k);
        }
        EXPECT_TRUE(s.is_zero()) << k;
    }
}

TEST(StateVector, NormIsKeptAfterEveryGate) {
    TestRng rng(22);
    for (int trial = 0; trial < 10; trial++) {
        std::size_t n = 2 + rng() % 6;
        Circuit c(n, QubitRole::input());
        c.append(random_gates(rng, n, 30, GateSet::kElementary));
        auto state = prepare(c, random_bits(rng, n));
        for (const auto &g : c.gates()) {
            apply_gate(state, g);
            EXPECT_LE(std::abs(state.norm_squared() - 1), 1e-9);
        }
    }
}

TEST(StateVector, MarginalsAreConsistent) {
    TestRng rng(23);
    for (int trial = 0; trial < 10; trial++) {
        std::size_t n = 3 + rng() % 4;
        Circuit c(n, QubitRole::input());
        c.append(random_gates(rng, n, 20, GateSet::kElementary));
        Bits x = random_bits(rng, n);
        std::vector<Qubit> all;
        for (std::size_t q = 0; q < n; q++) {
            all.push_back(static_cast<Qubit>(q));
        }
        auto full = output_distribution(c, x, all);
        std::vector<Qubit> sub;
        std::vector<std::size_t> pos;
        for (std::size_t q = 0; q < n; q++) {
            if (rng() & 1) {
                sub.push_back(static_cast<Qubit>(q));
                pos.push_back(q);
            }
        }
        if (sub.empty()) {
            continue;
        }
        std::vector<double> folded(std::size_t{1} << sub.size(), 0.0);
        for (std::size_t i = 0; i < full.size(); i++) {
            std::size_t j = 0;
            for (std::size_t k = 0; k < pos.size(); k++) {
                j |= ((i >> pos[k]) & 1) << k;
            }
            folded[j] += full[i];
        }
        EXPECT_LE(max_abs_difference(output_distribution(c, x, sub), Distribution(sub.size(), folded)), 1e-12);
    }
}

TEST(Pauli, ConjugationIsAGroupAction) {
    std::vector<Gate> gens{Gate::h(0), Gate::h(1), Gate::p(0), Gate::phase(1, -1, 2), Gate::x(0),
                           Gate::z(1), Gate::cz(0, 1), Gate::cnot(0, 1), Gate::cnot(1, 0)};
    for (const auto &g : gens) {
        for (int a = 0; a < 4; a++) {
            for (int b = 0; b < 4; b++) {
                for (int e = 0; e < 4; e++) {
                    PauliString p(2);
                    p.set_letter(0, static_cast<Pauli>(a));
                    p.set_letter(1, static_cast<Pauli>(b));
                    p.set_phase_exponent(e);
                    EXPECT_EQ(conjugate(conjugate(p, g), adjoint(g)), p) << g.str();
                }
            }
        }
    }
}

TEST(CliffordSim, OutcomesSumToOne) {
    TestRng rng(24);
    for (int trial = 0; trial < 20; trial++) {
        std::size_t n = 1 + rng() % 4, a = rng() % 4;
        Circuit c = random_clifford_instance(rng, n, a, 10 + rng() % 10);
        std::size_t l = std::min<std::size_t>(3, c.n_qubits());
        std::vector<Qubit> outs;
        for (std::size_t i = 0; i < l; i++) {
            outs.push_back(static_cast<Qubit>(i));
        }
        c.set_outputs(outs);
        Bits x = random_bits(rng, n);
        double total = 0;
        for (std::size_t y = 0; y < (std::size_t{1} << l); y++) {
            total += strong_sim(c, x, index_to_bits(y, l)).probability;
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

TEST(Support, UnchangedByTensoringIdentity) {
    TestRng rng(25);
    Matrix id = Matrix::Identity(2, 2);
    for (int trial = 0; trial < 10; trial++) {
        Circuit c(2);
        c.append(random_gates(rng, 2, 6, GateSet::kElementary));
        Matrix u = dense_unitary(c);
        auto s = support(u);
        // identity appended after the last position: positions stay the same
        EXPECT_EQ(support(kron(u, id)).positions, s.positions);
        // identity prepended: positions shift by one
        std::vector<std::size_t> shifted;
        for (auto p : s.positions) {
            shifted.push_back(p + 1);
        }
        EXPECT_EQ(support(kron(id, u)).positions, shifted);
    }
}

TEST(Support, ConjugatedTwoQubitGateOnDepthThreeCircuitHasAtMostNine) {
    TestRng rng(26);
    for (int trial = 0; trial < 6; trial++) {
        Circuit orig = random_small_circuit(rng, 3, 4, 3, GateSet::kElementary);
        Circuit a = compress_depth3(orig).circuit;
        ASSERT_EQ(depth(a), 3u);
        Qubit extra = a.add_qubit();
        for (Qubit q = 0; q < extra; q++) {
            std::vector<Gate> g{commuting_or_gate(q, extra, 2)};
            Circuit conj = conjugate_commuting(a, g);
            EXPECT_TRUE(check_c_local(conj, 9).pass) << "qubit " << q;
        }
    }
}

TEST(PhaseTable, MatchesDenseDiagonalExactly) {
    TestRng rng(27);
    for (int trial = 0; trial < 15; trial++) {
        std::size_t n = 1 + rng() % 6;
        Circuit d(n);
        d.append(random_gates(rng, n, 12, GateSet::kDiagonal));
        PhaseTable table(d);
        Matrix u = dense_unitary(d);
        Matrix off = u;
        off.diagonal().setZero();
        EXPECT_LE(off.cwiseAbs().maxCoeff(), 1e-12);
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); i++) {
            auto e = static_cast<Eigen::Index>(i);
            EXPECT_LE(std::abs(table.phase(i).unit() - u(e, e)), 1e-12);
        }
    }
}

TEST(Sandwich, FactorizationIdentity) {
    TestRng rng(28);
    for (int trial = 0; trial < 20; trial++) {
        auto spec = random_sandwich_spec(rng, trial % 4 == 0);
        Bits x = random_bits(rng, spec.f.n_inputs());
        auto q = dense_distribution(spec.f, x, spec.f.outputs());
        std::vector<double> mix(std::size_t{1} << spec.l, 0.0);
        for (std::size_t z = 0; z < q.size(); z++) {
            auto small = small_output_distribution(spec.d, parse_bits(index_to_bits(z, spec.t())), spec.l);
            for (std::size_t y = 0; y < mix.size(); y++) {
                mix[y] += q[z] * small[y];
            }
        }
        Distribution by_hand(spec.l, mix);
        auto exact = sandwich_exact(spec, x);
        Circuit full = hand_assembled(spec);
        EXPECT_LE(max_abs_difference(exact, by_hand), 1e-12);
        EXPECT_LE(max_abs_difference(exact, dense_distribution(full, x, full.outputs())), 1e-12);
    }
}

}  // namespace
}  // namespace commq
