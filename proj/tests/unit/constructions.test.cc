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

#include "commq/analysis.h"
#include "commq/constructions.h"
#include "commq/error.h"
#include "commq/pauli.h"
#include "commq/statevector.h"
#include "oracle.h"

namespace commq {
namespace {

using namespace commq::testing;

TEST(OrReduction, AncillaCount) {
    std::vector<std::size_t> expect{0, 1, 2, 2, 3, 3, 3, 3, 4};
    for (std::size_t b = 0; b < expect.size(); b++) {
        EXPECT_EQ(or_ancilla_count(b), expect[b]) << b;
    }
}

TEST(OrReduction, ZeroOutcomeIffZeroInput) {
    for (auto build : {or_reduction_noncommuting, or_reduction_commuting}) {
        for (std::size_t b = 1; b <= 4; b++) {
            Circuit c = build(b);
            std::size_t m = or_ancilla_count(b);
            ASSERT_EQ(c.outputs().size(), m);
            for (std::uint64_t x = 0; x < (1u << b); x++) {
                auto d = output_distribution(c, parse_bits(index_to_bits(x, b)));
                if (x == 0) {
                    EXPECT_NEAR(d[0], 1.0, 1e-12);
                } else {
                    EXPECT_LT(d[0], 1e-12) << "b=" << b << " x=" << x;
                }
            }
        }
    }
}

TEST(OrReduction, ThreeInputsFromFigure) {
    // non-commuting, b = 3: 000 -> 00 surely, 101 -> never 00
    Circuit c = or_reduction_noncommuting(3);
    EXPECT_NEAR(output_distribution(c, parse_bits("000")).prob("00"), 1.0, 1e-12);
    EXPECT_LT(output_distribution(c, parse_bits("101")).prob("00"), 1e-12);
    Circuit k = or_reduction_commuting(3);
    EXPECT_EQ(k.gates().size(), 6u);
    for (const auto &g : k.gates()) {
        EXPECT_TRUE(g.is<gates::Composite>());
        EXPECT_EQ(g.arity(), 2u);
    }
}

TEST(OrReduction, VariantsShareTheUnitary) {
    for (std::size_t b = 1; b <= 4; b++) {
        EXPECT_LT(max_abs_difference(circuit_unitary(or_reduction_noncommuting(b)), circuit_unitary(or_reduction_commuting(b))),
                  1e-10);
    }
}

TEST(OrReduction, CommutingVariantCommutes) {
    EXPECT_TRUE(check_pairwise_commuting(or_reduction_commuting(4)).pass);
    EXPECT_FALSE(check_pairwise_commuting(or_reduction_noncommuting(2)).pass);
}

TEST(OrReduction, CommutingGateMatchesProduct) {
    Circuit c(2);
    c.append(Gate::h(1)).append(Gate::cphase(0, 1, 1, 2)).append(Gate::h(1));
    EXPECT_LT(max_abs_difference(kron_gate(commuting_or_gate(0, 1, 2), 2), dense_unitary(c)), 1e-12);
}

class Teleport : public ::testing::TestWithParam<TeleportForm> {};

TEST_P(Teleport, MovesStateWithQuarterProbability) {
    TestRng rng(6);
    for (int trial = 0; trial < 10; trial++) {
        Circuit c = teleport_gadget(GetParam());
        auto psi = random_qubit_state(rng);
        c.set_role(0, QubitRole::product(psi));
        EXPECT_NEAR(dense_condition_probability(c, {}, {0, 1}, "00"), 0.25, 1e-12);
        auto post = project(run(c, {}), {{0, 1}, "00"});
        // a2 carries psi exactly (global phase aside)
        StateVector want(3);
        std::fill(want.amplitudes().begin(), want.amplitudes().end(), Complex(0));
        want.amplitudes()[0] = psi[0];
        want.amplitudes()[4] = psi[1];
        EXPECT_NEAR(fidelity(post, want), 1.0, 1e-12);
    }
}

INSTANTIATE_TEST_SUITE_P(Forms, Teleport, ::testing::Values(TeleportForm::kCnot, TeleportForm::kCz));

TEST(Compress, ExampleHasSixTeleportationQubits) {
    auto cc = compress_depth3(two_qubit_example());
    EXPECT_EQ(cc.b(), 6u);
    EXPECT_EQ(cc.circuit.postselect().size(), 7u);
    EXPECT_EQ(cc.circuit.n_qubits(), 8u);
    EXPECT_EQ(depth(cc.circuit), 3u);
    EXPECT_TRUE(is_valid_layering(cc.circuit, cc.layers));
    EXPECT_EQ(cc.layers.depth(), 3u);
}

TEST(Compress, PostselectedDistributionIsPreserved) {
    TestRng rng(1234);
    for (auto form : {TeleportForm::kCz, TeleportForm::kCnot}) {
        for (int trial = 0; trial < 15; trial++) {
            std::size_t n = 2 + rng() % 2;
            Circuit c = random_small_circuit(rng, n, 4, 3, GateSet::kElementary);
            auto cc = compress_depth3(c, form);
            EXPECT_EQ(depth(cc.circuit), 3u);
            Bits x = random_bits(rng, c.n_inputs());
            double scale = std::ldexp(1.0, -static_cast<int>(cc.b()));
            std::vector<Qubit> tele(cc.postselection_qubits);
            EXPECT_NEAR(dense_condition_probability(cc.circuit, x, tele, zeros(tele.size())), scale, 1e-12);
            auto want = dense_postselected(c, x);
            auto got = dense_postselected(cc.circuit, x);
            EXPECT_LT(max_abs_difference(got, want), 1e-10);
        }
    }
}

TEST(Compress, ShallowCircuitsKeepTheirDepth) {
    Circuit c(2, QubitRole::input());
    c.append(Gate::h(0)).append(Gate::h(1));
    c.set_outputs({1});
    auto cc = compress_depth3(c);
    EXPECT_EQ(cc.b(), 0u);
    EXPECT_EQ(depth(cc.circuit), 1u);
    Circuit bad(1);
    bad.append(Gate::composite({0}, Matrix::Identity(2, 2)));
    EXPECT_THROW(compress_depth3(bad), DomainError);
}

TEST(Compress, ManifestListsOriginMap) {
    auto cc = compress_depth3(two_qubit_example());
    auto j = construction_manifest(cc);
    EXPECT_EQ(j["origin_map"].size(), 2u);
    EXPECT_EQ(j["postselect"].size(), 7u);
    EXPECT_EQ(j["roles"].size(), 8u);
}

Circuit example_a() {
    return with_postselection_outputs(compress_depth3(two_qubit_example()).circuit);
}

TEST(En, OutputIdentity) {
    Circuit a = example_a();
    auto en = build_En(a);
    EXPECT_EQ(en.b, 6u);
    EXPECT_EQ(en.m, 3u);
    EXPECT_EQ(en.circuit.n_qubits(), 12u);
    for (const auto &xs : {"00", "01", "10", "11"}) {
        Bits x = parse_bits(xs);
        auto de = output_distribution(en.circuit, x);
        auto da = output_distribution(a, x);
        for (char y : {'0', '1'}) {
            EXPECT_NEAR(de.prob(zeros(en.m) + y), da.prob(zeros(en.b + 1) + y), 1e-10);
        }
    }
    EXPECT_THROW(build_En(two_qubit_example()), ValidationError);
}

TEST(En, ConjugatedCircuitIsCommutingAndFiveLocal) {
    Circuit a = example_a();
    auto en = build_En(a);
    Circuit conj = build_conjugated_En(a);
    EXPECT_TRUE(check_pairwise_commuting(conj).pass);
    auto loc = check_c_local(conj, 5);
    EXPECT_TRUE(loc.pass) << "max support " << loc.max_support;
    EXPECT_EQ(conj.gates().size(), en.middle.size());
    for (const auto &xs : {"00", "01", "10", "11"}) {
        Bits x = parse_bits(xs);
        EXPECT_LT(max_abs_difference(output_distribution(conj, x), output_distribution(en.circuit, x)), 1e-10);
    }
}

TEST(En, CnotTeleportFormIsNotFiveLocal) {
    Circuit a = with_postselection_outputs(compress_depth3(two_qubit_example(), TeleportForm::kCnot).circuit);
    auto loc = check_c_local(build_conjugated_En(a), 5);
    EXPECT_FALSE(loc.pass);
    EXPECT_EQ(loc.max_support, 6u);
}

TEST(En, ConjugateRespectsCaps) {
    Circuit a = example_a();
    auto en = build_En(a, false);
    ConjugateOptions tight;
    tight.max_arity = 2;
    EXPECT_THROW(conjugate_commuting(en.a_embedded, en.middle, tight), DomainError);
    ConjugateOptions cone;
    cone.max_cone = 2;
    EXPECT_THROW(conjugate_commuting(en.a_embedded, en.middle, cone), DomainError);
}

TEST(Magic, StateAndGadget) {
    auto phi = magic_state();
    EXPECT_NEAR(std::abs(phi[0] - Complex(std::sqrt(0.5))), 0, 1e-15);
    EXPECT_NEAR(std::abs(phi[1] - std::polar(std::sqrt(0.5), M_PI / 4)), 0, 1e-15);
}

TEST(Magic, CompiledCircuitIsCliffordAndEquivalent) {
    TestRng rng(55);
    for (int trial = 0; trial < 20; trial++) {
        std::size_t n = 2 + rng() % 2;
        Circuit c(n, QubitRole::input());
        c.append(random_gates(rng, n, 8, GateSet::kClifford));
        std::size_t t_count = 1 + rng() % 3;
        for (std::size_t i = 0; i < t_count; i++) {
            auto pos = rng() % (c.gates().size() + 1);
            auto gs = c.gates();
            gs.insert(gs.begin() + static_cast<std::ptrdiff_t>(pos), Gate::t(static_cast<Qubit>(rng() % n)));
            c.set_gates(gs);
        }
        c.set_postselect({0});
        c.set_outputs({static_cast<Qubit>(n - 1)});
        auto mc = magic_compile(c);
        ASSERT_EQ(mc.gadget_qubits.size(), t_count);
        for (const auto &g : mc.circuit.gates()) {
            EXPECT_TRUE(is_clifford(g));
        }
        Bits x = random_bits(rng, n);
        // each gadget succeeds with probability 1/2 on its own
        double p = dense_condition_probability(mc.circuit, x, mc.gadget_qubits, zeros(t_count));
        EXPECT_NEAR(p, std::ldexp(1.0, -static_cast<int>(t_count)), 1e-10);
        for (auto q : mc.gadget_qubits) {
            EXPECT_NEAR(dense_condition_probability(mc.circuit, x, {q}, "0"), 0.5, 1e-10);
        }
        if (dense_condition_probability(c, x, c.postselect(), "0") > 1e-9) {
            EXPECT_LT(max_abs_difference(dense_postselected(mc.circuit, x), dense_postselected(c, x)), 1e-10);
        }
    }
    Circuit bad(1);
    bad.append(Gate::phase(0, 1, 4));
    EXPECT_THROW(magic_compile(bad), DomainError);
}

TEST(EnPrime, FanoutDecompositionMatches) {
    TestRng rng(9);
    Circuit c = random_small_circuit(rng, 2, 4, 3, GateSet::kClifford);
    auto gs = c.gates();
    gs.insert(gs.begin() + 1, Gate::t(0));
    gs.push_back(Gate::t(1));
    c.set_gates(gs);
    auto mc = magic_compile(c);
    Circuit a = with_postselection_outputs(mc.circuit);
    auto ep = build_En_prime(a);
    EXPECT_EQ(ep.b, 2u);
    auto fd = decompose_fanout_or(ep.circuit, ep.middle);
    EXPECT_TRUE(audit_non_clifford_layer(fd.circuit).span_disjoint);
    std::vector<Qubit> outs = ep.circuit.outputs();
    for (const auto &xs : {"00", "01", "10", "11"}) {
        Bits x = parse_bits(xs);
        auto want = output_distribution(ep.circuit, x);
        auto got = output_distribution(fd.circuit, x, outs);
        EXPECT_LT(max_abs_difference(got, want), 1e-10);
    }
}

TEST(EnPrime, FanoutAuditShowsOneNonCliffordLayer) {
    auto fd = fanout_or_reduction(3);
    auto audit = audit_non_clifford_layer(fd.circuit);
    EXPECT_TRUE(audit.single_layer());
    // level-1 controlled phases are CZ gates, so b * (m - 1) gates are non-Clifford
    EXPECT_EQ(audit.non_clifford.size(), 3u * (or_ancilla_count(3) - 1));
    EXPECT_GE(audit.span_begin, fd.layer_begin);
    EXPECT_LT(audit.span_end, fd.layer_end);
    // the undecomposed reduction spreads its controlled phases over many layers
    EXPECT_FALSE(audit_non_clifford_layer(or_reduction_noncommuting(3)).single_layer());
    for (std::size_t b = 1; b <= 3; b++) {
        auto f = fanout_or_reduction(b);
        Circuit plain = or_reduction_noncommuting(b);
        for (std::uint64_t x = 0; x < (1u << b); x++) {
            Bits bits = parse_bits(index_to_bits(x, b));
            EXPECT_LT(
                max_abs_difference(
                    output_distribution(f.circuit, bits, plain.outputs()), output_distribution(plain, bits)),
                1e-10);
        }
    }
}

TEST(Fanout, TargetsMustBeFreshZeroAncillas) {
    Circuit c(3);
    std::vector<Qubit> targets{1, 2};
    append_fanout(c, 0, targets);
    EXPECT_EQ(c.gates().size(), 2u);
    Circuit d(3);
    d.set_role(2, QubitRole::input());
    EXPECT_THROW(append_fanout(d, 0, targets), ValidationError);
    Circuit e(3);
    e.append(Gate::h(1));
    EXPECT_THROW(append_fanout(e, 0, targets), ValidationError);
    EXPECT_EQ(fanout(0, targets), (std::vector<Gate>{Gate::cnot(0, 1), Gate::cnot(0, 2)}));
}

}  // namespace
}  // namespace commq
