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

#include "commq/constructions.h"
#include "commq/error.h"
#include "commq/postselect.h"
#include "commq/statevector.h"
#include "oracle.h"

namespace commq {
namespace {

using namespace commq::testing;

TEST(Filter, ThreeCases) {
    EXPECT_EQ(filter("0001"), (PostselectOutcome{0, 1}));
    EXPECT_EQ(filter("0000"), (PostselectOutcome{0, 0}));
    EXPECT_EQ(filter("0101"), (PostselectOutcome{1, 1}));
    EXPECT_THROW(filter("0"), ContractError);
    EXPECT_THROW(filter(""), ContractError);
}

TEST(Filter, ExhaustivePartition) {
    for (std::size_t b = 0; b <= 4; b++) {
        std::size_t w = b + 2;
        std::size_t post_zero = 0;
        for (std::uint64_t y = 0; y < (1u << w); y++) {
            auto s = index_to_bits(y, w);
            auto o = filter(s);
            EXPECT_EQ(o, filter(y, w));
            bool prefix_zero = s.substr(0, w - 1) == std::string(w - 1, '0');
            if (prefix_zero) {
                post_zero++;
                EXPECT_EQ(o.post, 0);
                EXPECT_EQ(o.out, s.back() == '1' ? 1 : 0);
            } else {
                EXPECT_EQ(o, (PostselectOutcome{1, 1}));
            }
        }
        EXPECT_EQ(post_zero, 2u);
    }
}

TEST(Acceptance, ExactRatio) {
    std::vector<double> p(16, 0.0);
    p[bits_to_index("0001")] = 0.2;
    p[bits_to_index("0000")] = 0.1;
    p[bits_to_index("0101")] = 0.7;
    auto e = conditional_acceptance_exact(Distribution(4, p));
    EXPECT_EQ(e.status, AcceptanceStatus::kOk);
    EXPECT_NEAR(e.value, 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(e.mass_one + e.mass_zero, 0.3, 1e-15);
    auto j = to_json(e);
    EXPECT_TRUE(j["exact"].get<bool>());
}

TEST(Acceptance, NoMassIsExplicit) {
    auto e = conditional_acceptance_exact(Distribution::point("0101"));
    EXPECT_EQ(e.status, AcceptanceStatus::kNoPostselectionMass);
    EXPECT_TRUE(to_json(e)["value"].is_null());
    EXPECT_EQ(classify(e, 0.6, 0.4), "undecided");
    OutcomeSampler never = [](Rng &) { return std::uint64_t{3}; };
    auto s = conditional_acceptance(never, 3, 100, 1);
    EXPECT_EQ(s.status, AcceptanceStatus::kNoPostselectionMass);
    EXPECT_EQ(s.post_zero, 0u);
}

TEST(Acceptance, ExactModeMatchesConditionalOracle) {
    TestRng rng(8);
    for (int trial = 0; trial < 10; trial++) {
        Circuit c = random_small_circuit(rng, 3, 6, 2, GateSet::kElementary);
        c.set_postselect({0, 1});
        Circuit a = with_postselection_outputs(c);
        Bits x = random_bits(rng, 3);
        auto dist = output_distribution(a, x);
        auto e = conditional_acceptance_exact(dist);
        double pz = dense_condition_probability(c, x, {0, 1}, "00");
        if (pz < 1e-9) {
            continue;
        }
        auto cond = dense_conditional(c, x, {0, 1}, "00", {2});
        EXPECT_NEAR(e.value, cond[1], 1e-10);
        EXPECT_NEAR(e.mass_one + e.mass_zero, pz, 1e-10);
    }
}

TEST(Acceptance, SeededRunCoversExactValue) {
    std::vector<double> p(8, 0.0);
    p[0] = 0.15;
    p[bits_to_index("001")] = 0.3;
    p[bits_to_index("110")] = 0.55;
    Distribution d(3, p);
    OutcomeSampler sampler = [&](Rng &rng) { return static_cast<std::uint64_t>(sample_index(d, rng)); };
    auto e1 = conditional_acceptance(sampler, 3, 100000, 2026, 1);
    auto e4 = conditional_acceptance(sampler, 3, 100000, 2026, 4);
    EXPECT_EQ(e1.accepted, e4.accepted);
    EXPECT_EQ(e1.post_zero, e4.post_zero);
    EXPECT_LE(e1.lower, 2.0 / 3.0);
    EXPECT_GE(e1.upper, 2.0 / 3.0);
    EXPECT_EQ(classify(e1, 0.6, 0.4), "accept");
    EXPECT_THROW(conditional_acceptance(sampler, 3, 0, 1), ContractError);
}

TEST(Acceptance, WilsonInterval) {
    auto [lo, hi] = wilson_interval(50, 100);
    EXPECT_NEAR((lo + hi) / 2, 0.5, 1e-12);
    EXPECT_LT(lo, 0.5);
    EXPECT_GT(hi, 0.5);
    auto [l0, h0] = wilson_interval(0, 10);
    EXPECT_EQ(l0, 0.0);
    EXPECT_GT(h0, 0.0);
}

}  // namespace
}  // namespace commq
