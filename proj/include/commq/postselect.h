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

#ifndef COMMQ_POSTSELECT_H
#define COMMQ_POSTSELECT_H

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "commq/distribution.h"

namespace commq {

struct PostselectOutcome {
    std::uint8_t post = 1;
    std::uint8_t out = 1;
    bool operator==(const PostselectOutcome &) const = default;
};

/// y = 0^{b+1}1 -> (0, 1); y = 0^{b+1}0 -> (0, 0); anything else -> (1, 1).
/// Throws ContractError when |y| < 2.
PostselectOutcome filter(std::string_view y);
PostselectOutcome filter(std::uint64_t outcome_index, std::size_t width);

/// Draws one outcome index over {0,1}^width.
using OutcomeSampler = std::function<std::uint64_t(Rng &rng)>;

enum class AcceptanceStatus { kOk, kNoPostselectionMass };

struct AcceptanceEstimate {
    AcceptanceStatus status = AcceptanceStatus::kOk;
    bool exact = false;
    /// Pr[out = 1 | post = 0]; meaningful only when status is kOk.
    double value = 0;
    /// Wilson score interval at 99% (equal to value in exact mode).
    double lower = 0;
    double upper = 0;
    std::uint64_t shots = 0;
    std::uint64_t post_zero = 0;
    std::uint64_t accepted = 0;
    /// Exact mode only: Pr[0^{b+1}1] and Pr[0^{b+1}0].
    double mass_one = 0;
    double mass_zero = 0;
};

inline constexpr double kWilsonZ99 = 2.5758293035489004;

/// Ratio Pr[0^{b+1}1] / (Pr[0^{b+1}1] + Pr[0^{b+1}0]) read off `dist`.
AcceptanceEstimate conditional_acceptance_exact(const Distribution &dist, double min_mass = 1e-300);

/// Seeded estimate: shot i draws with derived_rng(seed, i) and is filtered.
AcceptanceEstimate conditional_acceptance(
    const OutcomeSampler &sampler, std::size_t width, std::uint64_t shots, std::uint64_t seed, unsigned threads = 1);

/// Wilson score interval for k successes out of n trials.
std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n, double z = kWilsonZ99);

/// "accept" if the interval lies at or above accept_at, "reject" if at or
/// below reject_at, otherwise "undecided" (also when there is no mass).
std::string classify(const AcceptanceEstimate &estimate, double accept_at, double reject_at);

nlohmann::json to_json(const AcceptanceEstimate &estimate);

}  // namespace commq

#endif
