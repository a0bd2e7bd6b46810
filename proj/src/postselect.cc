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

#include "commq/postselect.h"

#include <cmath>
#include <vector>

#include "commq/error.h"
#include "commq/parallel.h"

namespace commq {

PostselectOutcome filter(std::string_view y) {
    if (y.size() < 2) {
        throw ContractError("postselect filter needs at least 2 bits, got '" + std::string(y) + "'");
    }
    return filter(bits_to_index(y), y.size());
}

PostselectOutcome filter(std::uint64_t outcome_index, std::size_t width) {
    if (width < 2 || width > 64) {
        throw ContractError("postselect filter width must be in [2, 64]");
    }
    std::uint64_t prefix_mask = (width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1) >> 1;
    if ((outcome_index & prefix_mask) != 0) {
        return {1, 1};
    }
    return {0, static_cast<std::uint8_t>((outcome_index >> (width - 1)) & 1)};
}

std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n, double z) {
    if (n == 0) {
        return {0.0, 1.0};
    }
    double nn = static_cast<double>(n);
    double p = static_cast<double>(k) / nn;
    double z2 = z * z;
    double denom = 1 + z2 / nn;
    double center = (p + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

AcceptanceEstimate conditional_acceptance_exact(const Distribution &dist, double min_mass) {
    if (dist.width() < 2) {
        throw ContractError("conditional acceptance needs outcomes of at least 2 bits");
    }
    AcceptanceEstimate e;
    e.exact = true;
    e.mass_zero = dist[0];
    e.mass_one = dist[std::size_t{1} << (dist.width() - 1)];
    double mass = e.mass_one + e.mass_zero;
    if (!(mass > min_mass)) {
        e.status = AcceptanceStatus::kNoPostselectionMass;
        return e;
    }
    e.value = e.mass_one / mass;
    e.lower = e.value;
    e.upper = e.value;
    return e;
}

AcceptanceEstimate conditional_acceptance(
    const OutcomeSampler &sampler, std::size_t width, std::uint64_t shots, std::uint64_t seed, unsigned threads) {
    if (shots == 0) {
        throw ContractError("conditional acceptance needs at least one shot");
    }
    std::size_t chunks = chunk_count(shots, threads);
    std::vector<std::uint64_t> post_zero(chunks, 0), accepted(chunks, 0);
    parallel_for(shots, threads, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        for (std::size_t i = begin; i < end; i++) {
            Rng rng = derived_rng(seed, i);
            auto o = filter(sampler(rng), width);
            if (o.post == 0) {
                post_zero[chunk]++;
                accepted[chunk] += o.out;
            }
        }
    });
    AcceptanceEstimate e;
    e.shots = shots;
    for (std::size_t c = 0; c < chunks; c++) {
        e.post_zero += post_zero[c];
        e.accepted += accepted[c];
    }
    if (e.post_zero == 0) {
        e.status = AcceptanceStatus::kNoPostselectionMass;
        return e;
    }
    e.value = static_cast<double>(e.accepted) / static_cast<double>(e.post_zero);
    std::tie(e.lower, e.upper) = wilson_interval(e.accepted, e.post_zero);
    return e;
}

std::string classify(const AcceptanceEstimate &estimate, double accept_at, double reject_at) {
    if (estimate.status != AcceptanceStatus::kOk) {
        return "undecided";
    }
    if (estimate.lower >= accept_at) {
        return "accept";
    }
    if (estimate.upper <= reject_at) {
        return "reject";
    }
    return "undecided";
}

nlohmann::json to_json(const AcceptanceEstimate &estimate) {
    nlohmann::json j;
    j["status"] = estimate.status == AcceptanceStatus::kOk ? "ok" : "no postselection mass";
    j["exact"] = estimate.exact;
    if (estimate.status == AcceptanceStatus::kOk) {
        j["value"] = estimate.value;
        j["interval"] = {estimate.lower, estimate.upper};
    } else {
        j["value"] = nullptr;
        j["interval"] = nullptr;
    }
    if (estimate.exact) {
        j["mass_one"] = estimate.mass_one;
        j["mass_zero"] = estimate.mass_zero;
    } else {
        j["shots"] = estimate.shots;
        j["post_zero"] = estimate.post_zero;
        j["accepted"] = estimate.accepted;
    }
    return j;
}

}  // namespace commq
