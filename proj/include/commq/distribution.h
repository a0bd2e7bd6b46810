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

#ifndef COMMQ_DISTRIBUTION_H
#define COMMQ_DISTRIBUTION_H

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "commq/bits.h"

namespace commq {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one draw, so streams
/// are identical across standard libraries.
double uniform01(Rng &rng);

/// Generator for shot `index` of a run seeded with `seed`. Streams for distinct
/// indices are independent of scheduling order.
Rng derived_rng(std::uint64_t seed, std::uint64_t index);

/// Dense probability table over {0,1}^width. Outcome strings map to indices
/// with character i as bit i.
class Distribution {
   public:
    Distribution() = default;
    Distribution(std::size_t width, std::vector<double> probs);

    static Distribution point(std::string_view outcome);

    std::size_t width() const {
        return width_;
    }
    std::size_t size() const {
        return probs_.size();
    }
    const std::vector<double> &probs() const {
        return probs_;
    }
    double operator[](std::size_t index) const {
        return probs_[index];
    }
    /// Probability of an outcome string of length width().
    double prob(std::string_view outcome) const;
    std::string outcome(std::size_t index) const {
        return index_to_bits(index, width_);
    }
    double total() const;

   private:
    std::size_t width_ = 0;
    std::vector<double> probs_{1.0};
};

/// Dense outcome counts indexed like Distribution.
struct Counts {
    std::size_t width = 0;
    std::vector<std::uint64_t> counts;
    std::uint64_t shots() const;
};

std::size_t sample_index(const Distribution &dist, Rng &rng);

/// `shots` seeded draws. Identical seeds give identical counts.
Counts sample(const Distribution &dist, std::uint64_t seed, std::uint64_t shots);

Distribution empirical(const Counts &counts);

/// (1/2) * sum |p - q|. Throws ContractError if widths differ.
double total_variation(const Distribution &a, const Distribution &b);
double max_abs_difference(const Distribution &a, const Distribution &b);

/// {"outcomes": {"01": 0.5, ...}, "qubits": [...]}; zero-probability outcomes are kept.
nlohmann::json distribution_to_json(const Distribution &dist, std::span<const Qubit> qubits);
nlohmann::json counts_to_json(const Counts &counts);
/// Accepts sparse "outcomes" maps; missing outcomes have probability zero.
Distribution distribution_from_json(const nlohmann::json &j);

/// Aligned two-column text table, one row per outcome (zeros included).
std::string format_table(const Distribution &dist);

}  // namespace commq

#endif
