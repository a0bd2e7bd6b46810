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

#include "commq/distribution.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "commq/error.h"

namespace commq {

double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Rng derived_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(index),
        static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

Distribution::Distribution(std::size_t width, std::vector<double> probs) : width_(width), probs_(std::move(probs)) {
    if (width >= 63 || probs_.size() != (std::size_t{1} << width)) {
        throw ContractError("distribution of width " + std::to_string(width) + " needs 2^width entries, got " +
                            std::to_string(probs_.size()));
    }
}

Distribution Distribution::point(std::string_view outcome) {
    std::vector<double> p(std::size_t{1} << outcome.size(), 0.0);
    p[bits_to_index(outcome)] = 1;
    return Distribution(outcome.size(), std::move(p));
}

double Distribution::prob(std::string_view outcome) const {
    if (outcome.size() != width_) {
        throw ContractError("outcome '" + std::string(outcome) + "' has width " + std::to_string(outcome.size()) +
                            ", expected " + std::to_string(width_));
    }
    return probs_[bits_to_index(outcome)];
}

double Distribution::total() const {
    return std::accumulate(probs_.begin(), probs_.end(), 0.0);
}

std::uint64_t Counts::shots() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::size_t sample_index(const Distribution &dist, Rng &rng) {
    double u = uniform01(rng) * dist.total();
    double acc = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < dist.size(); i++) {
        if (dist[i] <= 0) {
            continue;
        }
        acc += dist[i];
        last = i;
        if (u < acc) {
            return i;
        }
    }
    return last;
}

Counts sample(const Distribution &dist, std::uint64_t seed, std::uint64_t shots) {
    Counts out{dist.width(), std::vector<std::uint64_t>(dist.size(), 0)};
    std::vector<double> cumulative(dist.size());
    std::partial_sum(dist.probs().begin(), dist.probs().end(), cumulative.begin());
    double total = cumulative.empty() ? 0 : cumulative.back();
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; s++) {
        double u = uniform01(rng) * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t i = std::min<std::size_t>(it - cumulative.begin(), dist.size() - 1);
        // never land on a zero-probability tail entry through rounding
        while (i > 0 && dist[i] <= 0) {
            i--;
        }
        out.counts[i]++;
    }
    return out;
}

Distribution empirical(const Counts &counts) {
    auto n = counts.shots();
    std::vector<double> p(counts.counts.size(), 0.0);
    if (n > 0) {
        for (std::size_t i = 0; i < p.size(); i++) {
            p[i] = static_cast<double>(counts.counts[i]) / static_cast<double>(n);
        }
    }
    return Distribution(counts.width, std::move(p));
}

double total_variation(const Distribution &a, const Distribution &b) {
    if (a.width() != b.width()) {
        throw ContractError("total_variation: widths differ");
    }
    double s = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        s += std::abs(a[i] - b[i]);
    }
    return s / 2;
}

double max_abs_difference(const Distribution &a, const Distribution &b) {
    if (a.width() != b.width()) {
        throw ContractError("max_abs_difference: widths differ");
    }
    double m = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

nlohmann::json distribution_to_json(const Distribution &dist, std::span<const Qubit> qubits) {
    nlohmann::json outcomes = nlohmann::json::object();
    for (std::size_t i = 0; i < dist.size(); i++) {
        outcomes[dist.outcome(i)] = dist[i];
    }
    return {{"outcomes", outcomes}, {"qubits", std::vector<Qubit>(qubits.begin(), qubits.end())}};
}

nlohmann::json counts_to_json(const Counts &counts) {
    nlohmann::json c = nlohmann::json::object();
    for (std::size_t i = 0; i < counts.counts.size(); i++) {
        if (counts.counts[i]) {
            c[index_to_bits(i, counts.width)] = counts.counts[i];
        }
    }
    return {{"counts", c}, {"shots", counts.shots()}};
}

Distribution distribution_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("outcomes") || !j["outcomes"].is_object()) {
        throw ParseError("distribution needs an \"outcomes\" object", "/outcomes");
    }
    const auto &o = j["outcomes"];
    std::size_t width = 0;
    bool first = true;
    for (auto it = o.begin(); it != o.end(); ++it) {
        if (first) {
            width = it.key().size();
            first = false;
        } else if (it.key().size() != width) {
            throw ParseError("outcome strings differ in length", "/outcomes/" + it.key());
        }
    }
    if (j.contains("qubits") && j["qubits"].is_array() && first) {
        width = j["qubits"].size();
    }
    if (width > 30) {
        throw ResourceError("distribution wider than 30 bits");
    }
    std::vector<double> p(std::size_t{1} << width, 0.0);
    for (auto it = o.begin(); it != o.end(); ++it) {
        if (!it.value().is_number()) {
            throw ParseError("probability must be a number", "/outcomes/" + it.key());
        }
        std::uint64_t idx;
        try {
            idx = bits_to_index(it.key());
        } catch (const ContractError &e) {
            throw ParseError(e.what(), "/outcomes/" + it.key());
        }
        p[idx] = it.value().get<double>();
    }
    return Distribution(width, std::move(p));
}

std::string format_table(const Distribution &dist) {
    std::ostringstream out;
    std::size_t w = std::max<std::size_t>(dist.width(), 7);
    out << std::left << std::setw(static_cast<int>(w)) << "outcome" << "  probability\n";
    // same digits as the JSON writer
    for (std::size_t i = 0; i < dist.size(); i++) {
        out << std::left << std::setw(static_cast<int>(w)) << dist.outcome(i) << "  "
            << nlohmann::json(dist[i]).dump() << "\n";
    }
    return out.str();
}

}  // namespace commq
