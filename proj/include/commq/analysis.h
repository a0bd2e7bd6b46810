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

#ifndef COMMQ_ANALYSIS_H
#define COMMQ_ANALYSIS_H

#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "commq/circuit.h"

namespace commq {

/// Global default tolerance for the numerical checks in this module.
inline constexpr double kDefaultTolerance = 1e-9;

/// Largest joint register a pairwise check or support computation will materialise.
inline constexpr std::size_t kMaxAnalysisQubits = 12;

struct CommutationWitness {
    std::size_t first;
    std::size_t second;
    double magnitude;
};

struct CommutationReport {
    bool pass = true;
    /// First failing pair in lexicographic order.
    std::optional<CommutationWitness> witness;
    /// Largest commutator entry seen over all checked pairs.
    double max_residual = 0;
    std::size_t pairs_checked = 0;
};

struct AnalysisOptions {
    double tolerance = kDefaultTolerance;
    unsigned threads = 1;
};

/// Checks ||U_i U_j - U_j U_i||_max <= tolerance for every unordered gate pair,
/// each pair embedded on the union of its qubits only. Disjoint pairs commute
/// exactly and are skipped. Throws ResourceError naming the pair if a union
/// exceeds kMaxAnalysisQubits.
CommutationReport check_pairwise_commuting(const Circuit &circuit, const AnalysisOptions &options = {});

/// Minimal set of qubit positions an operator acts on non-trivially.
struct SupportSet {
    /// Positions in the operator's list order, ascending.
    std::vector<std::size_t> positions;
    /// The operator restricted to `positions` (list-ordered).
    Matrix restricted;
    /// max |U - embed(restricted)|.
    double residual = 0;
};

/// Position q is outside the support iff U commutes with X_q and Z_q within
/// tolerance; the restriction is read off the block where the other positions
/// are 0 and checked by re-embedding. `u` is list-ordered over k qubits.
SupportSet support(const Matrix &u, double tolerance = kDefaultTolerance);

/// list-ordered matrix of `restricted` (on `positions`) tensored with identity on k qubits.
Matrix embed_operator(const Matrix &restricted, std::span<const std::size_t> positions, std::size_t k);

struct LocalityReport {
    bool pass = true;
    std::size_t bound = 0;
    /// Support size of every gate, in circuit order.
    std::vector<std::size_t> support_sizes;
    std::size_t max_support = 0;
};

/// Every gate's support (computed numerically) has at most `bound` qubits.
LocalityReport check_c_local(const Circuit &circuit, std::size_t bound, double tolerance = kDefaultTolerance);

nlohmann::json to_json(const CommutationReport &report);
nlohmann::json to_json(const LocalityReport &report);

}  // namespace commq

#endif
