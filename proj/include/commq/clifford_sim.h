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

#ifndef COMMQ_CLIFFORD_SIM_H
#define COMMQ_CLIFFORD_SIM_H

#include <span>
#include <string_view>
#include <vector>

#include "commq/circuit.h"
#include "commq/pauli.h"

namespace commq {

/// Strong simulation of Clifford circuits on product-state inputs.
///
/// Pr[y] = 2^-l * sum_S (-1)^{|S & y|} <psi| C^dagger Z(S) C |psi>, with the
/// Heisenberg-picture string C^dagger Z(S) C obtained by conjugating Z(S)
/// backwards through the gate list. Cost is O(2^l * gates * qubits), so l
/// (the number of measured qubits) is meant to stay logarithmic; it is capped
/// by `max_outputs`.
struct StrongSimOptions {
    std::size_t max_outputs = 20;
    /// Subset sums are split across this many threads; the reduction order is
    /// fixed, so the result does not depend on it.
    unsigned threads = 1;
    /// Keep the per-subset terms in the result.
    bool keep_terms = false;
};

struct StrongSimResult {
    double probability = 0;
    /// terms[mask] = (-1)^{|S & y|} <psi| C^dagger Z(S) C |psi>, S given by the mask bits.
    std::vector<double> terms;
};

/// Pr[qubits = y] for the listed qubits (any subset of the register).
StrongSimResult strong_sim_marginal(
    const Circuit &circuit,
    const Bits &input,
    std::span<const Qubit> qubits,
    std::string_view y,
    const StrongSimOptions &options = {});

/// Pr[outputs = y] over circuit.outputs().
StrongSimResult strong_sim(
    const Circuit &circuit, const Bits &input, std::string_view y, const StrongSimOptions &options = {});

/// C^dagger * p * C, conjugating backwards from the last gate.
PauliString heisenberg(const Circuit &circuit, PauliString p);

/// Sum in a fixed pairwise tree order.
double pairwise_sum(std::span<const double> values);

}  // namespace commq

#endif
