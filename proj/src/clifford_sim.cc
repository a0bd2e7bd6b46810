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

#include "commq/clifford_sim.h"

#include <bit>

#include "commq/error.h"
#include "commq/parallel.h"

namespace commq {

double pairwise_sum(std::span<const double> values) {
    if (values.empty()) {
        return 0;
    }
    if (values.size() == 1) {
        return values[0];
    }
    std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

PauliString heisenberg(const Circuit &circuit, PauliString p) {
    const auto &gs = circuit.gates();
    for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
        conjugate_in_place(p, *it);
    }
    return p;
}

StrongSimResult strong_sim_marginal(
    const Circuit &circuit,
    const Bits &input,
    std::span<const Qubit> qubits,
    std::string_view y,
    const StrongSimOptions &options) {
    std::size_t l = qubits.size();
    if (l > options.max_outputs) {
        throw ResourceError(std::to_string(l) + " measured qubits exceeds the strong simulation cap of " +
                            std::to_string(options.max_outputs));
    }
    if (y.size() != l) {
        throw ContractError("outcome '" + std::string(y) + "' does not match " + std::to_string(l) + " measured qubits");
    }
    for (std::size_t i = 0; i < circuit.gates().size(); i++) {
        if (!is_clifford(circuit.gates()[i])) {
            throw DomainError("gate " + std::to_string(i) + " " + circuit.gates()[i].str() + " is not Clifford");
        }
    }
    std::uint64_t y_index = bits_to_index(y);
    auto states = product_input_state(circuit, input);
    std::size_t n = circuit.n_qubits();

    // C^dagger Z(S) C is the product of the images of the single Z's.
    std::vector<PauliString> images;
    images.reserve(l);
    for (auto q : qubits) {
        Qubit one[1] = {q};
        images.push_back(heisenberg(circuit, PauliString::z_on(n, one)));
    }

    std::size_t n_terms = std::size_t{1} << l;
    std::vector<double> terms(n_terms);
    parallel_for(n_terms, options.threads, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t mask = begin; mask < end; mask++) {
            PauliString p(n);
            for (std::size_t j = 0; j < l; j++) {
                if ((mask >> j) & 1) {
                    p *= images[j];
                }
            }
            double sign = (std::popcount(mask & y_index) & 1) ? -1.0 : 1.0;
            terms[mask] = sign * expectation_product(p, states);
        }
    });
    StrongSimResult result;
    result.probability = pairwise_sum(terms) / static_cast<double>(n_terms);
    if (options.keep_terms) {
        result.terms = std::move(terms);
    }
    return result;
}

StrongSimResult strong_sim(
    const Circuit &circuit, const Bits &input, std::string_view y, const StrongSimOptions &options) {
    return strong_sim_marginal(circuit, input, circuit.outputs(), y, options);
}

}  // namespace commq
