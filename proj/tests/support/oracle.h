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

#ifndef COMMQ_TESTS_ORACLE_H
#define COMMQ_TESTS_ORACLE_H

#include <random>
#include <vector>

#include "commq/circuit.h"
#include "commq/distribution.h"
#include "commq/weak_sim.h"

namespace commq::testing {

/// Full little-endian operator of one gate, built entry by entry from its
/// small matrix. Shares nothing with the statevector kernels.
Matrix kron_gate(const Gate &gate, std::size_t n_qubits);

/// Product of kron_gate over the circuit.
Matrix dense_unitary(const Circuit &circuit);

/// Kronecker product of the per-qubit initial states (qubit 0 least significant).
Eigen::VectorXcd dense_initial_state(const Circuit &circuit, const Bits &input);

Eigen::VectorXcd dense_final_state(const Circuit &circuit, const Bits &input);

/// Marginal over `qubits` of the final state.
Distribution dense_distribution(const Circuit &circuit, const Bits &input, const std::vector<Qubit> &qubits);

/// Pr[condition] and the conditional marginal, by brute-force summation.
double dense_condition_probability(
    const Circuit &circuit, const Bits &input, const std::vector<Qubit> &cond, const std::string &outcome);
Distribution dense_conditional(
    const Circuit &circuit,
    const Bits &input,
    const std::vector<Qubit> &cond,
    const std::string &outcome,
    const std::vector<Qubit> &target);

using TestRng = std::mt19937_64;

Bits random_bits(TestRng &rng, std::size_t n);
QubitState random_qubit_state(TestRng &rng);

/// Gate families for the generators.
enum class GateSet {
    kClifford,         // H, P, P^dagger, Z, X, CZ, CNOT
    kCliffordT,        // kClifford plus R(pi/4)
    kElementary,       // H, R(+-2pi/2^k) for k <= 4, CZ, X, CNOT, CR
    kDiagonal,         // R, CZ, CR
};

Gate random_gate(TestRng &rng, std::size_t n_qubits, GateSet set);
std::vector<Gate> random_gates(TestRng &rng, std::size_t n_qubits, std::size_t count, GateSet set);

/// Two inputs, no ancillas: H q0; CZ(q0, q1); H q0; R(2pi/2^3) q1. Postselects
/// q0, outputs q1. Three wire segments, so compression inserts three
/// teleportations (b = 6).
Circuit two_qubit_example();

/// Random circuit of exactly `gates` gates whose greedy depth is at least
/// `min_depth`, all qubits inputs, first qubit postselected, last one output.
Circuit random_small_circuit(TestRng &rng, std::size_t n_qubits, std::size_t gates, std::size_t min_depth, GateSet set);

/// Conditional law of the outputs given every postselection qubit reads 0.
Distribution dense_postselected(const Circuit &circuit, const Bits &input);

std::string zeros(std::size_t n);

/// n_inputs inputs, then n_anc ancillas each |0>, a random product state or
/// the magic state, then `gates` random Clifford gates. No outputs set.
Circuit random_clifford_instance(TestRng &rng, std::size_t n_inputs, std::size_t n_anc, std::size_t gates);

/// Random (F, D, l) with at most 12 qubits once assembled; iqp makes F a
/// layer of H on every qubit with all of them as outputs.
SandwichSpec random_sandwich_spec(TestRng &rng, bool iqp);

/// (F^dagger (x) H^l) D (F (x) H^l), built gate by gate without the library's assemble.
Circuit hand_assembled(const SandwichSpec &spec);

}  // namespace commq::testing

#endif
