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

#ifndef COMMQ_STATEVECTOR_H
#define COMMQ_STATEVECTOR_H

#include <span>
#include <string>
#include <vector>

#include "commq/circuit.h"
#include "commq/distribution.h"

namespace commq {

struct SimOptions {
    std::size_t max_qubits = 24;
    /// Allowed | ||psi||^2 - 1 | after each gate.
    double norm_tolerance = 1e-9;
    /// Conditions with smaller probability are rejected as unconditionable.
    double min_condition_probability = 1e-20;
};

/// Dense little-endian state: qubit q is bit q of the amplitude index.
class StateVector {
   public:
    explicit StateVector(std::size_t n_qubits);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    std::span<Complex> amplitudes() {
        return amps_;
    }
    std::span<const Complex> amplitudes() const {
        return amps_;
    }
    Complex operator[](std::size_t index) const {
        return amps_[index];
    }
    double norm_squared() const;

   private:
    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

/// A set of qubits together with the outcome they are conditioned on.
struct Condition {
    std::vector<Qubit> qubits;
    std::string outcome;
};

/// |x_i> on inputs, |0> on zero ancillas, the given state on product ancillas.
/// Throws ResourceError above the qubit cap and ContractError on input-length mismatch.
StateVector prepare(const Circuit &circuit, const Bits &input, const SimOptions &options = {});

/// Applies one gate in place (no norm check).
void apply_gate(StateVector &state, const Gate &gate);

/// Applies every gate, checking the norm after each one (ConsistencyError on drift).
StateVector apply(const Circuit &circuit, StateVector state, const SimOptions &options = {});

/// prepare + apply.
StateVector run(const Circuit &circuit, const Bits &input, const SimOptions &options = {});

/// Z-basis measurement distribution of `qubits`, marginalising the rest.
Distribution marginal(const StateVector &state, std::span<const Qubit> qubits);

Distribution output_distribution(
    const Circuit &circuit, const Bits &input, std::span<const Qubit> qubits, const SimOptions &options = {});
/// Over circuit.outputs().
Distribution output_distribution(const Circuit &circuit, const Bits &input, const SimOptions &options = {});

double condition_probability(const StateVector &state, const Condition &condition);

/// Distribution of `target` given `condition`, by exact projection and
/// renormalisation. Throws UnconditionableError when Pr[condition] is below
/// options.min_condition_probability.
Distribution conditional_distribution(
    const StateVector &state,
    const Condition &condition,
    std::span<const Qubit> target,
    const SimOptions &options = {});
Distribution conditional_distribution(
    const Circuit &circuit,
    const Bits &input,
    const Condition &condition,
    std::span<const Qubit> target,
    const SimOptions &options = {});

/// The post-measurement state given `condition`, renormalised.
StateVector project(const StateVector &state, const Condition &condition, const SimOptions &options = {});

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

/// Full unitary of the circuit's gates on a little-endian register.
Matrix circuit_unitary(const Circuit &circuit, const SimOptions &options = {});

/// Unitary of `gates` on a local little-endian register where local qubit i is
/// `register_qubits[i]`. Every gate must act inside the register.
Matrix local_unitary(std::span<const Gate> gates, std::span<const Qubit> register_qubits);

}  // namespace commq

#endif
