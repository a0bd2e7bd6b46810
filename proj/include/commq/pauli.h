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

#ifndef COMMQ_PAULI_H
#define COMMQ_PAULI_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "commq/circuit.h"

namespace commq {

/// Letter codes: bit 0 is the X part, bit 1 the Z part. Y = i X Z.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p);

/// i^phase_exponent * (sigma_0 (x) sigma_1 (x) ...), letters packed two bits per qubit.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t n_qubits);
    /// "+XIZ", "-iYY", "iZ"; the sign prefix is optional.
    static PauliString parse(std::string_view text);
    /// Z on each qubit set in `qubits`.
    static PauliString z_on(std::size_t n_qubits, std::span<const Qubit> qubits);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    int phase_exponent() const {
        return phase_;
    }
    void set_phase_exponent(int e) {
        phase_ = ((e % 4) + 4) % 4;
    }
    void add_phase(int e) {
        set_phase_exponent(phase_ + e);
    }

    Pauli letter(std::size_t q) const {
        return static_cast<Pauli>((words_[q >> 5] >> (2 * (q & 31))) & 3u);
    }
    void set_letter(std::size_t q, Pauli p) {
        auto &w = words_[q >> 5];
        unsigned shift = 2 * (q & 31);
        w = (w & ~(std::uint64_t{3} << shift)) | (std::uint64_t(p) << shift);
    }

    /// Exact product, this * other.
    PauliString &operator*=(const PauliString &other);
    bool operator==(const PauliString &other) const = default;

    /// Dense little-endian matrix; for tests on a handful of qubits.
    Matrix to_matrix() const;
    std::string str() const;

   private:
    std::size_t n_qubits_ = 0;
    int phase_ = 0;
    std::vector<std::uint64_t> words_;
};

/// True for H, X, CZ, CNOT, PhaseShift with level <= 2 and ControlledPhase with level <= 1.
bool is_clifford(const Gate &gate);

/// g^dagger * p * g. Exact table arithmetic; throws DomainError for non-Clifford gates.
PauliString conjugate(const PauliString &p, const Gate &g);
void conjugate_in_place(PauliString &p, const Gate &g);

/// i^e * prod_q <psi_q| sigma_q |psi_q> over a product state, one state per qubit.
/// Throws ConsistencyError if the value is not real within 1e-12.
double expectation_product(const PauliString &p, std::span<const QubitState> qubit_states);
/// Inputs |x_1..x_n> followed by ancilla states, in letter order.
double expectation_product(const PauliString &p, const Bits &inputs, std::span<const QubitState> ancillas);

/// Per-qubit initial states of `circuit` for input x.
std::vector<QubitState> product_input_state(const Circuit &circuit, const Bits &input);

}  // namespace commq

#endif
