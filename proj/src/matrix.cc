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

#include "commq/matrix.h"

#include <vector>

#include "commq/error.h"

namespace commq {

double max_abs(const Matrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_difference(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ContractError("matrix shapes differ");
    }
    return max_abs(a - b);
}

double unitarity_defect(const Matrix &u) {
    if (u.rows() != u.cols()) {
        return INFINITY;
    }
    return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

namespace {

// offsets[j] = register index bits selected by local list-ordered index j
std::vector<std::size_t> local_offsets(std::span<const Qubit> qubits) {
    std::size_t k = qubits.size();
    std::vector<std::size_t> offsets(std::size_t{1} << k, 0);
    for (std::size_t j = 0; j < offsets.size(); j++) {
        for (std::size_t i = 0; i < k; i++) {
            if ((j >> (k - 1 - i)) & 1) {
                offsets[j] |= std::size_t{1} << qubits[i];
            }
        }
    }
    return offsets;
}

std::size_t qubit_mask(std::span<const Qubit> qubits, std::size_t size) {
    std::size_t mask = 0;
    for (auto q : qubits) {
        if ((std::size_t{1} << q) >= size) {
            throw ContractError("qubit " + std::to_string(q) + " outside register");
        }
        mask |= std::size_t{1} << q;
    }
    return mask;
}

}  // namespace

void apply_matrix(std::span<Complex> amps, std::span<const Qubit> qubits, const Matrix &m) {
    std::size_t dim = std::size_t{1} << qubits.size();
    if (static_cast<std::size_t>(m.rows()) != dim || static_cast<std::size_t>(m.cols()) != dim) {
        throw ContractError("matrix dimension does not match qubit count");
    }
    std::size_t mask = qubit_mask(qubits, amps.size());
    if (qubits.size() == 1) {
        std::size_t bit = mask;
        Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
        for (std::size_t i = 0; i < amps.size(); i++) {
            if (i & bit) {
                continue;
            }
            Complex a = amps[i], b = amps[i | bit];
            amps[i] = m00 * a + m01 * b;
            amps[i | bit] = m10 * a + m11 * b;
        }
        return;
    }
    auto offsets = local_offsets(qubits);
    std::vector<Complex> in(dim), out(dim);
    for (std::size_t base = 0; base < amps.size(); base++) {
        if (base & mask) {
            continue;
        }
        for (std::size_t j = 0; j < dim; j++) {
            in[j] = amps[base | offsets[j]];
        }
        for (std::size_t r = 0; r < dim; r++) {
            Complex acc = 0;
            for (std::size_t c = 0; c < dim; c++) {
                acc += m(r, c) * in[c];
            }
            out[r] = acc;
        }
        for (std::size_t j = 0; j < dim; j++) {
            amps[base | offsets[j]] = out[j];
        }
    }
}

void apply_diagonal(std::span<Complex> amps, std::span<const Qubit> qubits, std::span<const Complex> diag) {
    std::size_t dim = std::size_t{1} << qubits.size();
    if (diag.size() != dim) {
        throw ContractError("diagonal length does not match qubit count");
    }
    std::size_t mask = qubit_mask(qubits, amps.size());
    auto offsets = local_offsets(qubits);
    for (std::size_t base = 0; base < amps.size(); base++) {
        if (base & mask) {
            continue;
        }
        for (std::size_t j = 0; j < dim; j++) {
            amps[base | offsets[j]] *= diag[j];
        }
    }
}

Matrix reverse_qubit_order(const Matrix &m, std::size_t k) {
    std::size_t dim = std::size_t{1} << k;
    std::vector<std::size_t> perm(dim);
    for (std::size_t j = 0; j < dim; j++) {
        std::size_t r = 0;
        for (std::size_t i = 0; i < k; i++) {
            if ((j >> i) & 1) {
                r |= std::size_t{1} << (k - 1 - i);
            }
        }
        perm[j] = r;
    }
    Matrix out(dim, dim);
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            out(perm[r], perm[c]) = m(r, c);
        }
    }
    return out;
}

}  // namespace commq
