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

#ifndef COMMQ_MATRIX_H
#define COMMQ_MATRIX_H

#include <complex>
#include <span>

#include <Eigen/Dense>

#include "commq/bits.h"

namespace commq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Small gate matrices list their qubits most-significant first: for a gate
/// on (q0, q1, ..., q_{k-1}) the local index bit (k-1-i) belongs to q_i, so a
/// two-qubit matrix is U_{q0} (x) U_{q1} in textbook order.
///
/// Registers (state vectors, embedded operators) are little-endian: qubit q is
/// bit q of the amplitude index.

double max_abs(const Matrix &m);
double max_abs_difference(const Matrix &a, const Matrix &b);

/// max |U^dagger U - I|.
double unitarity_defect(const Matrix &u);

/// Applies a list-ordered k-qubit matrix to `qubits` of a little-endian register.
void apply_matrix(std::span<Complex> amps, std::span<const Qubit> qubits, const Matrix &m);

/// Applies a diagonal given as list-ordered entries.
void apply_diagonal(std::span<Complex> amps, std::span<const Qubit> qubits, std::span<const Complex> diag);

/// Converts a k-qubit matrix between little-endian and list order (the map is an involution).
Matrix reverse_qubit_order(const Matrix &m, std::size_t k);

}  // namespace commq

#endif
