// Copyright 2026 The hybridqec Authors
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

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hqec/pauli.h"

namespace hqec {

/// A normalized state of n qubits. Amplitude index i is the computational
/// basis state whose bitstring is i written MSB-first (qubit 1 = MSB).
class StateVector {
 public:
  /// Normalizes `raw`. Throws DegenerateInputError on a zero vector and
  /// DimensionError when raw.size() != 2^n.
  static StateVector normalized(std::size_t n, std::vector<Complex> raw);
  /// Accepts an already-normalized vector; throws ValidationError if its
  /// norm differs from 1 by more than kUserTolerance.
  static StateVector from_amplitudes(std::size_t n, std::vector<Complex> amplitudes);
  static StateVector basis(std::size_t n, std::size_t index);
  /// Basis state from a bitstring such as "0101".
  static StateVector basis(std::string_view bits);

  /// Single-qubit states by name: "0", "1", "+", "-", "+i", "-i".
  static StateVector single_qubit(std::string_view name);

  std::size_t num_qubits() const { return n_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t index) const { return amplitudes_[index]; }

  double norm() const;

  /// Tensor product |this> (x) |other>; `this` occupies the leading qubits.
  StateVector tensor(const StateVector& other) const;

  /// Reduced 2x2 density matrix of 1-based `qubit`.
  Eigen::Matrix2cd reduced_density(std::size_t qubit) const;

  /// Probability that measuring 1-based `qubit` yields `bit`.
  double probability(std::size_t qubit, int bit) const;

 private:
  StateVector(std::size_t n, std::vector<Complex> amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {}

  friend StateVector apply_pauli(const PauliString&, const StateVector&);

  std::size_t n_;
  std::vector<Complex> amplitudes_;
};

/// <a|b>, conjugate-linear in `a`.
Complex inner_product(const StateVector& a, const StateVector& b);

/// p|s> by index permutation and phase flips; no dense matrix is formed.
StateVector apply_pauli(const PauliString& p, const StateVector& s);

/// Dense square matrix on n qubits.
class Operator {
 public:
  using Matrix = Eigen::MatrixXcd;

  Operator(std::size_t n, Matrix matrix);
  static Operator identity(std::size_t n);
  static Operator zero(std::size_t n);
  /// |s><s|
  static Operator outer(const StateVector& s);

  std::size_t num_qubits() const { return n_; }
  std::size_t dimension() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  Complex operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }

  Operator adjoint() const { return Operator(n_, matrix_.adjoint()); }
  Complex trace() const { return matrix_.trace(); }
  /// this * |s> as raw amplitudes (not renormalized).
  std::vector<Complex> apply(const StateVector& s) const;

  Operator& operator+=(const Operator& other);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(Complex scale, const Operator& a) { return Operator(a.n_, scale * a.matrix_); }

  /// max_ij |a_ij - b_ij|
  friend double max_abs_diff(const Operator& a, const Operator& b);

 private:
  std::size_t n_;
  Matrix matrix_;
};

/// Kronecker product of single-qubit Pauli matrices times the phase.
/// Throws CapacityError when n > kMaxDenseQubits.
Operator pauli_matrix(const PauliString& p);

/// Throws CapacityError when n > kMaxDenseQubits.
void check_dense_guard(std::size_t n);

}  // namespace hqec
