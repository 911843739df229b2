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

#include "hqec/state.h"

#include <bit>
#include <cmath>

#include "hqec/errors.h"

namespace hqec {

namespace {

std::size_t checked_dimension(std::size_t n) {
  if (n == 0) throw ArgumentError("state needs at least one qubit");
  if (n > kMaxQubits) {
    throw CapacityError("state over " + std::to_string(n) + " qubits exceeds the limit of " + std::to_string(kMaxQubits));
  }
  return std::size_t{1} << n;
}

double squared_norm(std::span<const Complex> v) {
  double total = 0;
  for (const auto& a : v) total += std::norm(a);
  return total;
}

void check_finite(std::span<const Complex> v) {
  for (const auto& a : v) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw ValidationError("non-finite amplitude");
  }
}

}  // namespace

StateVector StateVector::normalized(std::size_t n, std::vector<Complex> raw) {
  if (raw.size() != checked_dimension(n)) {
    throw DimensionError("expected " + std::to_string(std::size_t{1} << n) + " amplitudes, got " + std::to_string(raw.size()));
  }
  check_finite(raw);
  const double norm = std::sqrt(squared_norm(raw));
  if (norm < kUserTolerance) throw DegenerateInputError("cannot normalize the zero vector");
  for (auto& a : raw) a /= norm;
  return StateVector(n, std::move(raw));
}

StateVector StateVector::from_amplitudes(std::size_t n, std::vector<Complex> amplitudes) {
  if (amplitudes.size() != checked_dimension(n)) {
    throw DimensionError("expected " + std::to_string(std::size_t{1} << n) + " amplitudes, got " +
                         std::to_string(amplitudes.size()));
  }
  check_finite(amplitudes);
  const double norm = std::sqrt(squared_norm(amplitudes));
  if (std::abs(norm - 1.0) > kUserTolerance) {
    throw ValidationError("state vector has norm " + std::to_string(norm) + ", expected 1");
  }
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(std::size_t n, std::size_t index) {
  const std::size_t dim = checked_dimension(n);
  if (index >= dim) throw DimensionError("basis index " + std::to_string(index) + " out of range");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector StateVector::basis(std::string_view bits) {
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError(0, "bitstring '" + std::string(bits) + "' must contain only 0 and 1");
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return basis(bits.size(), index);
}

StateVector StateVector::single_qubit(std::string_view name) {
  const double r = 1.0 / std::sqrt(2.0);
  if (name == "0") return basis(1, 0);
  if (name == "1") return basis(1, 1);
  if (name == "+") return StateVector(1, {r, r});
  if (name == "-") return StateVector(1, {r, -r});
  if (name == "+i") return StateVector(1, {r, Complex(0, r)});
  if (name == "-i") return StateVector(1, {r, Complex(0, -r)});
  throw ArgumentError("unknown single-qubit state '" + std::string(name) + "'");
}

double StateVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

StateVector StateVector::tensor(const StateVector& other) const {
  checked_dimension(n_ + other.n_);
  std::vector<Complex> amps(dimension() * other.dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    for (std::size_t j = 0; j < other.dimension(); ++j) amps[i * other.dimension() + j] = amplitudes_[i] * other.amplitudes_[j];
  }
  return StateVector(n_ + other.n_, std::move(amps));
}

Eigen::Matrix2cd StateVector::reduced_density(std::size_t qubit) const {
  if (qubit < 1 || qubit > n_) throw DimensionError("qubit " + std::to_string(qubit) + " out of range");
  const std::size_t bit = std::size_t{1} << (n_ - qubit);
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (i & bit) continue;
    const Complex a0 = amplitudes_[i];
    const Complex a1 = amplitudes_[i | bit];
    rho(0, 0) += a0 * std::conj(a0);
    rho(0, 1) += a0 * std::conj(a1);
    rho(1, 0) += a1 * std::conj(a0);
    rho(1, 1) += a1 * std::conj(a1);
  }
  return rho;
}

double StateVector::probability(std::size_t qubit, int bit) const {
  if (bit != 0 && bit != 1) throw ArgumentError("measurement outcome must be 0 or 1");
  const auto rho = reduced_density(qubit);
  return rho(bit, bit).real();
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("inner product of states on " + std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
  }
  Complex total = 0;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) total += std::conj(x[i]) * y[i];
  return total;
}

StateVector apply_pauli(const PauliString& p, const StateVector& s) {
  if (p.num_qubits() != s.num_qubits()) {
    throw DimensionError("Pauli on " + std::to_string(p.num_qubits()) + " qubits applied to a " +
                         std::to_string(s.num_qubits()) + "-qubit state");
  }
  // p = phase * i^{#Y} * X^x Z^z, acting as |i> -> (-1)^{|i & z|} |i ^ x>.
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const unsigned y_count = static_cast<unsigned>(std::popcount(x & z));
  const Complex global = p.with_phase((p.phase_exponent() + y_count) % 4).phase();
  const auto in = s.amplitudes();
  std::vector<Complex> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const bool flip = std::popcount(static_cast<std::uint64_t>(i) & z) & 1;
    out[i ^ x] = flip ? -global * in[i] : global * in[i];
  }
  return StateVector(s.num_qubits(), std::move(out));
}

void check_dense_guard(std::size_t n) {
  if (n > kMaxDenseQubits) {
    throw CapacityError("dense operator on " + std::to_string(n) + " qubits exceeds the limit of " +
                        std::to_string(kMaxDenseQubits));
  }
}

Operator::Operator(std::size_t n, Matrix matrix) : n_(n), matrix_(std::move(matrix)) {
  check_dense_guard(n);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw DimensionError("operator on " + std::to_string(n) + " qubits must be " + std::to_string(dim) + "x" +
                         std::to_string(dim));
  }
}

Operator Operator::identity(std::size_t n) {
  check_dense_guard(n);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  return Operator(n, Matrix::Identity(dim, dim));
}

Operator Operator::zero(std::size_t n) {
  check_dense_guard(n);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  return Operator(n, Matrix::Zero(dim, dim));
}

Operator Operator::outer(const StateVector& s) {
  check_dense_guard(s.num_qubits());
  Eigen::Map<const Eigen::VectorXcd> v(s.amplitudes().data(), static_cast<Eigen::Index>(s.dimension()));
  return Operator(s.num_qubits(), v * v.adjoint());
}

std::vector<Complex> Operator::apply(const StateVector& s) const {
  if (s.num_qubits() != n_) throw DimensionError("operator and state qubit counts differ");
  Eigen::Map<const Eigen::VectorXcd> v(s.amplitudes().data(), static_cast<Eigen::Index>(s.dimension()));
  Eigen::VectorXcd r = matrix_ * v;
  return std::vector<Complex>(r.data(), r.data() + r.size());
}

Operator& Operator::operator+=(const Operator& other) {
  if (other.n_ != n_) throw DimensionError("operator qubit counts differ");
  matrix_ += other.matrix_;
  return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.n_ != b.n_) throw DimensionError("operator qubit counts differ");
  return Operator(a.n_, a.matrix_ * b.matrix_);
}

Operator operator-(const Operator& a, const Operator& b) {
  if (a.n_ != b.n_) throw DimensionError("operator qubit counts differ");
  return Operator(a.n_, a.matrix_ - b.matrix_);
}

double max_abs_diff(const Operator& a, const Operator& b) {
  if (a.n_ != b.n_) throw DimensionError("operator qubit counts differ");
  return (a.matrix_ - b.matrix_).cwiseAbs().maxCoeff();
}

Operator pauli_matrix(const PauliString& p) {
  check_dense_guard(p.num_qubits());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Constant(1, 1, p.phase());
  for (auto letter : p.letters()) {
    Eigen::Matrix2cd f;
    switch (letter) {
      case PauliLetter::I: f << 1, 0, 0, 1; break;
      case PauliLetter::X: f << 0, 1, 1, 0; break;
      case PauliLetter::Y: f << 0, Complex(0, -1), Complex(0, 1), 0; break;
      case PauliLetter::Z: f << 1, 0, 0, -1; break;
    }
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) next.block<2, 2>(2 * r, 2 * c) = m(r, c) * f;
    }
    m = std::move(next);
  }
  return Operator(p.num_qubits(), std::move(m));
}

}  // namespace hqec
