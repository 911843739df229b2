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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hqec {

using Complex = std::complex<double>;

/// Tolerance for checks on user data (orthonormality, condition verdicts).
inline constexpr double kUserTolerance = 1e-9;
/// Tolerance for internal algebraic self-tests.
inline constexpr double kAlgebraTolerance = 1e-12;

/// Largest qubit count for which dense 2^n x 2^n operators are built.
inline constexpr unsigned kMaxDenseQubits = 12;
/// Largest qubit count for state vectors and Pauli strings.
inline constexpr unsigned kMaxQubits = 24;

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter letter);

/// A Pauli string over n qubits with a global phase i^k, k in {0,1,2,3}.
///
/// Qubits are labelled 1..n. Qubit 1 corresponds to the most significant
/// bit of a computational-basis index.
class PauliString {
 public:
  /// The +1 identity on n qubits.
  explicit PauliString(std::size_t n);
  PauliString(std::vector<PauliLetter> letters, unsigned phase_exponent = 0);

  /// Parses a label. Accepted forms:
  ///   dense   "XIZI" (one letter per qubit, length must equal n when given)
  ///   sparse  "X1Z3" or "Z1Z2" (letter + 1-based index, n required)
  /// An optional leading phase "+", "-", "i", "+i", "-i" may precede either.
  /// "I" alone, or an empty sparse label, denotes the identity.
  static PauliString parse(std::string_view label, std::optional<std::size_t> n = std::nullopt);

  /// Weight-one Pauli `letter` on 1-based `qubit`.
  static PauliString single(std::size_t n, std::size_t qubit, PauliLetter letter);

  std::size_t num_qubits() const { return letters_.size(); }
  const std::vector<PauliLetter>& letters() const { return letters_; }
  PauliLetter at(std::size_t qubit) const { return letters_.at(qubit - 1); }

  /// Exponent k of the phase i^k.
  unsigned phase_exponent() const { return phase_; }
  Complex phase() const;

  std::size_t weight() const;
  bool is_identity_letters() const { return weight() == 0; }
  /// 1-based indices of non-identity positions, ascending.
  std::vector<std::size_t> support() const;

  /// Bit masks over amplitude indices: bit (n - q) is set when qubit q
  /// carries an X (resp. Z) component. Y sets both.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;

  PauliString with_phase(unsigned phase_exponent) const { return PauliString(letters_, phase_exponent); }

  /// Dense label with phase prefix, e.g. "+XIZI", "-iY".
  std::string str() const;
  /// Dense letters only, e.g. "XIZI".
  std::string letters_str() const;
  /// Sparse form without phase, e.g. "X1Z3"; "I" for the identity.
  std::string sparse_str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::vector<PauliLetter> letters_;
  unsigned phase_ = 0;
};

std::size_t pauli_weight(const PauliString& p);

/// Product a * b with phase tracking. Throws DimensionError on length mismatch.
PauliString pauli_multiply(const PauliString& a, const PauliString& b);

/// Hermitian adjoint: letters unchanged, phase conjugated.
PauliString pauli_adjoint(const PauliString& p);

/// All phase-(+1) Pauli strings of weight <= max_weight, identity first.
/// Order: weight-major, then lexicographic by position set, then letters
/// X < Y < Z with the lowest position varying slowest.
std::vector<PauliString> enumerate_paulis(std::size_t n, std::size_t max_weight);

/// All phase-(+1) Pauli strings of weight exactly `weight`, same order.
std::vector<PauliString> enumerate_paulis_of_weight(std::size_t n, std::size_t weight);

/// sum_{j=0}^{max_weight} C(n,j) 3^j.
std::uint64_t count_paulis(std::size_t n, std::size_t max_weight);

}  // namespace hqec
