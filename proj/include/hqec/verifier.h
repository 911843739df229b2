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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hqec/code.h"
#include "hqec/pauli.h"

namespace hqec {

enum class CheckMode { kDetect, kCorrect };

std::string_view to_string(CheckMode mode);

/// An error set together with the kind of check to run on it.
/// The identity is always implied and is never stored in `paulis`.
struct ErrorSetSpec {
  CheckMode mode = CheckMode::kDetect;
  std::size_t num_qubits = 0;
  std::vector<PauliString> paulis;

  /// Dedupes, drops identities, and checks every entry is a +1-phase string
  /// on `num_qubits` qubits.
  static ErrorSetSpec make(CheckMode mode, std::size_t num_qubits, std::vector<PauliString> paulis);

  /// "I" followed by `paulis`, in order.
  std::vector<PauliString> with_identity() const;
};

/// Parses "detect:single,Z1Z2,Z3Z4", "correct:weight<=2", "X1,Y3" ...
/// Mode prefix defaults to detect. Macros: `single` (every weight-1 Pauli)
/// and `weight<=t`. An empty list means identity only.
ErrorSetSpec parse_error_spec(std::string_view text, std::size_t num_qubits);

/// The 14-element set {X_i, Y_i, Z_i : i=1..4} u {Z1Z2, Z3Z4}.
ErrorSetSpec paper_error_set(CheckMode mode = CheckMode::kDetect);

struct ErrorPair {
  PauliString a;
  PauliString b;
  /// a^dagger * b
  PauliString product() const;
};

/// detect: (I, E) for E in {I} u paulis.  correct: every ordered pair over
/// {I} u paulis, a-major.
std::vector<ErrorPair> expand_pairs(const ErrorSetSpec& spec);

/// Gram matrices G^{(a,b)} = C^dagger (E_a^dagger E_b) C, with C the
/// block-major codeword matrix, one (MK)x(MK) matrix per pair. Entry
/// (nu*K + i, mu*K + j) is <c_i^nu| E_a^dagger E_b |c_j^mu>.
struct GramBlockTensor {
  std::size_t block_size = 0;
  std::size_t num_blocks = 0;
  std::vector<ErrorPair> pairs;
  std::vector<Eigen::MatrixXcd> grams;

  /// K x K block (nu, mu) of pair p.
  Eigen::MatrixXcd block(std::size_t pair, std::size_t nu, std::size_t mu) const;
};

/// Evaluates every bracket by applying Pauli products to codewords.
GramBlockTensor gram_tensor(const HybridCode& code, std::vector<ErrorPair> pairs);

enum class ViolationKind {
  /// <c_i^nu|E|c_j^mu> != 0 for nu != mu.
  kCrossBlock,
  /// Within-block Gram matrix is not alpha * identity.
  kWithinBlock,
  /// Entry of P E P - sum_nu alpha^nu P_nu is nonzero.
  kOperatorEntry,
};

struct Violation {
  ViolationKind kind;
  std::size_t pair_index;
  ErrorPair pair;
  /// Block pair (vector form only).
  std::optional<std::size_t> block_row;
  std::optional<std::size_t> block_col;
  /// Codeword indices within the blocks (vector form) or matrix indices
  /// over the 2^n basis (operator form).
  std::size_t i = 0;
  std::size_t j = 0;
  Complex measured;
  Complex expected;
  double deviation = 0;

  std::string describe() const;
};

struct Verdict {
  bool ok = false;
  std::vector<ErrorPair> pairs;
  /// alphas[p][nu] for pair p and block nu. Empty unless ok.
  std::vector<std::vector<Complex>> alphas;
  /// Every violation, ordered by (pair, block_row, block_col, i, j).
  std::vector<Violation> violations;
  /// Largest deviation from the condition over all checked entries.
  double max_residual = 0;

  /// alpha^nu_{a,b}; nullopt when not ok or the pair was not checked.
  std::optional<Complex> alpha(const PauliString& a, const PauliString& b, std::size_t block) const;
};

/// <c_i^nu|E_a^dagger E_b|c_j^mu> = alpha^nu_ab delta_ij delta_numu for
/// every expanded pair, within `tolerance`. alpha is the mean diagonal of
/// each within-block Gram matrix.
Verdict check_vector_form(const HybridCode& code, const ErrorSetSpec& spec, double tolerance = kUserTolerance);

/// P E_a^dagger E_b P = sum_nu alpha^nu_ab P_nu with dense matrices and
/// alpha^nu_ab = tr(P_nu P E_a^dagger E_b P) / K. Throws CapacityError past
/// kMaxDenseQubits.
Verdict check_operator_form(const HybridCode& code, const ErrorSetSpec& spec, double tolerance = kUserTolerance);

struct DegeneracyReport {
  bool degenerate = false;
  /// Rank of A^nu, A^nu_ab = alpha^nu_ab over {I} u errors, per block.
  std::vector<std::size_t> per_block_rank;
  /// Dimension of each A^nu.
  std::size_t error_count = 0;
  /// Number of ordered pairs evaluated.
  std::size_t pair_count = 0;
};

/// Degeneracy of a code against an error set treated as correctable: a
/// block is degenerate when A^nu is singular (smallest singular value below
/// 1e-9 of the largest). The code is degenerate when any block is.
/// A^nu needs alpha for every ordered pair, so the correct-mode condition
/// is checked over spec.paulis regardless of spec.mode; throws
/// PreconditionError if it fails.
DegeneracyReport degeneracy(const HybridCode& code, const ErrorSetSpec& spec);

/// Splits an error set into per-location correct-mode sets: for each qubit
/// touched by a weight-1 error, that qubit's weight-1 errors plus every
/// error of weight >= 2 from `spec`. Models correction when the location of
/// a single-qubit error is known.
std::vector<std::pair<std::size_t, ErrorSetSpec>> known_location_specs(const ErrorSetSpec& spec);

struct LocatedDegeneracy {
  bool degenerate = false;
  std::vector<std::pair<std::size_t, DegeneracyReport>> per_location;
};

/// degeneracy() for every set from known_location_specs().
LocatedDegeneracy known_location_degeneracy(const HybridCode& code, const ErrorSetSpec& spec);

inline constexpr std::size_t kMaxDistanceQubits = 10;

struct DistanceResult {
  std::size_t distance = 0;
  /// First violating Pauli in enumeration order; nullopt when distance = n+1.
  std::optional<PauliString> witness;
};

/// Smallest w >= 1 such that some weight-w Pauli fails the detect check;
/// n+1 when none does. Throws CapacityError when n > kMaxDistanceQubits.
DistanceResult find_distance(const HybridCode& code);
std::size_t hybrid_distance(const HybridCode& code);

/// True when a single Pauli passes the detect condition on `code`.
bool detects(const HybridCode& code, const PauliString& error, double tolerance = kUserTolerance);

}  // namespace hqec
