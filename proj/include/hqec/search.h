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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hqec/code.h"
#include "hqec/verifier.h"

namespace hqec {

/// Brute-force search space: M x K codeword systems on n qubits where every
/// codeword is a normalized superposition of at most `max_terms` basis
/// states with coefficients from {+1, -1} (or {+1, -1, +i, -i} when
/// `complex_phases` is set). The first coefficient of each codeword is
/// fixed to +1, which quotients out its global phase.
struct SearchSpec {
  std::size_t n = 1;
  std::size_t block_size = 1;  // K
  std::size_t num_blocks = 1;  // M
  ErrorSetSpec errors;
  std::size_t max_terms = 1;
  bool complex_phases = false;
  std::size_t limit = 100;
  /// Require distinct codewords to have disjoint basis supports. Defaults
  /// to on when max_terms * K * M <= 2^n.
  std::optional<bool> disjoint_supports;
  /// Hard cap on estimate_search_space().
  double max_space = 1e12;
  unsigned threads = 1;

  bool uses_disjoint_supports() const;
};

inline constexpr std::size_t kMaxSearchQubits = 6;

/// Number of codeword options raised to M*K: an upper bound on the ordered
/// candidates visited.
double estimate_search_space(const SearchSpec& spec);

/// Streams every ordered orthonormal candidate to `visit` in deterministic
/// order, stopping early when `visit` returns false. Returns the number of
/// candidates streamed. Throws CapacityError when the estimate exceeds
/// spec.max_space.
std::size_t enumerate_candidates(const SearchSpec& spec, const std::function<bool(const HybridCode&)>& visit);

/// A code together with a key that is invariant under block permutation,
/// codeword permutation inside a block, and a global phase on any codeword.
struct CanonicalCode {
  HybridCode code;
  std::string key;

  std::uint64_t hash() const;
  std::string hash_hex() const;
};

CanonicalCode canonicalize(const HybridCode& code);

struct SearchResult {
  /// Survivors sorted by key, at most spec.limit of them.
  std::vector<CanonicalCode> codes;
  /// Distinct survivors before truncation.
  std::size_t total_survivors = 0;
  double estimated_space = 0;
  /// Partial assignments explored.
  std::uint64_t nodes = 0;
};

/// Depth-first search for codes passing check_vector_form(code,
/// spec.errors). Blocks and codewords are generated in increasing option
/// order so each permutation class is visited once; every condition is
/// checked as soon as both codewords it mentions are placed. Survivors are
/// re-verified with check_vector_form before they are kept.
SearchResult search(const SearchSpec& spec);

}  // namespace hqec
