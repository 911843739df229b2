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

#include <boost/multiprecision/cpp_int.hpp>

namespace hqec {

using BigInt = boost::multiprecision::cpp_int;

/// n physical qubits, k logical qubits, M classical messages, t correctable
/// weight. Requires n >= 1, M >= 1, t <= n.
struct BoundQuery {
  std::size_t n = 1;
  std::size_t k = 0;
  BigInt m = 1;
  std::size_t t = 0;
};

/// lhs <= rhs, exactly.
struct BoundReport {
  BigInt lhs;
  BigInt rhs;
  BigInt slack;  // rhs - lhs
  bool holds = false;
};

/// sum_{j=0}^{t} C(n, j) 3^j
BigInt error_ball_size(std::size_t n, std::size_t t);

/// sum_{j<=t} C(n,j) 3^j 2^k <= 2^n. Throws ArgumentError unless q.m == 1.
BoundReport quantum_hamming(const BoundQuery& q);

/// M sum_{j<=t} C(n,j) 3^j 2^k <= 2^n.
BoundReport hybrid_hamming(const BoundQuery& q);

/// Largest M for which hybrid_hamming(n, k, M, t) holds; 0 if none.
BigInt max_classical(std::size_t n, std::size_t k, std::size_t t);

/// For M = 2^m, the quantum_hamming report at k' = k + m, which has the
/// same lhs as the hybrid bound at (k, M). nullopt when M is not a power
/// of two.
std::optional<BoundReport> equivalent_quantum_bound(const BoundQuery& q);

}  // namespace hqec
