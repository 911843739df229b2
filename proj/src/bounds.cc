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

#include "hqec/bounds.h"

#include <string>

#include "hqec/errors.h"

namespace hqec {

namespace {

void validate(const BoundQuery& q) {
  if (q.n < 1) throw ArgumentError("bound query needs n >= 1");
  if (q.m < 1) throw ArgumentError("bound query needs M >= 1");
  if (q.t > q.n) throw ArgumentError("bound query needs t <= n (t=" + std::to_string(q.t) + ", n=" + std::to_string(q.n) + ")");
}

BigInt pow2(std::size_t e) { return BigInt(1) << static_cast<unsigned>(e); }

}  // namespace

BigInt error_ball_size(std::size_t n, std::size_t t) {
  BigInt total = 0;
  BigInt binom = 1;
  BigInt pow3 = 1;
  for (std::size_t j = 0; j <= t; ++j) {
    total += binom * pow3;
    binom = binom * (n - j) / (j + 1);
    pow3 *= 3;
  }
  return total;
}

BoundReport hybrid_hamming(const BoundQuery& q) {
  validate(q);
  BoundReport r;
  r.lhs = q.m * error_ball_size(q.n, q.t) * pow2(q.k);
  r.rhs = pow2(q.n);
  r.slack = r.rhs - r.lhs;
  r.holds = r.lhs <= r.rhs;
  return r;
}

BoundReport quantum_hamming(const BoundQuery& q) {
  if (q.m != 1) throw ArgumentError("quantum Hamming bound needs M = 1; use hybrid_hamming");
  return hybrid_hamming(q);
}

BigInt max_classical(std::size_t n, std::size_t k, std::size_t t) {
  validate(BoundQuery{n, k, 1, t});
  return pow2(n) / (pow2(k) * error_ball_size(n, t));
}

std::optional<BoundReport> equivalent_quantum_bound(const BoundQuery& q) {
  validate(q);
  if ((q.m & (q.m - 1)) != 0) return std::nullopt;
  const auto m_bits = static_cast<std::size_t>(boost::multiprecision::msb(q.m));
  return quantum_hamming(BoundQuery{q.n, q.k + m_bits, 1, q.t});
}

}  // namespace hqec
