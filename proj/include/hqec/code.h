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
#include <vector>

#include "hqec/state.h"

namespace hqec {

/// A hybrid code ((n, K:M)): M blocks of K codewords each on n qubits.
///
/// Block b (0-based) is the quantum code selected by classical message b;
/// codeword(b, i) is its i-th basis vector (0-based). All M*K codewords
/// are pairwise orthonormal within kUserTolerance; this is checked at
/// construction, as is the equal-size requirement on blocks.
class HybridCode {
 public:
  explicit HybridCode(std::vector<std::vector<StateVector>> blocks);

  std::size_t num_qubits() const { return n_; }
  /// Codewords per block.
  std::size_t block_size() const { return k_; }
  std::size_t num_blocks() const { return blocks_.size(); }

  const StateVector& codeword(std::size_t block, std::size_t index) const { return blocks_.at(block).at(index); }
  const std::vector<StateVector>& block(std::size_t b) const { return blocks_.at(b); }
  const std::vector<std::vector<StateVector>>& blocks() const { return blocks_; }

  /// Codewords flattened block-major: index b*K + i.
  std::vector<StateVector> flat() const;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<std::vector<StateVector>> blocks_;
};

/// [[n, k : m, d]] labels, with K = 2^k and M = 2^m when those are powers
/// of two.
struct CodeParameters {
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::optional<std::size_t> m;
  std::optional<std::size_t> d;

  std::string str() const;
};

CodeParameters parameters(const HybridCode& code, std::optional<std::size_t> distance = std::nullopt);

/// Parses the line-oriented code-file format:
///
///     n 4
///     block 0
///     cw +1 0000 ; +1 1111
///
/// '#' starts a comment. Coefficients are real (`-0.5`) or complex
/// (`1+2i`, `-i`) literals. A bitstring may appear once per codeword;
/// codewords are normalized on load.
HybridCode parse_code(std::string_view text);
HybridCode load_code_file(const std::string& path);

/// Writes `code` in the format read by parse_code. Amplitudes are written
/// with 17 significant digits; zero amplitudes are omitted.
std::string serialize_code(const HybridCode& code);

/// Parses one coefficient literal. Exposed for tests.
Complex parse_coefficient(std::string_view literal);

/// P = sum over all codewords of |c><c|.
Operator projector(const HybridCode& code);
/// P_b = sum_i |c_i^b><c_i^b| for 0-based block b.
Operator block_projector(const HybridCode& code, std::size_t block);

/// The [[4,1:1,2]] code: block 0 = {0000+1111, 0011-1100},
/// block 1 = {0101+1010, 1001-0110}, each scaled by 1/sqrt(2).
HybridCode builtin_paper_code();
/// The n=2 basis-split code: block 0 = {|00>, |01>}, block 1 = {|10>, |11>}.
HybridCode builtin_simple_code();

/// The code file of builtin_paper_code, as text.
std::string_view paper_code_text();

}  // namespace hqec
