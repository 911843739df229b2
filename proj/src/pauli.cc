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

#include "hqec/pauli.h"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hqec/errors.h"

namespace hqec {

namespace {

// Single-qubit product table: letter(a*b) and the phase exponent k of i^k.
struct LetterProduct {
  PauliLetter letter;
  unsigned phase;
};

constexpr LetterProduct kProduct[4][4] = {
    // I * .
    {{PauliLetter::I, 0}, {PauliLetter::X, 0}, {PauliLetter::Y, 0}, {PauliLetter::Z, 0}},
    // X * .    XY = iZ, XZ = -iY
    {{PauliLetter::X, 0}, {PauliLetter::I, 0}, {PauliLetter::Z, 1}, {PauliLetter::Y, 3}},
    // Y * .    YX = -iZ, YZ = iX
    {{PauliLetter::Y, 0}, {PauliLetter::Z, 3}, {PauliLetter::I, 0}, {PauliLetter::X, 1}},
    // Z * .    ZX = iY, ZY = -iX
    {{PauliLetter::Z, 0}, {PauliLetter::Y, 1}, {PauliLetter::X, 3}, {PauliLetter::I, 0}},
};

std::optional<PauliLetter> letter_from_char(char c) {
  switch (c) {
    case 'I': return PauliLetter::I;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    case 'Z': return PauliLetter::Z;
    default: return std::nullopt;
  }
}

// Strips an optional phase prefix and returns its exponent.
unsigned take_phase_prefix(std::string_view& s) {
  unsigned phase = 0;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    if (s.front() == '-') phase = 2;
    s.remove_prefix(1);
  }
  if (!s.empty() && s.front() == 'i') {
    phase = (phase + 1) % 4;
    s.remove_prefix(1);
  }
  return phase;
}

void check_qubit_count(std::size_t n) {
  if (n == 0) throw ArgumentError("Pauli string needs at least one qubit");
  if (n > kMaxQubits) {
    throw CapacityError("Pauli string over " + std::to_string(n) + " qubits exceeds the limit of " +
                        std::to_string(kMaxQubits));
  }
}

}  // namespace

char to_char(PauliLetter letter) { return "IXYZ"[static_cast<int>(letter)]; }

PauliString::PauliString(std::size_t n) : letters_(n, PauliLetter::I) { check_qubit_count(n); }

PauliString::PauliString(std::vector<PauliLetter> letters, unsigned phase_exponent)
    : letters_(std::move(letters)), phase_(phase_exponent % 4) {
  check_qubit_count(letters_.size());
}

PauliString PauliString::parse(std::string_view label, std::optional<std::size_t> n) {
  std::string_view s = label;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  const std::string original(s);
  const unsigned phase = take_phase_prefix(s);
  if (s.empty()) throw ParseError(0, "empty Pauli label '" + original + "'");

  const bool sparse = std::any_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (!sparse) {
    std::vector<PauliLetter> letters;
    for (char c : s) {
      auto letter = letter_from_char(c);
      if (!letter) throw ParseError(0, "bad character '" + std::string(1, c) + "' in Pauli label '" + original + "'");
      letters.push_back(*letter);
    }
    if (n && letters.size() != *n) {
      // A bare "I" is accepted as the identity at any size.
      if (letters.size() == 1 && letters[0] == PauliLetter::I) return PauliString(std::vector(*n, PauliLetter::I), phase);
      throw DimensionError("Pauli label '" + original + "' has " + std::to_string(letters.size()) +
                           " letters, expected " + std::to_string(*n));
    }
    return PauliString(std::move(letters), phase);
  }

  if (!n) throw ParseError(0, "sparse Pauli label '" + original + "' needs an explicit qubit count");
  std::vector<PauliLetter> letters(*n, PauliLetter::I);
  std::vector<bool> seen(*n, false);
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto letter = letter_from_char(s[pos]);
    if (!letter) throw ParseError(0, "bad character '" + std::string(1, s[pos]) + "' in Pauli label '" + original + "'");
    ++pos;
    std::size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == pos) throw ParseError(0, "missing qubit index in Pauli label '" + original + "'");
    const std::size_t index = std::stoul(std::string(s.substr(pos, end - pos)));
    if (index < 1 || index > *n) {
      throw DimensionError("qubit index " + std::to_string(index) + " out of range 1.." + std::to_string(*n) +
                           " in Pauli label '" + original + "'");
    }
    if (seen[index - 1]) throw ParseError(0, "duplicate qubit index " + std::to_string(index) + " in '" + original + "'");
    seen[index - 1] = true;
    letters[index - 1] = *letter;
    pos = end;
  }
  return PauliString(std::move(letters), phase);
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, PauliLetter letter) {
  if (qubit < 1 || qubit > n) throw DimensionError("qubit " + std::to_string(qubit) + " out of range");
  std::vector<PauliLetter> letters(n, PauliLetter::I);
  letters[qubit - 1] = letter;
  return PauliString(std::move(letters));
}

Complex PauliString::phase() const {
  static constexpr Complex kUnits[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kUnits[phase_];
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(), [](PauliLetter l) { return l != PauliLetter::I; }));
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    if (letters_[q] != PauliLetter::I) out.push_back(q + 1);
  }
  return out;
}

std::uint64_t PauliString::x_mask() const {
  const std::size_t n = letters_.size();
  std::uint64_t mask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (letters_[q] == PauliLetter::X || letters_[q] == PauliLetter::Y) mask |= std::uint64_t{1} << (n - 1 - q);
  }
  return mask;
}

std::uint64_t PauliString::z_mask() const {
  const std::size_t n = letters_.size();
  std::uint64_t mask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (letters_[q] == PauliLetter::Z || letters_[q] == PauliLetter::Y) mask |= std::uint64_t{1} << (n - 1 - q);
  }
  return mask;
}

std::string PauliString::letters_str() const {
  std::string out;
  out.reserve(letters_.size());
  for (auto l : letters_) out.push_back(to_char(l));
  return out;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  return kPrefix[phase_] + letters_str();
}

std::string PauliString::sparse_str() const {
  std::string out;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    if (letters_[q] == PauliLetter::I) continue;
    out.push_back(to_char(letters_[q]));
    out += std::to_string(q + 1);
  }
  return out.empty() ? "I" : out;
}

std::size_t pauli_weight(const PauliString& p) { return p.weight(); }

PauliString pauli_multiply(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("cannot multiply Pauli strings on " + std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
  }
  unsigned phase = a.phase_exponent() + b.phase_exponent();
  std::vector<PauliLetter> letters(a.num_qubits());
  for (std::size_t q = 0; q < letters.size(); ++q) {
    const auto& prod = kProduct[static_cast<int>(a.letters()[q])][static_cast<int>(b.letters()[q])];
    letters[q] = prod.letter;
    phase += prod.phase;
  }
  return PauliString(std::move(letters), phase % 4);
}

PauliString pauli_adjoint(const PauliString& p) { return p.with_phase((4 - p.phase_exponent()) % 4); }

std::vector<PauliString> enumerate_paulis_of_weight(std::size_t n, std::size_t weight) {
  if (weight > n) throw ArgumentError("weight " + std::to_string(weight) + " exceeds qubit count " + std::to_string(n));
  std::vector<PauliString> out;
  std::size_t letter_codes = 1;
  for (std::size_t k = 0; k < weight; ++k) letter_codes *= 3;
  std::vector<std::size_t> positions(weight);
  std::iota(positions.begin(), positions.end(), 0);
  while (true) {
    for (std::size_t code = 0; code < letter_codes; ++code) {
      std::vector<PauliLetter> letters(n, PauliLetter::I);
      std::size_t rest = code;
      for (std::size_t k = weight; k-- > 0;) {
        letters[positions[k]] = static_cast<PauliLetter>(1 + rest % 3);
        rest /= 3;
      }
      out.emplace_back(std::move(letters));
    }
    // Advance to the next combination.
    std::size_t k = weight;
    while (k > 0 && positions[k - 1] == n - weight + (k - 1)) --k;
    if (k == 0) break;
    ++positions[k - 1];
    for (std::size_t j = k; j < weight; ++j) positions[j] = positions[j - 1] + 1;
  }
  return out;
}

std::vector<PauliString> enumerate_paulis(std::size_t n, std::size_t max_weight) {
  if (max_weight > n) {
    throw ArgumentError("max_weight " + std::to_string(max_weight) + " exceeds qubit count " + std::to_string(n));
  }
  std::vector<PauliString> out;
  for (std::size_t w = 0; w <= max_weight; ++w) {
    auto layer = enumerate_paulis_of_weight(n, w);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

std::uint64_t count_paulis(std::size_t n, std::size_t max_weight) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  std::uint64_t pow3 = 1;
  for (std::size_t j = 0; j <= max_weight; ++j) {
    total += binom * pow3;
    binom = binom * (n - j) / (j + 1);
    pow3 *= 3;
  }
  return total;
}

}  // namespace hqec
