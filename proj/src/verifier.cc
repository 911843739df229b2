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

#include "hqec/verifier.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hqec/errors.h"

namespace hqec {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string format_complex(Complex c) {
  std::ostringstream os;
  os.precision(12);
  os << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
  return os.str();
}

void require_same_n(const HybridCode& code, const ErrorSetSpec& spec) {
  if (spec.num_qubits != code.num_qubits()) {
    throw DimensionError("error set is on " + std::to_string(spec.num_qubits) + " qubits, code is on " +
                         std::to_string(code.num_qubits()));
  }
}

// Gram matrix of one Pauli product over the flattened codewords.
Eigen::MatrixXcd gram_of(const std::vector<StateVector>& words, const PauliString& op) {
  const auto size = static_cast<Eigen::Index>(words.size());
  Eigen::MatrixXcd g(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    const StateVector moved = apply_pauli(op, words[static_cast<std::size_t>(j)]);
    for (Eigen::Index r = 0; r < size; ++r) g(r, j) = inner_product(words[static_cast<std::size_t>(r)], moved);
  }
  return g;
}

}  // namespace

std::string_view to_string(CheckMode mode) { return mode == CheckMode::kDetect ? "detect" : "correct"; }

ErrorSetSpec ErrorSetSpec::make(CheckMode mode, std::size_t num_qubits, std::vector<PauliString> paulis) {
  ErrorSetSpec spec;
  spec.mode = mode;
  spec.num_qubits = num_qubits;
  std::set<PauliString> seen;
  for (auto& p : paulis) {
    if (p.num_qubits() != num_qubits) {
      throw DimensionError("error " + p.str() + " is not on " + std::to_string(num_qubits) + " qubits");
    }
    if (p.phase_exponent() != 0) throw ArgumentError("error " + p.str() + " must carry phase +1");
    if (p.is_identity_letters() || !seen.insert(p).second) continue;
    spec.paulis.push_back(std::move(p));
  }
  return spec;
}

std::vector<PauliString> ErrorSetSpec::with_identity() const {
  std::vector<PauliString> out;
  out.reserve(paulis.size() + 1);
  out.emplace_back(num_qubits);
  out.insert(out.end(), paulis.begin(), paulis.end());
  return out;
}

ErrorSetSpec parse_error_spec(std::string_view text, std::size_t num_qubits) {
  std::string_view s = trim(text);
  CheckMode mode = CheckMode::kDetect;
  if (s.starts_with("detect:")) {
    s.remove_prefix(7);
  } else if (s.starts_with("correct:")) {
    mode = CheckMode::kCorrect;
    s.remove_prefix(8);
  } else if (s == "detect" || s == "correct") {
    mode = s == "correct" ? CheckMode::kCorrect : CheckMode::kDetect;
    s = {};
  }
  std::vector<PauliString> paulis;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string_view::npos) end = s.size();
    const std::string_view item = trim(s.substr(pos, end - pos));
    pos = end + 1;
    if (!item.empty()) {
      if (item == "single") {
        auto layer = enumerate_paulis_of_weight(num_qubits, 1);
        paulis.insert(paulis.end(), layer.begin(), layer.end());
      } else if (item.starts_with("weight<=")) {
        const std::string_view digits = item.substr(8);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
          throw ParseError(0, "bad macro '" + std::string(item) + "'");
        }
        const std::size_t t = std::stoul(std::string(digits));
        auto all = enumerate_paulis(num_qubits, t);
        paulis.insert(paulis.end(), all.begin(), all.end());
      } else {
        paulis.push_back(PauliString::parse(item, num_qubits));
      }
    }
    if (end == s.size()) break;
  }
  return ErrorSetSpec::make(mode, num_qubits, std::move(paulis));
}

ErrorSetSpec paper_error_set(CheckMode mode) {
  auto paulis = enumerate_paulis_of_weight(4, 1);
  paulis.push_back(PauliString::parse("Z1Z2", 4));
  paulis.push_back(PauliString::parse("Z3Z4", 4));
  return ErrorSetSpec::make(mode, 4, std::move(paulis));
}

PauliString ErrorPair::product() const { return pauli_multiply(pauli_adjoint(a), b); }

std::vector<ErrorPair> expand_pairs(const ErrorSetSpec& spec) {
  const auto errors = spec.with_identity();
  std::vector<ErrorPair> out;
  if (spec.mode == CheckMode::kDetect) {
    for (const auto& e : errors) out.push_back({errors.front(), e});
  } else {
    for (const auto& a : errors) {
      for (const auto& b : errors) out.push_back({a, b});
    }
  }
  return out;
}

Eigen::MatrixXcd GramBlockTensor::block(std::size_t pair, std::size_t nu, std::size_t mu) const {
  const auto k = static_cast<Eigen::Index>(block_size);
  return grams.at(pair).block(static_cast<Eigen::Index>(nu) * k, static_cast<Eigen::Index>(mu) * k, k, k);
}

GramBlockTensor gram_tensor(const HybridCode& code, std::vector<ErrorPair> pairs) {
  GramBlockTensor t;
  t.block_size = code.block_size();
  t.num_blocks = code.num_blocks();
  const auto words = code.flat();
  t.grams.reserve(pairs.size());
  for (const auto& pair : pairs) t.grams.push_back(gram_of(words, pair.product()));
  t.pairs = std::move(pairs);
  return t;
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << "pair (" << pair.a.sparse_str() << ", " << pair.b.sparse_str() << ")";
  switch (kind) {
    case ViolationKind::kCrossBlock:
      os << " cross-block (" << *block_row << "," << *block_col << ") entry (" << i << "," << j << ")";
      break;
    case ViolationKind::kWithinBlock:
      os << " within block " << *block_row << " entry (" << i << "," << j << ")";
      break;
    case ViolationKind::kOperatorEntry:
      os << " operator entry (" << i << "," << j << ")";
      break;
  }
  os << ": measured " << format_complex(measured) << ", expected " << format_complex(expected) << ", deviation " << deviation;
  return os.str();
}

std::optional<Complex> Verdict::alpha(const PauliString& a, const PauliString& b, std::size_t block) const {
  if (!ok) return std::nullopt;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (pairs[p].a == a && pairs[p].b == b) {
      if (block >= alphas[p].size()) return std::nullopt;
      return alphas[p][block];
    }
  }
  return std::nullopt;
}

Verdict check_vector_form(const HybridCode& code, const ErrorSetSpec& spec, double tolerance) {
  require_same_n(code, spec);
  const GramBlockTensor tensor = gram_tensor(code, expand_pairs(spec));
  const std::size_t k = code.block_size();
  const std::size_t m = code.num_blocks();

  Verdict v;
  v.pairs = tensor.pairs;
  std::vector<std::vector<Complex>> alphas(tensor.pairs.size(), std::vector<Complex>(m));
  for (std::size_t p = 0; p < tensor.pairs.size(); ++p) {
    for (std::size_t nu = 0; nu < m; ++nu) {
      for (std::size_t mu = 0; mu < m; ++mu) {
        const Eigen::MatrixXcd g = tensor.block(p, nu, mu);
        const Complex alpha = nu == mu ? g.trace() / static_cast<double>(k) : Complex(0);
        if (nu == mu) alphas[p][nu] = alpha;
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            const Complex measured = g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            const Complex expected = (nu == mu && i == j) ? alpha : Complex(0);
            const double dev = std::abs(measured - expected);
            v.max_residual = std::max(v.max_residual, dev);
            if (dev > tolerance) {
              v.violations.push_back({nu == mu ? ViolationKind::kWithinBlock : ViolationKind::kCrossBlock, p, tensor.pairs[p], nu,
                                      mu, i, j, measured, expected, dev});
            }
          }
        }
      }
    }
  }
  v.ok = v.violations.empty();
  if (v.ok) v.alphas = std::move(alphas);
  return v;
}

Verdict check_operator_form(const HybridCode& code, const ErrorSetSpec& spec, double tolerance) {
  require_same_n(code, spec);
  check_dense_guard(code.num_qubits());
  const std::size_t k = code.block_size();
  const std::size_t m = code.num_blocks();
  const Operator p_code = projector(code);
  std::vector<Operator> p_blocks;
  for (std::size_t nu = 0; nu < m; ++nu) p_blocks.push_back(block_projector(code, nu));

  Verdict v;
  v.pairs = expand_pairs(spec);
  std::vector<std::vector<Complex>> alphas(v.pairs.size(), std::vector<Complex>(m));
  for (std::size_t p = 0; p < v.pairs.size(); ++p) {
    const Operator d = p_code * pauli_matrix(v.pairs[p].product()) * p_code;
    Operator expected = Operator::zero(code.num_qubits());
    for (std::size_t nu = 0; nu < m; ++nu) {
      alphas[p][nu] = (p_blocks[nu] * d).trace() / static_cast<double>(k);
      expected += alphas[p][nu] * p_blocks[nu];
    }
    const auto dim = d.dimension();
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const double dev = std::abs(d(i, j) - expected(i, j));
        v.max_residual = std::max(v.max_residual, dev);
        if (dev > tolerance) {
          v.violations.push_back({ViolationKind::kOperatorEntry, p, v.pairs[p], std::nullopt, std::nullopt, i, j, d(i, j),
                                  expected(i, j), dev});
        }
      }
    }
  }
  v.ok = v.violations.empty();
  if (v.ok) v.alphas = std::move(alphas);
  return v;
}

DegeneracyReport degeneracy(const HybridCode& code, const ErrorSetSpec& spec) {
  const ErrorSetSpec correct = ErrorSetSpec::make(CheckMode::kCorrect, spec.num_qubits, spec.paulis);
  const Verdict verdict = check_vector_form(code, correct);
  if (!verdict.ok) {
    throw PreconditionError("degeneracy needs an error set the code corrects; first violation: " +
                            verdict.violations.front().describe());
  }
  const std::size_t size = correct.paulis.size() + 1;
  DegeneracyReport report;
  report.error_count = size;
  report.pair_count = verdict.pairs.size();
  for (std::size_t nu = 0; nu < code.num_blocks(); ++nu) {
    Eigen::MatrixXcd a(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t c = 0; c < size; ++c) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = verdict.alphas[r * size + c][nu];
    }
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    const auto& s = svd.singularValues();
    const double largest = s.size() > 0 ? s(0) : 0.0;
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s(i) > 1e-9 * largest) ++rank;
    }
    report.per_block_rank.push_back(rank);
    if (rank < size) report.degenerate = true;
  }
  return report;
}

std::vector<std::pair<std::size_t, ErrorSetSpec>> known_location_specs(const ErrorSetSpec& spec) {
  std::vector<PauliString> higher;
  std::set<std::size_t> locations;
  for (const auto& p : spec.paulis) {
    if (p.weight() == 1) {
      locations.insert(p.support().front());
    } else {
      higher.push_back(p);
    }
  }
  std::vector<std::pair<std::size_t, ErrorSetSpec>> out;
  for (std::size_t loc : locations) {
    std::vector<PauliString> errors;
    for (const auto& p : spec.paulis) {
      if (p.weight() == 1 && p.support().front() == loc) errors.push_back(p);
    }
    errors.insert(errors.end(), higher.begin(), higher.end());
    out.emplace_back(loc, ErrorSetSpec::make(CheckMode::kCorrect, spec.num_qubits, std::move(errors)));
  }
  return out;
}

LocatedDegeneracy known_location_degeneracy(const HybridCode& code, const ErrorSetSpec& spec) {
  LocatedDegeneracy out;
  for (const auto& [loc, located] : known_location_specs(spec)) {
    auto report = degeneracy(code, located);
    out.degenerate = out.degenerate || report.degenerate;
    out.per_location.emplace_back(loc, std::move(report));
  }
  return out;
}

bool detects(const HybridCode& code, const PauliString& error, double tolerance) {
  if (error.num_qubits() != code.num_qubits()) throw DimensionError("error and code qubit counts differ");
  const auto words = code.flat();
  const Eigen::MatrixXcd g = gram_of(words, error);
  const std::size_t k = code.block_size();
  for (std::size_t nu = 0; nu < code.num_blocks(); ++nu) {
    Complex alpha = 0;
    for (std::size_t i = 0; i < k; ++i) alpha += g(static_cast<Eigen::Index>(nu * k + i), static_cast<Eigen::Index>(nu * k + i));
    alpha /= static_cast<double>(k);
    for (std::size_t r = 0; r < words.size(); ++r) {
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t col = nu * k + i;
        const Complex expected = r == col ? alpha : Complex(0);
        if (std::abs(g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) - expected) > tolerance) return false;
      }
    }
  }
  return true;
}

DistanceResult find_distance(const HybridCode& code) {
  const std::size_t n = code.num_qubits();
  if (n > kMaxDistanceQubits) {
    throw CapacityError("distance search on " + std::to_string(n) + " qubits exceeds the limit of " +
                        std::to_string(kMaxDistanceQubits));
  }
  for (std::size_t w = 1; w <= n; ++w) {
    for (const auto& p : enumerate_paulis_of_weight(n, w)) {
      if (!detects(code, p)) return {w, p};
    }
  }
  return {n + 1, std::nullopt};
}

std::size_t hybrid_distance(const HybridCode& code) { return find_distance(code).distance; }

}  // namespace hqec
