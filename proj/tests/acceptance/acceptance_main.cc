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

// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 0
// only when every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../random_codes.h"
#include "hqec/bounds.h"
#include "hqec/circuit.h"
#include "hqec/code.h"
#include "hqec/errors.h"
#include "hqec/pauli.h"
#include "hqec/search.h"
#include "hqec/verifier.h"

using namespace hqec;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome ac1_paper_detects() {
  const Verdict v = check_vector_form(builtin_paper_code(), paper_error_set());
  return {v.ok && v.max_residual <= 1e-9,
          "ok=" + std::string(v.ok ? "true" : "false") + " pairs=" + std::to_string(v.pairs.size()) +
              " max_residual=" + num(v.max_residual)};
}

// Codes whose codewords are distinct basis states with random phases; they
// pass diagonal error sets often enough to exercise alpha comparison.
HybridCode random_basis_code(std::mt19937_64& rng, std::size_t n, std::size_t k, std::size_t m) {
  std::vector<std::size_t> idx(std::size_t{1} << n);
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  std::vector<std::vector<StateVector>> blocks(m);
  for (std::size_t c = 0; c < k * m; ++c) {
    std::vector<Complex> amps(idx.size());
    amps[idx[c]] = std::polar(1.0, angle(rng));
    blocks[c / k].push_back(StateVector::normalized(n, amps));
  }
  return HybridCode(std::move(blocks));
}

ErrorSetSpec random_spec(std::mt19937_64& rng, std::size_t n, bool z_only) {
  std::vector<PauliString> chosen;
  std::uniform_int_distribution<int> letter(0, 3);
  const std::size_t count = 1 + rng() % 4;
  for (std::size_t e = 0; e < count; ++e) {
    std::vector<PauliLetter> letters(n);
    for (auto& l : letters) {
      const int r = letter(rng);
      l = z_only ? (r % 2 ? PauliLetter::Z : PauliLetter::I) : static_cast<PauliLetter>(r);
    }
    chosen.emplace_back(letters);
  }
  return ErrorSetSpec::make(rng() % 2 ? CheckMode::kCorrect : CheckMode::kDetect, n, chosen);
}

Outcome ac2_unification() {
  std::mt19937_64 rng(2024);
  std::vector<HybridCode> corpus = {builtin_paper_code(), builtin_simple_code()};
  std::size_t random_codes = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + i % 5;
    const std::size_t k = 1 + (i / 5) % 2;
    const std::size_t m = 1 + (i / 10) % 3;
    if (k * m > (std::size_t{1} << n)) continue;
    corpus.push_back(fixtures::random_code(rng, n, k, m));
    ++random_codes;
  }
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + i % 5;
    const std::size_t k = 1 + (i / 5) % 2;
    const std::size_t m = 1 + (i / 10) % 3;
    if (k * m > (std::size_t{1} << n)) continue;
    corpus.push_back(random_basis_code(rng, n, k, m));
    ++random_codes;
  }

  std::size_t checks = 0, agreeing = 0, passing = 0;
  double worst_alpha = 0;
  for (const auto& code : corpus) {
    const std::size_t n = code.num_qubits();
    std::vector<ErrorSetSpec> specs = {ErrorSetSpec::make(CheckMode::kDetect, n, {}),
                                       parse_error_spec("detect:single", n), random_spec(rng, n, false),
                                       random_spec(rng, n, true)};
    if (n == 4) specs.push_back(paper_error_set());
    for (const auto& spec : specs) {
      const Verdict v = check_vector_form(code, spec);
      const Verdict o = check_operator_form(code, spec);
      ++checks;
      bool agree = v.ok == o.ok;
      if (agree && v.ok) {
        ++passing;
        for (std::size_t p = 0; p < v.alphas.size(); ++p) {
          for (std::size_t b = 0; b < v.alphas[p].size(); ++b) {
            const double d = std::abs(v.alphas[p][b] - o.alphas[p][b]);
            worst_alpha = std::max(worst_alpha, d);
            if (d > 1e-9) agree = false;
          }
        }
      }
      if (agree) ++agreeing;
    }
  }
  return {random_codes >= 100 && agreeing == checks && passing > 0,
          std::to_string(random_codes) + " random codes + 2 built-ins, " + std::to_string(agreeing) + "/" +
              std::to_string(checks) + " verdicts agree, " + std::to_string(passing) +
              " passing, max alpha diff=" + num(worst_alpha)};
}

Outcome ac3_simple_alphas() {
  const Verdict v = check_vector_form(builtin_simple_code(), parse_error_spec("correct:Z1", 2));
  if (!v.ok) return {false, "simple code does not correct Z1"};
  const PauliString id(2), z1 = PauliString::parse("Z1", 2);
  const Complex a0 = *v.alpha(id, z1, 0), a1 = *v.alpha(id, z1, 1);
  const double d0 = std::abs(a0 - Complex(1)), d1 = std::abs(a1 - Complex(-1));
  return {d0 <= 1e-12 && d1 <= 1e-12, "alpha0=" + num(a0.real()) + " alpha1=" + num(a1.real())};
}

Outcome ac4_bounds() {
  const auto q = quantum_hamming({5, 1, 1, 1});
  const auto h = hybrid_hamming({4, 1, 2, 1});
  const bool pass = q.holds && q.slack == 0 && !h.holds && h.lhs == 52 && h.rhs == 16;
  return {pass, "quantum(5,1,1): " + q.lhs.str() + "<=" + q.rhs.str() + " slack " + q.slack.str() +
                    "; hybrid(4,1,2,1): lhs=" + h.lhs.str() + " rhs=" + h.rhs.str()};
}

Outcome ac5_degeneracy() {
  const LocatedDegeneracy d = known_location_degeneracy(builtin_paper_code(), paper_error_set());
  const bool bound_fails = !hybrid_hamming({4, 1, 2, 1}).holds;
  std::string ranks;
  for (const auto& [loc, rep] : d.per_location) {
    ranks += " loc" + std::to_string(loc) + "=" + std::to_string(rep.per_block_rank[0]) + "," +
             std::to_string(rep.per_block_rank[1]) + "/" + std::to_string(rep.error_count);
  }
  return {d.degenerate && bound_fails, std::string("degenerate=") + (d.degenerate ? "true" : "false") +
                                           " (known-location sets, rank/size:" + ranks + "), hybrid bound " +
                                           (bound_fails ? "violated" : "holds")};
}

Outcome ac6_encoder() {
  const HybridCode code = builtin_paper_code();
  double worst = 1;
  for (int c : {0, 1}) {
    for (int q : {0, 1}) {
      const auto out = simulate(encode_circuit(), encoder_input(StateVector::basis(1, q), c));
      worst = std::min(worst, std::abs(inner_product(code.codeword(c, q), out)));
    }
  }
  return {worst >= 1 - 1e-9, "as-published encoder, min |overlap|=" + num(worst)};
}

Outcome ac7_decoder() {
  const auto count_passed = [](const std::vector<RoundTripReport>& sweep) {
    std::size_t n = 0;
    for (const auto& r : sweep) n += r.passed() ? 1 : 0;
    return n;
  };
  const auto published = roundtrip_sweep(DecoderVariant::kPublished);
  const std::size_t pub_ok = count_passed(published);
  std::string detail = "as-published decoders " + std::to_string(pub_ok) + "/" + std::to_string(published.size());
  if (pub_ok == published.size() && published.size() == 72) return {true, detail};

  const auto synthesized = roundtrip_sweep(DecoderVariant::kSynthesized);
  const std::size_t syn_ok = count_passed(synthesized);
  const std::string report = decoder_discrepancy_report();
  std::cout << report;
  detail += "; synthesized decoders " + std::to_string(syn_ok) + "/" + std::to_string(synthesized.size()) +
            "; discrepancy report " + std::to_string(report.size()) + " bytes";
  return {synthesized.size() == 72 && syn_ok == 72 && !report.empty(), detail};
}

Outcome ac8_distance() {
  const HybridCode code = builtin_paper_code();
  bool all_single = true;
  for (const auto& e : enumerate_paulis_of_weight(4, 1)) all_single = all_single && detects(code, e);
  const DistanceResult d = find_distance(code);
  const bool witness_ok = d.witness && d.witness->weight() == 2 && !detects(code, *d.witness);
  return {d.distance == 2 && all_single && witness_ok,
          "distance=" + std::to_string(d.distance) + ", weight-1 all detected=" + (all_single ? "true" : "false") +
              ", weight-2 violator=" + (d.witness ? d.witness->sparse_str() : "none")};
}

Outcome ac9_search() {
  SearchSpec s;
  s.n = 4;
  s.block_size = 2;
  s.num_blocks = 2;
  s.max_terms = 2;
  s.errors = paper_error_set();
  s.limit = 1'000'000;
  const auto start = std::chrono::steady_clock::now();
  const SearchResult r = search(s);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string target = canonicalize(builtin_paper_code()).key;
  bool found = false, all_verify = true;
  for (const auto& c : r.codes) {
    found = found || c.key == target;
    all_verify = all_verify && check_vector_form(c.code, s.errors).ok;
  }
  return {!r.codes.empty() && found && all_verify && r.codes.size() == r.total_survivors,
          std::to_string(r.total_survivors) + " survivors, contains built-in=" + (found ? "true" : "false") +
              ", all re-verify=" + (all_verify ? "true" : "false") + ", " + std::to_string(r.nodes) + " nodes, " +
              num(secs) + " s"};
}

Outcome ac10_algebra() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> letter(0, 3);
  const auto random_pauli = [&](std::size_t n) {
    std::vector<PauliLetter> l(n);
    for (auto& x : l) x = static_cast<PauliLetter>(letter(rng));
    return PauliString(l, static_cast<unsigned>(letter(rng)));
  };
  double worst_mul = 0;
  for (int i = 0; i < 10'000; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    const PauliString a = random_pauli(n), b = random_pauli(n);
    worst_mul = std::max(worst_mul, max_abs_diff(pauli_matrix(pauli_multiply(a, b)), pauli_matrix(a) * pauli_matrix(b)));
  }
  std::normal_distribution<double> g;
  double worst_apply = 0;
  for (int i = 0; i < 2'000; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 6);
    std::vector<Complex> raw(std::size_t{1} << n);
    for (auto& a : raw) a = Complex(g(rng), g(rng));
    const StateVector s = StateVector::normalized(n, raw);
    const PauliString p = random_pauli(n);
    const StateVector fast = apply_pauli(p, s);
    const auto dense = pauli_matrix(p).apply(s);
    for (std::size_t k = 0; k < dense.size(); ++k) worst_apply = std::max(worst_apply, std::abs(fast[k] - dense[k]));
  }
  return {worst_mul <= 1e-12 && worst_apply <= 1e-12,
          "10000 products max dev=" + num(worst_mul) + ", 2000 applications max dev=" + num(worst_apply)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 hybrid condition on the [[4,1:1,2]] code", ac1_paper_detects},
      {"AC2 vector form and operator form agree", ac2_unification},
      {"AC3 simple code alpha signs", ac3_simple_alphas},
      {"AC4 exact Hamming bounds", ac4_bounds},
      {"AC5 [[4,1:1,2]] code is degenerate", ac5_degeneracy},
      {"AC6 encoder maps inputs to codewords", ac6_encoder},
      {"AC7 decoder round trip under single-qubit errors", ac7_decoder},
      {"AC8 distance of the [[4,1:1,2]] code is 2", ac8_distance},
      {"AC9 search recovers the [[4,1:1,2]] code", ac9_search},
      {"AC10 Pauli algebra against dense matrices", ac10_algebra},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
