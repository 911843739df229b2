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

#include <gtest/gtest.h>

#include <random>

#include "hqec/errors.h"
#include "random_codes.h"

using namespace hqec;

namespace {

PauliString P(const char* label, std::size_t n) { return PauliString::parse(label, n); }

HybridCode trivial_zero() { return parse_code("n 1\nblock 0\ncw +1 0\n"); }

ErrorSetSpec random_spec(std::mt19937_64& rng, std::size_t n) {
  const auto all = enumerate_paulis(n, std::min<std::size_t>(n, 2));
  std::uniform_int_distribution<std::size_t> pick(1, all.size() - 1);
  std::vector<PauliString> chosen;
  for (int i = 0; i < 3; ++i) chosen.push_back(all[pick(rng)]);
  return ErrorSetSpec::make(rng() % 2 ? CheckMode::kCorrect : CheckMode::kDetect, n, chosen);
}

}  // namespace

TEST(ErrorSpec, Parse) {
  const auto s = parse_error_spec("detect:single,Z1Z2,Z3Z4", 4);
  EXPECT_EQ(s.mode, CheckMode::kDetect);
  EXPECT_EQ(s.paulis.size(), 14u);
  EXPECT_EQ(parse_error_spec("correct:weight<=2", 4).paulis.size(), 66u);
  EXPECT_EQ(parse_error_spec("X1,X1,I", 2).paulis.size(), 1u);
  EXPECT_EQ(parse_error_spec("", 2).paulis.size(), 0u);
  EXPECT_EQ(parse_error_spec("correct:", 2).mode, CheckMode::kCorrect);
  EXPECT_THROW(parse_error_spec("weight<=5", 4), ArgumentError);
  EXPECT_THROW(parse_error_spec("X9", 4), DimensionError);
  EXPECT_THROW(parse_error_spec("fix:X1", 4), std::invalid_argument);
  EXPECT_THROW(ErrorSetSpec::make(CheckMode::kDetect, 1, {PauliString::parse("-X")}), ArgumentError);
}

TEST(ErrorSpec, FourQubitSet) {
  const auto s = paper_error_set();
  EXPECT_EQ(s.paulis.size(), 14u);
  EXPECT_EQ(s.paulis.back(), P("Z3Z4", 4));
}

TEST(Pairs, Expansion) {
  EXPECT_EQ(expand_pairs(parse_error_spec("detect:Z1", 2)).size(), 2u);
  const auto correct = expand_pairs(parse_error_spec("correct:Z1", 2));
  EXPECT_EQ(correct.size(), 4u);
  EXPECT_EQ(correct[1].b, P("Z1", 2));
  EXPECT_EQ(expand_pairs(paper_error_set(CheckMode::kCorrect)).size(), 225u);
}

TEST(VectorForm, FourQubitDetects) {
  const Verdict v = check_vector_form(builtin_paper_code(), paper_error_set());
  EXPECT_TRUE(v.ok);
  EXPECT_LE(v.max_residual, 1e-9);
  EXPECT_TRUE(v.violations.empty());
  // Z1Z2 acts as +1 on block 0 and -1 on block 1.
  EXPECT_NEAR(v.alpha(PauliString(4), P("Z1Z2", 4), 0)->real(), 1.0, 1e-12);
  EXPECT_NEAR(v.alpha(PauliString(4), P("Z1Z2", 4), 1)->real(), -1.0, 1e-12);
  EXPECT_NEAR(std::abs(*v.alpha(PauliString(4), P("X1", 4), 0)), 0.0, 1e-12);
}

TEST(VectorForm, SimpleCorrectsZ1) {
  const Verdict v = check_vector_form(builtin_simple_code(), parse_error_spec("correct:Z1", 2));
  ASSERT_TRUE(v.ok);
  EXPECT_NEAR(std::abs(*v.alpha(PauliString(2), P("Z1", 2), 0) - Complex(1)), 0, 1e-12);
  EXPECT_NEAR(std::abs(*v.alpha(PauliString(2), P("Z1", 2), 1) - Complex(-1)), 0, 1e-12);
}

TEST(VectorForm, SimpleFailsX1) {
  const Verdict v = check_vector_form(builtin_simple_code(), parse_error_spec("correct:X1", 2));
  EXPECT_FALSE(v.ok);
  EXPECT_TRUE(v.alphas.empty());
  bool found = false;
  for (const auto& viol : v.violations) {
    if (viol.kind == ViolationKind::kCrossBlock && viol.pair.a.is_identity_letters() && viol.block_row == 0u &&
        viol.block_col == 1u && viol.i == 0 && viol.j == 0) {
      found = true;
      EXPECT_NEAR(std::abs(viol.measured - Complex(1)), 0, 1e-12);
      EXPECT_FALSE(viol.describe().empty());
    }
  }
  EXPECT_TRUE(found);
  EXPECT_FALSE(check_operator_form(builtin_simple_code(), parse_error_spec("correct:X1", 2)).ok);
}

TEST(VectorForm, ViolationsAreSorted) {
  const Verdict v = check_vector_form(builtin_simple_code(), parse_error_spec("correct:X1,X2", 2));
  ASSERT_GT(v.violations.size(), 1u);
  for (std::size_t i = 1; i < v.violations.size(); ++i) {
    EXPECT_LE(v.violations[i - 1].pair_index, v.violations[i].pair_index);
  }
}

TEST(VectorForm, IdentityOnlyAlwaysPasses) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const HybridCode code = fixtures::random_code(rng, 3, 2, 2);
    const Verdict v = check_vector_form(code, ErrorSetSpec::make(CheckMode::kDetect, 3, {}));
    EXPECT_TRUE(v.ok);
    EXPECT_NEAR(std::abs(*v.alpha(PauliString(3), PauliString(3), 1) - Complex(1)), 0, 1e-12);
  }
}

TEST(VectorForm, DimensionMismatch) {
  EXPECT_THROW(check_vector_form(builtin_simple_code(), paper_error_set()), DimensionError);
}

TEST(OperatorForm, FourQubitAgreesWithVectorForm) {
  const auto spec = paper_error_set();
  const Verdict v = check_vector_form(builtin_paper_code(), spec);
  const Verdict o = check_operator_form(builtin_paper_code(), spec);
  ASSERT_TRUE(o.ok);
  for (std::size_t p = 0; p < v.alphas.size(); ++p) {
    for (std::size_t b = 0; b < 2; ++b) EXPECT_LE(std::abs(v.alphas[p][b] - o.alphas[p][b]), 1e-12);
  }
}

TEST(OperatorForm, TrivialCode) {
  const Verdict o = check_operator_form(trivial_zero(), parse_error_spec("detect:Z1", 1));
  ASSERT_TRUE(o.ok);
  EXPECT_NEAR(o.alpha(PauliString(1), P("Z1", 1), 0)->real(), 1.0, 1e-12);
}

TEST(Unification, RandomCorpus) {
  std::mt19937_64 rng(17);
  int passing = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + i % 4;
    const std::size_t k = 1 + (i / 4) % 2;
    const std::size_t m = (std::size_t{1} << n) >= 2 * k ? 1 + (i / 8) % 2 : 1;
    const HybridCode code = fixtures::random_code(rng, n, k, m);
    const ErrorSetSpec spec = random_spec(rng, n);
    const Verdict v = check_vector_form(code, spec);
    const Verdict o = check_operator_form(code, spec);
    ASSERT_EQ(v.ok, o.ok) << i;
    if (!v.ok) continue;
    ++passing;
    for (std::size_t p = 0; p < v.alphas.size(); ++p) {
      for (std::size_t b = 0; b < m; ++b) EXPECT_LE(std::abs(v.alphas[p][b] - o.alphas[p][b]), 1e-9);
    }
  }
  EXPECT_GT(passing, 0);
}

TEST(Properties, HermitianAlphas) {
  const Verdict v = check_vector_form(builtin_paper_code(), parse_error_spec("correct:X1,Z1,Z1Z2,Z3Z4", 4));
  ASSERT_TRUE(v.ok);
  for (std::size_t p = 0; p < v.pairs.size(); ++p) {
    for (std::size_t b = 0; b < 2; ++b) {
      const auto ab = v.alpha(v.pairs[p].a, v.pairs[p].b, b);
      const auto ba = v.alpha(v.pairs[p].b, v.pairs[p].a, b);
      ASSERT_TRUE(ab && ba);
      EXPECT_LE(std::abs(*ab - std::conj(*ba)), 1e-12);
    }
  }
}

TEST(Properties, CorrectImpliesDetect) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 2 + i % 2;
    const ErrorSetSpec spec = random_spec(rng, n);
    const ErrorSetSpec correct = ErrorSetSpec::make(CheckMode::kCorrect, n, spec.paulis);
    const ErrorSetSpec detect = ErrorSetSpec::make(CheckMode::kDetect, n, spec.paulis);
    for (const HybridCode& code : std::vector<HybridCode>{builtin_simple_code(), fixtures::random_code(rng, n, 1, 2)}) {
      if (code.num_qubits() != n) continue;
      if (check_vector_form(code, correct).ok) EXPECT_TRUE(check_vector_form(code, detect).ok);
    }
  }
}

TEST(Properties, DistanceAtLeastTwoIffSingleDetect) {
  std::mt19937_64 rng(29);
  std::vector<HybridCode> codes = {builtin_paper_code(), builtin_simple_code(), trivial_zero()};
  for (int i = 0; i < 5; ++i) codes.push_back(fixtures::random_code(rng, 3, 1, 1));
  for (const auto& code : codes) {
    const bool single = check_vector_form(code, parse_error_spec("detect:single", code.num_qubits())).ok;
    EXPECT_EQ(hybrid_distance(code) >= 2, single);
  }
}

TEST(Degeneracy, FourQubitKnownLocation) {
  const LocatedDegeneracy d = known_location_degeneracy(builtin_paper_code(), paper_error_set());
  EXPECT_TRUE(d.degenerate);
  ASSERT_EQ(d.per_location.size(), 4u);
  for (const auto& [loc, rep] : d.per_location) {
    EXPECT_EQ(rep.error_count, 6u);
    EXPECT_EQ(rep.per_block_rank, (std::vector<std::size_t>{4, 4})) << loc;
  }
}

TEST(Degeneracy, FourQubitWholeSetIsNotCorrectable) {
  EXPECT_THROW(degeneracy(builtin_paper_code(), paper_error_set()), PreconditionError);
}

TEST(Degeneracy, KnownLocationSpecs) {
  const auto specs = known_location_specs(paper_error_set());
  ASSERT_EQ(specs.size(), 4u);
  EXPECT_EQ(specs[2].first, 3u);
  EXPECT_EQ(specs[2].second.mode, CheckMode::kCorrect);
  EXPECT_EQ(specs[2].second.paulis.size(), 5u);
}

TEST(Degeneracy, TrivialCode) {
  const DegeneracyReport d = degeneracy(trivial_zero(), parse_error_spec("Z1", 1));
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.per_block_rank, std::vector<std::size_t>{1});
}

TEST(Degeneracy, SimpleCodeActualRank) {
  // A^nu = [[1, +-1], [+-1, 1]] is rank one in each block.
  const DegeneracyReport d = degeneracy(builtin_simple_code(), parse_error_spec("correct:Z1", 2));
  EXPECT_EQ(d.per_block_rank, (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.pair_count, 4u);
}

TEST(Degeneracy, NondegenerateExample) {
  // |0> with {X}: A = [[1,0],[0,1]].
  const DegeneracyReport d = degeneracy(trivial_zero(), parse_error_spec("correct:X1", 1));
  EXPECT_FALSE(d.degenerate);
  EXPECT_EQ(d.per_block_rank, std::vector<std::size_t>{2});
}

TEST(Distance, Examples) {
  const DistanceResult paper = find_distance(builtin_paper_code());
  EXPECT_EQ(paper.distance, 2u);
  ASSERT_TRUE(paper.witness);
  EXPECT_EQ(paper.witness->weight(), 2u);
  EXPECT_FALSE(detects(builtin_paper_code(), *paper.witness));
  for (const auto& e : enumerate_paulis_of_weight(4, 1)) EXPECT_TRUE(detects(builtin_paper_code(), e));
  EXPECT_EQ(hybrid_distance(builtin_simple_code()), 1u);
  EXPECT_EQ(hybrid_distance(parse_code("n 1\nblock 0\ncw +1 0\ncw +1 1\n")), 1u);
}

TEST(Distance, CapacityGuard) {
  std::vector<Complex> amps(std::size_t{1} << 11);
  amps[0] = 1;
  const HybridCode big({{StateVector::normalized(11, amps)}});
  EXPECT_THROW(find_distance(big), CapacityError);
}
