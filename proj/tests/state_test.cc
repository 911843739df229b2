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

#include "hqec/state.h"

#include <gtest/gtest.h>

#include <cmath>

#include "hqec/errors.h"

using namespace hqec;

TEST(State, InnerProducts) {
  const auto zero = StateVector::single_qubit("0");
  const auto one = StateVector::single_qubit("1");
  const auto plus = StateVector::single_qubit("+");
  EXPECT_NEAR(std::abs(inner_product(zero, zero) - Complex(1)), 0, 1e-15);
  EXPECT_NEAR(std::abs(inner_product(zero, one)), 0, 1e-15);
  EXPECT_NEAR(std::abs(inner_product(plus, zero) - Complex(1 / std::sqrt(2.0))), 0, 1e-15);
  EXPECT_NEAR(std::abs(inner_product(StateVector::single_qubit("+i"), StateVector::single_qubit("-i"))), 0, 1e-15);
}

TEST(State, Construction) {
  EXPECT_THROW(StateVector::normalized(1, {0.0, 0.0}), DegenerateInputError);
  EXPECT_THROW(StateVector::normalized(2, {1.0, 0.0}), DimensionError);
  EXPECT_THROW(StateVector::from_amplitudes(1, {1.0, 1.0}), ValidationError);
  EXPECT_THROW(StateVector::single_qubit("2"), std::invalid_argument);
  EXPECT_THROW(StateVector::basis(2, 4), std::invalid_argument);
  EXPECT_THROW(StateVector::basis("01a"), std::invalid_argument);
  const auto s = StateVector::normalized(1, {3.0, 4.0});
  EXPECT_NEAR(s[0].real(), 0.6, 1e-15);
  EXPECT_EQ(StateVector::basis("10")[2], Complex(1));
}

TEST(State, TensorAndMarginals) {
  const auto s = StateVector::basis("1").tensor(StateVector::single_qubit("+"));
  EXPECT_EQ(s.num_qubits(), 2u);
  EXPECT_NEAR(s.probability(1, 1), 1.0, 1e-15);
  EXPECT_NEAR(s.probability(2, 0), 0.5, 1e-15);
  const auto rho = s.reduced_density(2);
  EXPECT_NEAR(rho(0, 1).real(), 0.5, 1e-15);
  EXPECT_THROW(s.reduced_density(3), std::invalid_argument);
}

TEST(State, OperatorBasics) {
  const auto plus = StateVector::single_qubit("+");
  const Operator p = Operator::outer(plus);
  EXPECT_LE(max_abs_diff(p * p, p), 1e-15);
  EXPECT_NEAR(p.trace().real(), 1.0, 1e-15);
  EXPECT_LE(max_abs_diff(Operator::identity(1) - Operator::identity(1), Operator::zero(1)), 0.0);
  EXPECT_THROW(Operator::identity(kMaxDenseQubits + 1), CapacityError);
}
