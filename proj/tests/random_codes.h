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

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "hqec/code.h"

namespace hqec::fixtures {

// M*K Haar-random orthonormal codewords: columns of the Q factor of a
// complex Gaussian matrix.
inline HybridCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t k, std::size_t m) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(dim, static_cast<Eigen::Index>(k * m));
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) a(r, c) = Complex(g(rng), g(rng));
  }
  const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ() *
                             Eigen::MatrixXcd::Identity(dim, a.cols());
  std::vector<std::vector<StateVector>> blocks(m);
  for (std::size_t c = 0; c < k * m; ++c) {
    std::vector<Complex> amps(static_cast<std::size_t>(dim));
    for (Eigen::Index r = 0; r < dim; ++r) amps[static_cast<std::size_t>(r)] = q(r, static_cast<Eigen::Index>(c));
    blocks[c / k].push_back(StateVector::normalized(n, std::move(amps)));
  }
  return HybridCode(std::move(blocks));
}

}  // namespace hqec::fixtures
