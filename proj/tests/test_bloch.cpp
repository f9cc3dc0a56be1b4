// Copyright 2026 The Fluctum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "fluctum/bloch.hpp"
#include "fluctum/errors.hpp"
#include "fluctum/linalg.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace fluctum;
using testing::max_entry_diff;

namespace {

ComplexMatrix random_traceless_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix h = random_hermitian(n, rng);
  return h - ComplexMatrix::identity(n) * (h.trace() / double(n));
}

}  // namespace

TEST_CASE("qubit generators are the Pauli matrices") {
  const GeneratorBasis& b = su_generators(2);
  REQUIRE(b.generators.size() == 3);
  CHECK(max_entry_diff(b.generators[0], testing::sigma_x()) == 0.0);
  CHECK(max_entry_diff(b.generators[1], testing::sigma_y()) == 0.0);
  CHECK(max_entry_diff(b.generators[2], testing::sigma_z()) <= 1e-15);
}

TEST_CASE("Gell-Mann matrices for a qutrit") {
  const GeneratorBasis& b = su_generators(3);
  REQUIRE(b.generators.size() == 8);
  // lambda_8 = diag(1, 1, -2) / sqrt(3).
  const ComplexMatrix& l8 = b.generators[7];
  CHECK_NEAR(l8(0, 0).real(), 1.0 / std::sqrt(3.0), 1e-15);
  CHECK_NEAR(l8(2, 2).real(), -2.0 / std::sqrt(3.0), 1e-15);
  // Antisymmetric block: -i at (j, k), +i at (k, j).
  CHECK(b.generators[3](0, 1) == Complex(0.0, -1.0));
  CHECK(b.generators[3](1, 0) == Complex(0.0, 1.0));
}

TEST_CASE("generator orthogonality and tracelessness") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const GeneratorBasis& b = su_generators(n);
    REQUIRE(b.generators.size() == n * n - 1);
    for (std::size_t i = 0; i < b.generators.size(); ++i) {
      CHECK(std::abs(oracle::trace(b.generators[i])) < 1e-12);
      CHECK(hermiticity_defect(b.generators[i]) == 0.0);
      for (std::size_t j = 0; j < b.generators.size(); ++j) {
        const Complex t = oracle::trace(oracle::mul(b.generators[i], b.generators[j]));
        CHECK(std::abs(t - (i == j ? 2.0 : 0.0)) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(su_generators(1), InvalidParameter);
  CHECK_THROWS_AS(su_generators(0), InvalidParameter);
}

TEST_CASE("to_bloch") {
  const BlochVector t = to_bloch(testing::sigma_z() * 0.5);
  REQUIRE(t.components.size() == 3);
  CHECK_NEAR(t.components[0], 0.0, 1e-15);
  CHECK_NEAR(t.components[1], 0.0, 1e-15);
  CHECK_NEAR(t.components[2], 1.0, 1e-15);

  const BlochVector zero = to_bloch(ComplexMatrix(4, 4));
  CHECK(zero.dim == 4);
  CHECK(zero.norm() == 0.0);

  CHECK_THROWS_AS(to_bloch(ComplexMatrix::identity(2)), ValidationError);
  CHECK_THROWS_AS(to_bloch(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), ValidationError);
}

TEST_CASE("from_bloch") {
  CHECK(max_entry_diff(from_bloch({3, RealVector(8, 0.0)}), ComplexMatrix(3, 3)) == 0.0);
  const double p = 0.37;
  const ComplexMatrix g = from_bloch({2, {0.0, 0.0, -p}});
  CHECK(max_entry_diff(g, testing::sigma_z() * (-p / 2)) <= 1e-15);
  CHECK_THROWS_AS(from_bloch({3, RealVector(3, 0.0)}), DimensionError);
}

TEST_CASE("round trip and norm identity") {
  Rng rng(21);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix x = random_traceless_hermitian(n, rng);
      const BlochVector tau = to_bloch(x);
      CHECK(max_entry_diff(from_bloch(tau), x) <= 1e-12);

      BlochVector r{n, RealVector(n * n - 1)};
      for (double& c : r.components) c = rng.gaussian();
      const ComplexMatrix y = from_bloch(r);
      CHECK_NEAR(oracle::hs(y, y).real(), 0.5 * r.norm() * r.norm(), 1e-12);
      CHECK(hermiticity_defect(y) <= 1e-15);
      CHECK(std::abs(y.trace()) <= 1e-13);
    }
  }
}
