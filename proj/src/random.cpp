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

#include "fluctum/random.hpp"

#include <cmath>
#include <numeric>

namespace fluctum {

ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (auto& z : g.entries()) z = rng.complex_gaussian();
  return g;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng, double scale) {
  const ComplexMatrix g = random_ginibre(n, n, rng);
  return (g + g.adjoint()) * (0.5 * scale);
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  ComplexMatrix g = random_ginibre(n, n, rng);
  // Modified Gram-Schmidt over columns. A Ginibre matrix is singular with
  // probability zero.
  for (std::size_t j = 0; j < n; ++j) {
    ComplexVector col = g.column(j);
    for (std::size_t k = 0; k < j; ++k) {
      const ComplexVector prev = g.column(k);
      const Complex proj = inner(prev, col);
      for (std::size_t r = 0; r < n; ++r) col[r] -= proj * prev[r];
    }
    const double norm = std::sqrt(std::real(inner(col, col)));
    for (auto& z : col) z /= norm;
    g.set_column(j, col);
  }
  return g;
}

ComplexMatrix random_density_matrix(std::size_t n, Rng& rng) {
  const ComplexMatrix g = random_ginibre(n, n, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return rho;
}

ComplexVector random_unit_vector(std::size_t n, Rng& rng) {
  ComplexVector v(n);
  for (auto& z : v) z = rng.complex_gaussian();
  const double norm = std::sqrt(std::real(inner(v, v)));
  for (auto& z : v) z /= norm;
  return v;
}

RealVector random_distribution(std::size_t n, Rng& rng) {
  // Normalised exponentials are uniform on the simplex.
  RealVector p(n);
  for (auto& x : p) x = -std::log(1.0 - rng.uniform());
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& x : p) x /= total;
  return p;
}

}  // namespace fluctum
