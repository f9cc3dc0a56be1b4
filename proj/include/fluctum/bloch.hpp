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

#pragma once

#include <vector>

#include "fluctum/matrix.hpp"
#include "fluctum/tolerance.hpp"

namespace fluctum {

/// The N^2 - 1 generalized Gell-Mann matrices, normalised so that
/// Tr(l_i l_j) = 2 delta_ij. Order: symmetric pairs (j < k, lexicographic),
/// antisymmetric pairs (same order), then diagonal l = 1..N-1.
struct GeneratorBasis {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> generators;
};

/// Real coordinates of a traceless Hermitian operator in GeneratorBasis,
/// with X = (1/2) sum_j tau_j l_j.
struct BlochVector {
  std::size_t dim = 0;
  RealVector components;

  double norm() const;
};

/// Throws InvalidParameter for n < 2. Results are cached per dimension.
const GeneratorBasis& su_generators(std::size_t n);

/// tau_j = Tr(X l_j). Throws ValidationError if X is not Hermitian or not
/// traceless (|Tr X| >= tol.validation).
BlochVector to_bloch(const ComplexMatrix& x,
                     const Tolerances& tol = kDefaultTolerances);

/// X = (1/2) sum_j tau_j l_j. Throws DimensionError if the component count
/// is not dim^2 - 1.
ComplexMatrix from_bloch(const BlochVector& tau);

}  // namespace fluctum
