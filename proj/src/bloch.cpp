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

#include "fluctum/bloch.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "fluctum/errors.hpp"
#include "fluctum/linalg.hpp"

namespace fluctum {

namespace {

GeneratorBasis build_generators(std::size_t n) {
  GeneratorBasis basis;
  basis.dim = n;
  basis.generators.reserve(n * n - 1);
  const Complex i{0.0, 1.0};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      ComplexMatrix m(n, n);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      basis.generators.push_back(std::move(m));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      ComplexMatrix m(n, n);
      m(j, k) = -i;
      m(k, j) = i;
      basis.generators.push_back(std::move(m));
    }
  }
  for (std::size_t l = 1; l < n; ++l) {
    const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < l; ++k) m(k, k) = scale;
    m(l, l) = -scale * static_cast<double>(l);
    basis.generators.push_back(std::move(m));
  }
  return basis;
}

}  // namespace

double BlochVector::norm() const {
  return std::sqrt(std::inner_product(components.begin(), components.end(),
                                      components.begin(), 0.0));
}

const GeneratorBasis& su_generators(std::size_t n) {
  if (n < 2) {
    throw InvalidParameter("su_generators: dimension must be >= 2, got " +
                           std::to_string(n));
  }
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<const GeneratorBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const GeneratorBasis>(build_generators(n));
  return *slot;
}

BlochVector to_bloch(const ComplexMatrix& x, const Tolerances& tol) {
  require_hermitian(x, "to_bloch", tol);
  const Complex tr = x.trace();
  if (std::abs(tr) >= tol.validation) {
    throw ValidationError("to_bloch: operator is not traceless (trace " +
                          std::to_string(std::abs(tr)) + ")");
  }
  const GeneratorBasis& basis = su_generators(x.rows());
  BlochVector tau;
  tau.dim = x.rows();
  tau.components.reserve(basis.generators.size());
  for (const auto& g : basis.generators) {
    // Tr(X l) = <X^dagger, l> and X is Hermitian.
    tau.components.push_back(hs_inner(x, g).real());
  }
  return tau;
}

ComplexMatrix from_bloch(const BlochVector& tau) {
  const GeneratorBasis& basis = su_generators(tau.dim);
  if (tau.components.size() != basis.generators.size()) {
    throw DimensionError("from_bloch: expected " +
                         std::to_string(basis.generators.size()) +
                         " components, got " +
                         std::to_string(tau.components.size()));
  }
  ComplexMatrix x(tau.dim, tau.dim);
  for (std::size_t j = 0; j < tau.components.size(); ++j) {
    x += basis.generators[j] * (0.5 * tau.components[j]);
  }
  return x;
}

}  // namespace fluctum
