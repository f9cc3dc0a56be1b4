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

#include <cstdint>
#include <limits>
#include <random>

#include "fluctum/matrix.hpp"

namespace fluctum {

/// SplitMix64 bit generator. Satisfies UniformRandomBitGenerator so it plugs
/// into the <random> distributions.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Seeded source of the random test objects used throughout the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double gaussian() { return normal_(engine_); }
  /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
  Complex complex_gaussian() {
    constexpr double kHalfSqrt2 = 0.70710678118654752440;
    return {kHalfSqrt2 * gaussian(), kHalfSqrt2 * gaussian()};
  }
  SplitMix64& engine() noexcept { return engine_; }

 private:
  SplitMix64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// (G + G^dagger) / 2 with Ginibre G, multiplied by `scale`.
ComplexMatrix random_hermitian(std::size_t n, Rng& rng, double scale = 1.0);

/// Haar-distributed unitary via Gram-Schmidt on a Ginibre matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

/// Normalised Ginibre-induced density matrix G G^dagger / Tr(G G^dagger).
ComplexMatrix random_density_matrix(std::size_t n, Rng& rng);

/// Unit vector with Gaussian components.
ComplexVector random_unit_vector(std::size_t n, Rng& rng);

/// Probability vector drawn uniformly from the simplex.
RealVector random_distribution(std::size_t n, Rng& rng);

}  // namespace fluctum
