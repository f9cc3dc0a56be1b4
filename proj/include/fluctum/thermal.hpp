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

#include <optional>

#include "fluctum/linalg.hpp"
#include "fluctum/matrix.hpp"
#include "fluctum/tolerance.hpp"

namespace fluctum {

/// Largest inverse temperature accepted by `gibbs`.
inline constexpr double kMaxBeta = 1e3;

/// Canonical equilibrium state exp(-beta H) / Z.
struct GibbsState {
  ComplexMatrix hamiltonian;
  double beta = 0.0;
  /// Spectrum and eigenbasis of the Hamiltonian the state was built from.
  EigenSystem spectrum;
  /// ln Z; stored because Z itself overflows for large beta * |E|.
  double log_partition = 0.0;
  ComplexMatrix rho;
  /// Populations of the eigenbasis states, aligned with `spectrum`.
  RealVector populations;
  /// -ln(Z) / beta; absent at beta = 0.
  std::optional<double> free_energy;

  double partition_function() const;
};

/// Throws ValidationError for non-Hermitian H and InvalidParameter for beta
/// outside [0, kMaxBeta] or non-finite.
GibbsState gibbs(const ComplexMatrix& h, double beta,
                 const Tolerances& tol = kDefaultTolerances);

/// ln Tr exp(-beta H) from eigenvalues, shifted by the minimum so the sum
/// never overflows. Defined for any real beta.
double log_partition_function(std::span<const double> energies, double beta);

/// Boltzmann weights exp(-beta e_i) / Z for any real beta.
RealVector boltzmann_weights(std::span<const double> energies, double beta);

/// F1 - F0 = -ln(Z1 / Z0) / beta. Throws UnsupportedError for beta = 0.
double free_energy_difference(const ComplexMatrix& h0, const ComplexMatrix& h1,
                              double beta,
                              const Tolerances& tol = kDefaultTolerances);

}  // namespace fluctum
