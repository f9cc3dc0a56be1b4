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

#include "fluctum/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fluctum/errors.hpp"

namespace fluctum {

namespace {

void require_beta(double beta) {
  if (!std::isfinite(beta) || beta < 0.0 || beta > kMaxBeta) {
    throw InvalidParameter("inverse temperature must lie in [0, " +
                           std::to_string(kMaxBeta) + "], got " +
                           std::to_string(beta));
  }
}

// Reference energy for the shift: the minimum for beta >= 0 and the maximum
// for beta < 0, so every exponent is <= 0.
double reference_energy(std::span<const double> energies, double beta) {
  const auto [lo, hi] = std::minmax_element(energies.begin(), energies.end());
  return beta >= 0.0 ? *lo : *hi;
}

}  // namespace

double GibbsState::partition_function() const {
  return std::exp(log_partition);
}

double log_partition_function(std::span<const double> energies, double beta) {
  if (energies.empty()) throw DimensionError("empty spectrum");
  const double ref = reference_energy(energies, beta);
  double sum = 0.0;
  for (double e : energies) sum += std::exp(-beta * (e - ref));
  return -beta * ref + std::log(sum);
}

RealVector boltzmann_weights(std::span<const double> energies, double beta) {
  if (energies.empty()) throw DimensionError("empty spectrum");
  const double ref = reference_energy(energies, beta);
  RealVector w(energies.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    w[i] = std::exp(-beta * (energies[i] - ref));
    sum += w[i];
  }
  for (auto& x : w) x /= sum;
  return w;
}

GibbsState gibbs(const ComplexMatrix& h, double beta, const Tolerances& tol) {
  require_beta(beta);
  GibbsState g;
  g.hamiltonian = h;
  g.beta = beta;
  g.spectrum = eigh(h, tol);
  g.log_partition = log_partition_function(g.spectrum.eigenvalues, beta);
  g.populations = boltzmann_weights(g.spectrum.eigenvalues, beta);
  if (beta == 0.0) {
    // Exactly I/N, independent of the eigenbasis.
    const std::size_t n = h.rows();
    g.rho = ComplexMatrix::identity(n) * (1.0 / static_cast<double>(n));
  } else {
    EigenSystem weighted{g.populations, g.spectrum.eigenvectors};
    g.rho = func_hermitian(weighted, [](double p) { return p; });
    g.free_energy = -g.log_partition / beta;
  }
  return g;
}

double free_energy_difference(const ComplexMatrix& h0, const ComplexMatrix& h1,
                              double beta, const Tolerances& tol) {
  if (beta == 0.0) {
    throw UnsupportedError("free energy is undefined at beta = 0");
  }
  require_beta(beta);
  const double log_z0 = log_partition_function(eigh(h0, tol).eigenvalues, beta);
  const double log_z1 = log_partition_function(eigh(h1, tol).eigenvalues, beta);
  return -(log_z1 - log_z0) / beta;
}

}  // namespace fluctum
