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

#include "fluctum/nonunitality.hpp"

#include <algorithm>
#include <cmath>

#include "fluctum/errors.hpp"
#include "fluctum/linalg.hpp"

namespace fluctum {

namespace {

double sqrt_clamped(double x) { return std::sqrt(std::max(x, 0.0)); }

}  // namespace

ComplexMatrix nonunitality_operator(const QuantumChannel& phi) {
  const auto na = static_cast<double>(phi.dim_in());
  const auto nb = static_cast<double>(phi.dim_out());
  ComplexMatrix g = apply(phi, ComplexMatrix::identity(phi.dim_in()) * (1.0 / na));
  g -= ComplexMatrix::identity(phi.dim_out()) * (1.0 / nb);
  return g;
}

std::vector<std::string> NonunitalityReport::violations(double slack) const {
  std::vector<std::string> out;
  if (unitality_defect > bound_prop2 + slack) out.emplace_back("prop2");
  if (unitality_defect > bound_dim + slack) out.emplace_back("dim");
  if (hs_norm > bound_rscmn + slack) out.emplace_back("rscmn");
  if (bound_rscmn > ceiling_rscmn + slack) out.emplace_back("rscmn_ceiling");
  if (tau.norm() > bound_tau + slack) out.emplace_back("tau");
  if (bound_tau > ceiling_tau + slack) out.emplace_back("tau_ceiling");
  return out;
}

NonunitalityReport bounds_report(const QuantumChannel& phi) {
  if (!phi.is_square()) {
    throw UnsupportedError("bounds_report requires a square channel");
  }
  const std::size_t n = phi.dim_in();
  const auto nd = static_cast<double>(n);
  NonunitalityReport r;
  r.dim = n;
  r.g = nonunitality_operator(phi);
  // G is Hermitian up to rounding; symmetrise before projecting.
  r.tau = to_bloch((r.g + r.g.adjoint()) * 0.5);
  r.hs_norm = hs_norm(r.g);

  const ComplexMatrix image_of_identity =
      apply(phi, ComplexMatrix::identity(n));
  r.map_norm = spectral_norm(image_of_identity);
  r.unitality_defect =
      hs_norm(image_of_identity - ComplexMatrix::identity(n));
  r.bound_prop2 = sqrt_clamped(nd * (r.map_norm - 1.0));
  r.bound_dim = std::sqrt(nd * (nd - 1.0));
  r.bound_rscmn = sqrt_clamped(r.map_norm / nd - 1.0 / nd);
  r.bound_tau = std::sqrt(2.0) * r.bound_rscmn;
  r.ceiling_rscmn = std::sqrt(1.0 - 1.0 / nd);
  r.ceiling_tau = std::sqrt(2.0 - 2.0 / nd);
  return r;
}

ChoiMarginalCheck choi_marginal_bound_check(const QuantumChannel& phi) {
  const ChoiMatrix& c = choi(phi);
  const std::size_t n = c.dim;
  const auto nd = static_cast<double>(n);
  const ComplexMatrix marginal = partial_trace(c.eta, n, n, Subsystem::A);
  ChoiMarginalCheck out;
  out.lhs = hs_norm(marginal - ComplexMatrix::identity(n) * (1.0 / nd));
  out.rhs = sqrt_clamped(map_norm(phi) - 1.0) / std::sqrt(nd);
  return out;
}

double hs_angle_with_hamiltonian(const ComplexMatrix& g,
                                 const ComplexMatrix& h) {
  return hs_inner(h, g).real();
}

}  // namespace fluctum
