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

#include "fluctum/fluctuation.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "fluctum/errors.hpp"
#include "fluctum/nonunitality.hpp"
#include "fluctum/thermal.hpp"

namespace fluctum {

namespace {

constexpr double kNegativeProbabilitySlack = 1e-12;
constexpr double kGroundGapRelative = 1e-8;

double relative_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

void require_distribution(std::span<const double> p, std::size_t n,
                          const Tolerances& tol) {
  if (p.size() != n) {
    throw ValidationError("initial distribution has " +
                          std::to_string(p.size()) + " entries, expected " +
                          std::to_string(n));
  }
  double total = 0.0;
  for (double x : p) {
    if (!(x >= -kNegativeProbabilitySlack)) {
      throw ValidationError("initial distribution has a negative entry");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > tol.validation) {
    throw ValidationError("initial distribution sums to " +
                          std::to_string(total));
  }
}

// rho = sum_k w_k |v_k><v_k| on the given basis.
ComplexMatrix state_on_basis(const EigenSystem& basis,
                             std::span<const double> weights) {
  EigenSystem weighted{RealVector(weights.begin(), weights.end()),
                       basis.eigenvectors};
  return func_hermitian(weighted, [](double w) { return w; });
}

}  // namespace

TpmDistribution tpm_distribution(const QuantumChannel& phi,
                                 const EigenSystem& initial,
                                 std::span<const double> p_a,
                                 const EigenSystem& final_basis,
                                 const Tolerances& tol) {
  if (initial.dim() != phi.dim_in() || final_basis.dim() != phi.dim_out()) {
    throw DimensionError("tpm_distribution: observable dimensions do not "
                         "match the channel");
  }
  require_distribution(p_a, initial.dim(), tol);

  TpmDistribution d;
  d.a_values = initial.eigenvalues;
  d.b_values = final_basis.eigenvalues;
  d.p_a.assign(p_a.begin(), p_a.end());
  const std::size_t na = initial.dim();
  const std::size_t nb = final_basis.dim();
  d.cond.assign(na, RealVector(nb));
  d.joint.assign(na, RealVector(nb));

  std::vector<ComplexVector> b_vectors;
  b_vectors.reserve(nb);
  for (std::size_t j = 0; j < nb; ++j) b_vectors.push_back(final_basis.vector(j));

  for (std::size_t i = 0; i < na; ++i) {
    const ComplexMatrix out =
        apply(phi, ComplexMatrix::projector(initial.vector(i)));
    for (std::size_t j = 0; j < nb; ++j) {
      d.cond[i][j] = expectation(out, b_vectors[j]).real();
      d.joint[i][j] = d.p_a[i] * d.cond[i][j];
    }
  }
  return d;
}

TpmDistribution tpm_distribution(const QuantumChannel& phi,
                                 const ComplexMatrix& a,
                                 std::span<const double> p_a,
                                 const ComplexMatrix& b,
                                 const Tolerances& tol) {
  if (a.rows() != phi.dim_in() || b.rows() != phi.dim_out()) {
    throw DimensionError("tpm_distribution: observable dimensions do not "
                         "match the channel");
  }
  return tpm_distribution(phi, eigh(a, tol), p_a, eigh(b, tol), tol);
}

double double_bracket(const TpmDistribution& dist,
                      const std::function<double(double, double)>& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < dist.joint.size(); ++i) {
    for (std::size_t j = 0; j < dist.joint[i].size(); ++j) {
      acc += dist.joint[i][j] * f(dist.a_values[i], dist.b_values[j]);
    }
  }
  return acc;
}

IdentityCheck proposition1_check(const QuantumChannel& phi,
                                 const ComplexMatrix& a, double alpha,
                                 const ComplexMatrix& b, double beta,
                                 const Tolerances& tol) {
  const EigenSystem es_a = eigh(a, tol);
  const EigenSystem es_b = eigh(b, tol);
  const RealVector p_a = boltzmann_weights(es_a.eigenvalues, alpha);
  const TpmDistribution dist = tpm_distribution(phi, es_a, p_a, es_b, tol);

  IdentityCheck out;
  out.lhs = double_bracket(dist, [alpha, beta](double x, double y) {
    return std::exp(alpha * x - beta * y);
  });

  const auto na = static_cast<double>(phi.dim_in());
  const auto nb = static_cast<double>(phi.dim_out());
  const double log_za = log_partition_function(es_a.eigenvalues, alpha);
  const double log_zb = log_partition_function(es_b.eigenvalues, beta);
  const ComplexMatrix rho_b =
      state_on_basis(es_b, boltzmann_weights(es_b.eigenvalues, beta));
  const double tr_rho_g = hs_inner(rho_b, nonunitality_operator(phi)).real();
  out.rhs = (na / nb) * std::exp(log_zb - log_za) * (1.0 + nb * tr_rho_g);
  out.residual = relative_residual(out.lhs, out.rhs);
  return out;
}

JarzynskiReport generalized_jarzynski(const QuantumChannel& phi,
                                      const ComplexMatrix& h0,
                                      const ComplexMatrix& h1, double beta0,
                                      double beta1, const Tolerances& tol) {
  if (!phi.is_square() || h0.rows() != phi.dim_in() ||
      h1.rows() != phi.dim_out()) {
    throw DimensionError("generalized_jarzynski: Hamiltonian dimensions do "
                         "not match the channel");
  }
  const GibbsState g0 = gibbs(h0, beta0, tol);
  const GibbsState g1 = gibbs(h1, beta1, tol);
  const TpmDistribution dist =
      tpm_distribution(phi, g0.spectrum, g0.populations, g1.spectrum, tol);

  JarzynskiReport r;
  r.dim = phi.dim_in();
  r.beta0 = beta0;
  r.beta1 = beta1;
  r.lhs = double_bracket(dist, [beta0, beta1](double e0, double e1) {
    return std::exp(beta0 * e0 - beta1 * e1);
  });
  r.z_ratio = std::exp(g1.log_partition - g0.log_partition);
  r.correction = static_cast<double>(r.dim) *
                 hs_inner(g1.rho, nonunitality_operator(phi)).real();
  r.rhs = r.z_ratio * (1.0 + r.correction);
  r.residual = relative_residual(r.lhs, r.rhs);
  r.mean_work = double_bracket(dist, [](double e0, double e1) { return e1 - e0; });

  const bool log_defined = 1.0 + r.correction > 0.0;
  if (!log_defined) r.flags.emplace_back(kFlagLogUndefined);
  if (beta0 == beta1 && beta0 > 0.0) {
    r.delta_f = *g1.free_energy - *g0.free_energy;
    if (log_defined) {
      r.jensen_rhs = *r.delta_f - std::log1p(r.correction) / beta0;
    }
  }
  return r;
}

double correction_term(const QuantumChannel& phi, const ComplexMatrix& h1,
                       double beta, const Tolerances& tol) {
  if (h1.rows() != phi.dim_out()) {
    throw DimensionError("correction_term: Hamiltonian dimension mismatch");
  }
  const GibbsState g1 = gibbs(h1, beta, tol);
  return static_cast<double>(phi.dim_out()) *
         hs_inner(g1.rho, nonunitality_operator(phi)).real();
}

double high_temperature_correction(const QuantumChannel& phi,
                                   const ComplexMatrix& h1, double beta) {
  if (h1.rows() != phi.dim_out() || h1.cols() != phi.dim_out()) {
    throw DimensionError("high_temperature_correction: Hamiltonian dimension "
                         "mismatch");
  }
  // N Z1^{-1} (-beta Tr(H1 G)) with Z1 -> N at first order in beta.
  return -beta * hs_inner(h1, nonunitality_operator(phi)).real();
}

double low_temperature_correction(const QuantumChannel& phi,
                                  const ComplexMatrix& h1,
                                  const Tolerances& tol) {
  if (h1.rows() != phi.dim_out()) {
    throw DimensionError("low_temperature_correction: Hamiltonian dimension "
                         "mismatch");
  }
  const EigenSystem es = eigh(h1, tol);
  const double gap =
      es.dim() > 1 ? es.eigenvalues[1] - es.eigenvalues[0] : kInfinity;
  if (gap <= kGroundGapRelative * hs_norm(h1)) {
    throw UnsupportedError("low_temperature_correction: ground state is "
                           "degenerate");
  }
  return static_cast<double>(phi.dim_out()) *
         expectation(nonunitality_operator(phi), es.vector(0)).real();
}

HeatTransferReport heat_transfer_check(const QuantumChannel& psi,
                                       const ComplexMatrix& a, double alpha,
                                       const ComplexMatrix& b, double beta,
                                       const Tolerances& tol) {
  const std::size_t na = a.rows();
  const std::size_t nb = b.rows();
  if (!psi.is_square() || psi.dim_in() != na * nb) {
    throw DimensionError("heat_transfer_check: channel acts on dimension " +
                         std::to_string(psi.dim_in()) + ", observables on " +
                         std::to_string(na) + " x " + std::to_string(nb));
  }
  const EigenSystem es_a = eigh(a, tol);
  const EigenSystem es_b = eigh(b, tol);
  const RealVector p_a = boltzmann_weights(es_a.eigenvalues, alpha);
  const RealVector p_b = boltzmann_weights(es_b.eigenvalues, beta);

  // Product eigenbasis of C = alpha A (x) I + I (x) beta B.
  EigenSystem product;
  product.eigenvalues.resize(na * nb);
  product.eigenvectors = ComplexMatrix(na * nb, na * nb);
  RealVector p_ab(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    const ComplexVector u = es_a.vector(i);
    for (std::size_t j = 0; j < nb; ++j) {
      const ComplexVector w = es_b.vector(j);
      const std::size_t k = i * nb + j;
      product.eigenvalues[k] = alpha * es_a.eigenvalues[i] + beta * es_b.eigenvalues[j];
      ComplexVector col(na * nb);
      for (std::size_t x = 0; x < na; ++x) {
        for (std::size_t y = 0; y < nb; ++y) col[x * nb + y] = u[x] * w[y];
      }
      product.eigenvectors.set_column(k, col);
      p_ab[k] = p_a[i] * p_b[j];
    }
  }
  const TpmDistribution dist = tpm_distribution(psi, product, p_ab, product, tol);

  HeatTransferReport r;
  r.lhs = double_bracket(dist, [](double c, double c_final) {
    return std::exp(c - c_final);
  });
  const ComplexMatrix rho_ab =
      kron(state_on_basis(es_a, p_a), state_on_basis(es_b, p_b));
  r.rhs = 1.0 + static_cast<double>(na * nb) *
                    hs_inner(rho_ab, nonunitality_operator(psi)).real();
  r.residual = relative_residual(r.lhs, r.rhs);
  r.delta_s = double_bracket(dist, [](double c, double c_final) {
    return c_final - c;
  });
  if (r.rhs > 0.0) r.entropy_bound = -std::log(r.rhs);
  return r;
}

}  // namespace fluctum
