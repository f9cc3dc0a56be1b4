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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fluctum/channel.hpp"
#include "fluctum/linalg.hpp"
#include "fluctum/matrix.hpp"
#include "fluctum/tolerance.hpp"

namespace fluctum {

/// Joint statistics of a two-point projective measurement: A measured on
/// the input, the channel applied, B measured on the output. Eigenvalues are
/// kept with multiplicity; index i runs over A's eigenbasis and j over B's.
struct TpmDistribution {
  RealVector a_values;
  RealVector b_values;
  RealVector p_a;
  /// p(b_j | a_i) = <b_j| Phi(|a_i><a_i|) |b_j>, indexed [i][j].
  std::vector<RealVector> cond;
  /// p(a_i) p(b_j | a_i).
  std::vector<RealVector> joint;
};

/// Two-point statistics with the eigenbases of A and B taken from `eigh`.
/// `p_a` is given in A's (ascending) eigenbasis order. Throws
/// ValidationError if p_a is not a probability vector, if A or B is not
/// Hermitian, and DimensionError on shape mismatch.
TpmDistribution tpm_distribution(const QuantumChannel& phi,
                                 const ComplexMatrix& a,
                                 std::span<const double> p_a,
                                 const ComplexMatrix& b,
                                 const Tolerances& tol = kDefaultTolerances);

/// Same with explicit measurement bases; used when a basis other than the
/// `eigh` one is required (product bases, re-mixed degenerate subspaces).
TpmDistribution tpm_distribution(const QuantumChannel& phi,
                                 const EigenSystem& initial,
                                 std::span<const double> p_a,
                                 const EigenSystem& final_basis,
                                 const Tolerances& tol = kDefaultTolerances);

/// <<f(a, b)>> = sum_ij p(a_i, b_j) f(a_i, b_j).
double double_bracket(const TpmDistribution& dist,
                      const std::function<double(double, double)>& f);

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  /// |lhs - rhs| / max(1, |rhs|).
  double residual = 0.0;
};

/// Evaluates <<exp(alpha a - beta b)>> for input state
/// exp(-alpha A) / Tr exp(-alpha A) and compares it with
/// (N_A Tr e^{-beta B}) / (N_B Tr e^{-alpha A}) (1 + N_B Tr(rho_B(beta) G)).
/// alpha and beta may be any real numbers.
IdentityCheck proposition1_check(const QuantumChannel& phi,
                                 const ComplexMatrix& a, double alpha,
                                 const ComplexMatrix& b, double beta,
                                 const Tolerances& tol = kDefaultTolerances);

/// Report flags.
inline constexpr const char* kFlagLogUndefined = "log_undefined";

/// Both sides of the generalized Jarzynski identity for one channel and
/// pair of Hamiltonians. Work is W = e_final - e_initial.
struct JarzynskiReport {
  std::size_t dim = 0;
  double beta0 = 0.0;
  double beta1 = 0.0;
  /// <<exp(beta0 e0 - beta1 e1)>>.
  double lhs = 0.0;
  /// Z1(beta1) / Z0(beta0).
  double z_ratio = 0.0;
  /// N Tr(omega1(beta1) G).
  double correction = 0.0;
  /// z_ratio (1 + correction).
  double rhs = 0.0;
  /// |lhs - rhs| / max(1, |rhs|).
  double residual = 0.0;
  /// <<W>>.
  double mean_work = 0.0;
  /// F1 - F0; only for beta0 == beta1 > 0.
  std::optional<double> delta_f;
  /// delta_f - ln(1 + correction) / beta; absent when delta_f is or when
  /// 1 + correction <= 0 (then kFlagLogUndefined is set).
  std::optional<double> jensen_rhs;
  std::vector<std::string> flags;
};

/// Initial state gibbs(H0, beta0); TPM in the eigenbases of H0 and H1.
JarzynskiReport generalized_jarzynski(const QuantumChannel& phi,
                                      const ComplexMatrix& h0,
                                      const ComplexMatrix& h1, double beta0,
                                      double beta1,
                                      const Tolerances& tol = kDefaultTolerances);

/// Exact correction term N Tr(omega1(beta) G) for a square channel.
double correction_term(const QuantumChannel& phi, const ComplexMatrix& h1,
                       double beta, const Tolerances& tol = kDefaultTolerances);

/// First-order high-temperature correction -beta Tr(H1 G). The neglected
/// remainder is O(beta^2).
double high_temperature_correction(const QuantumChannel& phi,
                                   const ComplexMatrix& h1, double beta);

/// Zero-temperature correction N <e0|G|e0>. Throws UnsupportedError when the
/// ground state of H1 is degenerate (gap <= 1e-8 ||H1||_2).
double low_temperature_correction(const QuantumChannel& phi,
                                  const ComplexMatrix& h1,
                                  const Tolerances& tol = kDefaultTolerances);

struct HeatTransferReport {
  /// <<exp(c - c')>> with c = alpha a + beta b on the initial and c' on the
  /// final measurement.
  double lhs = 0.0;
  /// 1 + N_A N_B Tr(rho_AB G_Psi).
  double rhs = 0.0;
  double residual = 0.0;
  /// <<c' - c>>.
  double delta_s = 0.0;
  /// -ln(rhs); absent when rhs <= 0.
  std::optional<double> entropy_bound;
};

/// Composite-system identity for a channel Psi on H_A (x) H_B with product
/// Gibbs input exp(-alpha A) (x) exp(-beta B) / Z. Initial and final
/// measurements are in the product eigenbasis of A and B. Throws
/// DimensionError unless Psi acts on dim(A) * dim(B).
HeatTransferReport heat_transfer_check(const QuantumChannel& psi,
                                       const ComplexMatrix& a, double alpha,
                                       const ComplexMatrix& b, double beta,
                                       const Tolerances& tol = kDefaultTolerances);

}  // namespace fluctum
