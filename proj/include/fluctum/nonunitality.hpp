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

#include <string>
#include <vector>

#include "fluctum/bloch.hpp"
#include "fluctum/channel.hpp"
#include "fluctum/matrix.hpp"

namespace fluctum {

/// G = Phi(I_A / N_A) - I_B / N_B. Traceless for trace-preserving Phi and
/// Hermitian whenever Phi preserves Hermiticity.
ComplexMatrix nonunitality_operator(const QuantumChannel& phi);

/// Nonunitality of a square trace-preserving channel together with every
/// norm bound on it.
struct NonunitalityReport {
  std::size_t dim = 0;
  ComplexMatrix g;
  BlochVector tau;
  /// ||G||_2.
  double hs_norm = 0.0;
  /// ||Phi|| = ||Phi(I)||_inf.
  double map_norm = 0.0;
  /// ||Phi(I) - I||_2.
  double unitality_defect = 0.0;
  /// sqrt(N (||Phi|| - 1)), bounds unitality_defect.
  double bound_prop2 = 0.0;
  /// sqrt(N (N - 1)), bounds unitality_defect.
  double bound_dim = 0.0;
  /// (||Phi(rho_*)||_inf - 1/N)^{1/2}, bounds hs_norm.
  double bound_rscmn = 0.0;
  /// sqrt(2) bound_rscmn, bounds |tau|.
  double bound_tau = 0.0;
  /// sqrt(1 - 1/N), bounds bound_rscmn.
  double ceiling_rscmn = 0.0;
  /// sqrt(2 - 2/N), bounds bound_tau.
  double ceiling_tau = 0.0;

  /// Names of violated inequalities with slack `slack`; empty when all hold.
  std::vector<std::string> violations(double slack = 1e-10) const;
};

/// Throws UnsupportedError for non-square channels.
NonunitalityReport bounds_report(const QuantumChannel& phi);

struct ChoiMarginalCheck {
  /// ||Tr_R(eta) - rho_*||_2.
  double lhs = 0.0;
  /// N^{-1/2} sqrt(||Phi|| - 1).
  double rhs = 0.0;
};

/// Choi-side form of the map-norm bound. The left side is evaluated from the
/// cached Choi matrix, independently of nonunitality_operator.
ChoiMarginalCheck choi_marginal_bound_check(const QuantumChannel& phi);

/// Re <H, G>_hs. Throws DimensionError on shape mismatch.
double hs_angle_with_hamiltonian(const ComplexMatrix& g,
                                 const ComplexMatrix& h);

}  // namespace fluctum
