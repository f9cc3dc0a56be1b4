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
#include <limits>

#include "fluctum/matrix.hpp"
#include "fluctum/tolerance.hpp"

namespace fluctum {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Eigen-decomposition of a Hermitian operator. Eigenvalues are ascending
/// and column j of `eigenvectors` belongs to eigenvalue j.
struct EigenSystem {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  std::size_t dim() const noexcept { return eigenvalues.size(); }
  ComplexVector vector(std::size_t j) const { return eigenvectors.column(j); }
  /// V diag(lambda) V^dagger.
  ComplexMatrix reconstruct() const;
};

/// Tr(A^dagger B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hilbert-Schmidt (Frobenius) norm computed directly from the entries.
double hs_norm(const ComplexMatrix& a);

/// Singular values in descending order, taken as the eigenvalues of
/// |A| = sqrt(A^dagger A).
RealVector singular_values(const ComplexMatrix& a);

/// Schatten p-norm for p in [1, inf]; pass kInfinity for the spectral norm.
double schatten_norm(const ComplexMatrix& a, double p);

inline double spectral_norm(const ComplexMatrix& a) {
  return schatten_norm(a, kInfinity);
}
inline double trace_norm(const ComplexMatrix& a) { return schatten_norm(a, 1); }

/// ||H - H^dagger||_2 / max(1, ||H||_2).
double hermiticity_defect(const ComplexMatrix& h);

/// Throws ValidationError unless h is square and Hermitian within
/// `tol.validation` (relative).
void require_hermitian(const ComplexMatrix& h, const char* what,
                       const Tolerances& tol = kDefaultTolerances);

/// Throws ValidationError unless U^dagger U = I within `tol.validation`.
void require_unitary(const ComplexMatrix& u, const char* what,
                     const Tolerances& tol = kDefaultTolerances);

/// Hermitian eigensolver (cyclic complex Jacobi rotations).
///
/// Eigenvalues come back ascending. Each eigenvector is normalised so that
/// its largest-modulus component is real and positive; ties go to the
/// lowest index. Degenerate clusters receive whatever orthonormal basis the
/// rotation sequence produces, which is deterministic for a given input.
///
/// Throws ValidationError for non-Hermitian input and NumericalError if the
/// off-diagonal mass has not dropped below 1e-14 ||H||_2 after 100 sweeps.
EigenSystem eigh(const ComplexMatrix& h,
                 const Tolerances& tol = kDefaultTolerances);

/// V diag(f(lambda)) V^dagger.
ComplexMatrix func_hermitian(const ComplexMatrix& h,
                             const std::function<double(double)>& f,
                             const Tolerances& tol = kDefaultTolerances);

/// Same as above on a precomputed decomposition.
ComplexMatrix func_hermitian(const EigenSystem& es,
                             const std::function<double(double)>& f);

/// Unique positive semidefinite square root. Eigenvalues in
/// [-tol.validation * max(1, ||A||_2), 0) are clipped to zero; anything more
/// negative raises NotPositiveError.
ComplexMatrix positive_sqrt(const ComplexMatrix& a,
                            const Tolerances& tol = kDefaultTolerances);

/// Tensor product with the first factor slow: (A (x) B)(a*dB + b, a'*dB + b')
/// = A(a, a') B(b, b').
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

/// Partial trace of an operator on H_A (x) H_B; `keep` names the factor
/// that survives. Index convention matches kron.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Subsystem keep);

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace fluctum
