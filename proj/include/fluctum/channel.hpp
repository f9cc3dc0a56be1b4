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
#include <memory>
#include <vector>

#include "fluctum/matrix.hpp"
#include "fluctum/tolerance.hpp"

namespace fluctum {

/// Rescaled dynamical matrix eta = (Phi (x) id)(|phi+><phi+|) of a channel
/// with equal input and output dimension N. The system factor comes first
/// in the tensor index (row = a * N + r).
struct ChoiMatrix {
  std::size_t dim = 0;
  ComplexMatrix eta;

  /// D = N eta.
  ComplexMatrix dynamical() const {
    return eta * static_cast<double>(dim);
  }
};

/// Linear map Phi(A) = sum_n w_n K_n A K_n^dagger.
///
/// Channels built through the public constructor have all weights equal to
/// one and are validated for trace preservation (sum K^dagger K = I). The
/// `raw` factory skips that check and admits signed weights; it exists to
/// build counterexamples such as the transpose map, and such objects are
/// flagged by `is_raw()`.
class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<ComplexMatrix> kraus,
                          const Tolerances& tol = kDefaultTolerances);

  static QuantumChannel raw(std::vector<ComplexMatrix> kraus,
                            RealVector weights = {});

  std::size_t dim_in() const noexcept { return dim_in_; }
  std::size_t dim_out() const noexcept { return dim_out_; }
  bool is_square() const noexcept { return dim_in_ == dim_out_; }
  bool is_raw() const noexcept { return raw_; }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  const RealVector& weights() const noexcept { return weights_; }

  /// Lazily built and shared between copies. Concurrent first access is
  /// safe; throws UnsupportedError for non-square channels.
  const ChoiMatrix& choi() const;

 private:
  struct Unchecked {};
  QuantumChannel(Unchecked, std::vector<ComplexMatrix> kraus,
                 RealVector weights, bool raw);

  struct ChoiCache;

  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
  std::vector<ComplexMatrix> kraus_;
  RealVector weights_;
  bool raw_ = false;
  std::shared_ptr<ChoiCache> cache_;
};

struct UnitalityCheck {
  bool unital = false;
  /// ||Phi(I) - I||_2.
  double defect = 0.0;
};

struct PositivityCheck {
  bool completely_positive = false;
  /// Smallest eigenvalue of the dynamical matrix D.
  double min_eigenvalue = 0.0;
};

/// sum_n K_n A K_n^dagger.
ComplexMatrix apply(const QuantumChannel& phi, const ComplexMatrix& a);

/// sum_n K_n^dagger B K_n.
ComplexMatrix adjoint_apply(const QuantumChannel& phi, const ComplexMatrix& b);

/// Unital iff ||Phi(I) - I||_2 < tol.validation.
UnitalityCheck is_unital(const QuantumChannel& phi,
                         const Tolerances& tol = kDefaultTolerances);

/// Returns the cached Choi matrix of phi.
const ChoiMatrix& choi(const QuantumChannel& phi);

/// Builds eta directly from the Kraus representation.
ChoiMatrix build_choi(const QuantumChannel& phi);

/// Phi(X) = Tr_R(D (I (x) X^T)).
ComplexMatrix apply_via_choi(const ChoiMatrix& c, const ComplexMatrix& x);

/// CP iff the smallest eigenvalue of D is >= -tol.validation.
PositivityCheck is_completely_positive(
    const ChoiMatrix& c, const Tolerances& tol = kDefaultTolerances);

/// ||Phi|| = ||Phi(I)||_inf. Exact for positive maps only; for a raw map the
/// caller must know it is positive.
double map_norm(const QuantumChannel& phi);

/// Channel with Kraus operators {U K_n}. Throws ValidationError for
/// non-unitary U.
QuantumChannel compose_unitary(const QuantumChannel& phi,
                               const ComplexMatrix& u,
                               const Tolerances& tol = kDefaultTolerances);

/// Random CPTP map: K_n = G_n S^{-1/2} with Ginibre G_n and S = sum G^dag G.
/// Deterministic in `seed`. Throws InvalidParameter for n_kraus == 0 and
/// NumericalError if S is singular on five consecutive seeds.
QuantumChannel random_channel(std::size_t n, std::size_t n_kraus,
                              std::uint64_t seed);

/// Single Kraus operator U.
QuantumChannel unitary_channel(const ComplexMatrix& u,
                               const Tolerances& tol = kDefaultTolerances);

QuantumChannel identity_channel(std::size_t n);

/// rho -> Tr(rho) I / N.
QuantumChannel completely_depolarizing(std::size_t n);

/// A -> A^T as a raw map with signed weights (positive but not CP).
QuantumChannel transpose_map(std::size_t n);

}  // namespace fluctum
