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

#include <array>
#include <optional>
#include <vector>

#include "fluctum/channel.hpp"
#include "fluctum/matrix.hpp"
#include "fluctum/tolerance.hpp"

// Named channels and Hamiltonians together with closed-form correction terms
// used to cross-check the general numeric pipeline. Natural units throughout:
// the Bohr magneton, hbar and e/(mc) are all one.
namespace fluctum::zoo {

using Vec3 = std::array<double, 3>;

/// Qubit amplitude damping with decay probability p in [0, 1]:
///   K0 = [[sqrt(1-p), 0], [0, 1]],  K1 = [[0, 0], [sqrt(p), 0]].
/// Its nonunitality Bloch vector is (0, 0, -p).
QuantumChannel amplitude_damping_2(double p);

/// H = -B . sigma.
ComplexMatrix qubit_hamiltonian(const Vec3& field);

/// Field of magnitude b at angle theta to the nonunitality vector (0,0,-1)
/// of the unrotated damping channel: b (sin theta, 0, -cos theta).
Vec3 qubit_field_at_angle(double b, double theta);

/// p tanh(beta b) cos(theta).
double qubit_correction_analytic(double p, double theta, double beta, double b);

/// tanh(beta |B|) (tau . B) / |B|; zero for B = 0.
double qubit_correction_coordinate_free(const Vec3& tau, const Vec3& field,
                                        double beta);

/// Three-level damping with K0 = diag(sqrt(1-p), sqrt(1-q), 1) and jumps
/// 1 -> 3 (sqrt p) and 2 -> 3 (sqrt q). G = diag(-p, -q, p+q) / 3.
QuantumChannel gad_3(double p, double q);

struct Spin1Operators {
  ComplexMatrix jx;
  ComplexMatrix jy;
  ComplexMatrix jz;
};

/// Spin-1 matrices in the J_z = diag(1, 0, -1) basis.
const Spin1Operators& spin1_operators();

/// H = B . J.
ComplexMatrix spin1_hamiltonian(const Vec3& field);

/// b (sin theta, 0, cos theta): theta is measured from e_z.
Vec3 spin1_field_at_angle(double b, double theta);

/// First-order high-temperature correction of gad_3 in the field B:
/// (2p + q) beta B_z / 3.
double spin1_high_T_correction(double p, double q, double beta, double b_z);

/// Zero-temperature correction of gad_3 at field angle theta from e_z:
/// (p + q/2) cos(theta) + (q/8)(1 + 3 cos(2 theta)).
double spin1_low_T_correction(double p, double q, double theta);

/// One jump amplitude a_{to, from}: population leaks from level `from`
/// (which must be damped) into level `to`.
struct DampingAmplitude {
  std::size_t to = 0;
  std::size_t from = 0;
  Complex amplitude;
};

/// Generalized N-level damping. Level indices are zero-based. `damped` lists
/// the set I; every other level belongs to J and is left untouched by K0.
/// `z` is aligned with `damped`. For every n in I:
///   |z_n|^2 + sum_m |a_{m n}|^2 = 1.
struct DampingSpec {
  std::size_t dim = 0;
  std::vector<std::size_t> damped;
  ComplexVector z;
  std::vector<DampingAmplitude> amplitudes;

  /// Empty I: the resulting map is the identity.
  bool is_identity() const noexcept { return damped.empty(); }
};

/// Throws ValidationError for malformed specs or when the normalisation
/// constraint is violated by more than tol.equality.
void validate(const DampingSpec& spec,
              const Tolerances& tol = kDefaultTolerances);

/// Kraus set {K0} followed by one K_{mn} per amplitude, ordered by (from, to).
/// When `basis` is given (columns = Hamiltonian eigenvectors) the operators
/// are expressed in that basis instead of the computational one.
QuantumChannel generalized_damping(
    const DampingSpec& spec,
    const std::optional<ComplexMatrix>& basis = std::nullopt,
    const Tolerances& tol = kDefaultTolerances);

/// Diagonal of G in the damping basis: x_m = (|z_m|^2 + y_m - 1)/N on I and
/// y_n / N on J, with y_m = sum_n |a_{m n}|^2.
RealVector generalized_damping_diagonal(const DampingSpec& spec);

/// N sum_n x_n e^{-beta e_n} / sum_n e^{-beta e_n}, with energies listed in
/// the same order as the damping basis.
double generalized_damping_correction(const DampingSpec& spec,
                                      std::span<const double> energies,
                                      double beta);

/// Three-level population shift: I = {0}, z = sqrt(1-p), a_{10} = sqrt(q),
/// a_{20} = sqrt(p-q). Requires 0 <= q <= p <= 1.
DampingSpec population_shift_3_spec(double p, double q);
QuantumChannel population_shift_3(double p, double q);

/// Kraus operators |psi><n|: every state is sent to |psi><psi|. Throws
/// ValidationError if |psi| differs from one by more than tol.equality.
QuantumChannel complete_contraction(std::span<const Complex> psi,
                                    const Tolerances& tol = kDefaultTolerances);

}  // namespace fluctum::zoo
