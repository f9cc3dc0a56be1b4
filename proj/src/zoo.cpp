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

#include "fluctum/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "fluctum/errors.hpp"
#include "fluctum/linalg.hpp"
#include "fluctum/thermal.hpp"

namespace fluctum::zoo {

namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameter(std::string(name) + " must lie in [0, 1], got " +
                           std::to_string(p));
  }
}

double magnitude(const Vec3& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

}  // namespace

QuantumChannel amplitude_damping_2(double p) {
  require_probability(p, "amplitude_damping_2: p");
  ComplexMatrix k0{{std::sqrt(1.0 - p), 0.0}, {0.0, 1.0}};
  ComplexMatrix k1{{0.0, 0.0}, {std::sqrt(p), 0.0}};
  return QuantumChannel({std::move(k0), std::move(k1)});
}

ComplexMatrix qubit_hamiltonian(const Vec3& field) {
  const Complex i{0.0, 1.0};
  const auto [bx, by, bz] = field;
  // -(bx sx + by sy + bz sz)
  return ComplexMatrix{{-bz, -(bx - i * by)}, {-(bx + i * by), bz}};
}

Vec3 qubit_field_at_angle(double b, double theta) {
  return {b * std::sin(theta), 0.0, -b * std::cos(theta)};
}

double qubit_correction_analytic(double p, double theta, double beta,
                                 double b) {
  return p * std::tanh(beta * b) * std::cos(theta);
}

double qubit_correction_coordinate_free(const Vec3& tau, const Vec3& field,
                                        double beta) {
  const double b = magnitude(field);
  if (b == 0.0) return 0.0;
  const double dot = tau[0] * field[0] + tau[1] * field[1] + tau[2] * field[2];
  return std::tanh(beta * b) * dot / b;
}

QuantumChannel gad_3(double p, double q) {
  require_probability(p, "gad_3: p");
  require_probability(q, "gad_3: q");
  ComplexMatrix k0{{std::sqrt(1.0 - p), 0.0, 0.0},
                   {0.0, std::sqrt(1.0 - q), 0.0},
                   {0.0, 0.0, 1.0}};
  ComplexMatrix k1(3, 3);
  k1(2, 0) = std::sqrt(p);
  ComplexMatrix k2(3, 3);
  k2(2, 1) = std::sqrt(q);
  return QuantumChannel({std::move(k0), std::move(k1), std::move(k2)});
}

const Spin1Operators& spin1_operators() {
  static const Spin1Operators ops = [] {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex i{0.0, 1.0};
    Spin1Operators s;
    s.jx = ComplexMatrix{{0.0, r, 0.0}, {r, 0.0, r}, {0.0, r, 0.0}};
    s.jy = ComplexMatrix{{0.0, -i * r, 0.0}, {i * r, 0.0, -i * r}, {0.0, i * r, 0.0}};
    s.jz = ComplexMatrix{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -1.0}};
    return s;
  }();
  return ops;
}

ComplexMatrix spin1_hamiltonian(const Vec3& field) {
  const Spin1Operators& j = spin1_operators();
  return j.jx * field[0] + j.jy * field[1] + j.jz * field[2];
}

Vec3 spin1_field_at_angle(double b, double theta) {
  return {b * std::sin(theta), 0.0, b * std::cos(theta)};
}

double spin1_high_T_correction(double p, double q, double beta, double b_z) {
  return (2.0 * p + q) * beta * b_z / 3.0;
}

double spin1_low_T_correction(double p, double q, double theta) {
  return (p + q / 2.0) * std::cos(theta) +
         (q / 8.0) * (1.0 + 3.0 * std::cos(2.0 * theta));
}

void validate(const DampingSpec& spec, const Tolerances& tol) {
  if (spec.dim < 2) throw ValidationError("damping spec: dimension must be >= 2");
  if (spec.z.size() != spec.damped.size()) {
    throw ValidationError("damping spec: one z per damped level required");
  }
  std::set<std::size_t> damped;
  for (std::size_t n : spec.damped) {
    if (n >= spec.dim) throw ValidationError("damping spec: level out of range");
    if (!damped.insert(n).second) {
      throw ValidationError("damping spec: duplicate damped level");
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<double> leak(spec.dim, 0.0);
  for (const auto& a : spec.amplitudes) {
    if (a.to >= spec.dim || a.from >= spec.dim) {
      throw ValidationError("damping spec: amplitude index out of range");
    }
    if (a.to == a.from) {
      throw ValidationError("damping spec: amplitude must connect distinct levels");
    }
    if (!damped.count(a.from)) {
      throw ValidationError("damping spec: amplitude leaves level " +
                            std::to_string(a.from) + " which is not damped");
    }
    if (!seen.insert({a.to, a.from}).second) {
      throw ValidationError("damping spec: duplicate amplitude");
    }
    leak[a.from] += std::norm(a.amplitude);
  }
  for (std::size_t k = 0; k < spec.damped.size(); ++k) {
    const std::size_t n = spec.damped[k];
    if (std::abs(spec.z[k]) > 1.0 + tol.equality) {
      throw ValidationError("damping spec: |z| exceeds one");
    }
    const double total = std::norm(spec.z[k]) + leak[n];
    if (std::abs(total - 1.0) > tol.equality) {
      throw ValidationError("damping spec: level " + std::to_string(n) +
                            " violates |z|^2 + sum |a|^2 = 1 (got " +
                            std::to_string(total) + ")");
    }
  }
}

QuantumChannel generalized_damping(const DampingSpec& spec,
                                   const std::optional<ComplexMatrix>& basis,
                                   const Tolerances& tol) {
  validate(spec, tol);
  const std::size_t n = spec.dim;
  std::vector<ComplexMatrix> kraus;
  ComplexMatrix k0 = ComplexMatrix::identity(n);
  for (std::size_t k = 0; k < spec.damped.size(); ++k) {
    k0(spec.damped[k], spec.damped[k]) = spec.z[k];
  }
  kraus.push_back(std::move(k0));

  std::vector<DampingAmplitude> ordered = spec.amplitudes;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const DampingAmplitude& x, const DampingAmplitude& y) {
                     return std::tie(x.from, x.to) < std::tie(y.from, y.to);
                   });
  for (const auto& a : ordered) {
    ComplexMatrix k(n, n);
    k(a.to, a.from) = a.amplitude;
    kraus.push_back(std::move(k));
  }

  if (basis) {
    require_unitary(*basis, "generalized_damping basis", tol);
    if (basis->rows() != n) {
      throw DimensionError("generalized_damping: basis dimension mismatch");
    }
    const ComplexMatrix vdag = basis->adjoint();
    for (auto& k : kraus) k = *basis * k * vdag;
  }
  return QuantumChannel(std::move(kraus), tol);
}

RealVector generalized_damping_diagonal(const DampingSpec& spec) {
  validate(spec);
  const auto nd = static_cast<double>(spec.dim);
  RealVector y(spec.dim, 0.0);
  for (const auto& a : spec.amplitudes) y[a.to] += std::norm(a.amplitude);
  RealVector x(spec.dim);
  for (std::size_t m = 0; m < spec.dim; ++m) x[m] = y[m] / nd;
  for (std::size_t k = 0; k < spec.damped.size(); ++k) {
    const std::size_t m = spec.damped[k];
    x[m] = (std::norm(spec.z[k]) + y[m] - 1.0) / nd;
  }
  return x;
}

double generalized_damping_correction(const DampingSpec& spec,
                                      std::span<const double> energies,
                                      double beta) {
  if (energies.size() != spec.dim) {
    throw DimensionError("generalized_damping_correction: energy count");
  }
  const RealVector x = generalized_damping_diagonal(spec);
  const RealVector w = boltzmann_weights(energies, beta);
  double acc = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) acc += w[k] * x[k];
  return static_cast<double>(spec.dim) * acc;
}

DampingSpec population_shift_3_spec(double p, double q) {
  require_probability(p, "population_shift_3: p");
  require_probability(q, "population_shift_3: q");
  if (q > p) {
    throw InvalidParameter("population_shift_3: requires q <= p");
  }
  DampingSpec spec;
  spec.dim = 3;
  spec.damped = {0};
  spec.z = {std::sqrt(1.0 - p)};
  spec.amplitudes = {{1, 0, std::sqrt(q)}, {2, 0, std::sqrt(p - q)}};
  return spec;
}

QuantumChannel population_shift_3(double p, double q) {
  return generalized_damping(population_shift_3_spec(p, q));
}

QuantumChannel complete_contraction(std::span<const Complex> psi,
                                    const Tolerances& tol) {
  const std::size_t n = psi.size();
  if (n == 0) throw ValidationError("complete_contraction: empty vector");
  const double norm = std::sqrt(std::real(inner(psi, psi)));
  if (std::abs(norm - 1.0) > tol.equality) {
    throw ValidationError("complete_contraction: target is not a unit vector "
                          "(norm " + std::to_string(norm) + ")");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) m(r, k) = psi[r];
    kraus.push_back(std::move(m));
  }
  return QuantumChannel(std::move(kraus), tol);
}

}  // namespace fluctum::zoo
