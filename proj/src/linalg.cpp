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

#include "fluctum/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fluctum/errors.hpp"

namespace fluctum {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kJacobiRelativeThreshold = 1e-14;

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Right-multiplies columns p, q of m by the 2x2 block
//   [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, double c,
                    double s, Complex phase_conj) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Complex mkp = m(k, p);
    const Complex mkq = m(k, q);
    m(k, p) = mkp * c - mkq * s * phase_conj;
    m(k, q) = mkp * s + mkq * c * phase_conj;
  }
}

// Left-multiplies rows p, q of m by the adjoint of the block above.
void rotate_rows(ComplexMatrix& m, std::size_t p, std::size_t q, double c,
                 double s, Complex phase) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const Complex mpk = m(p, k);
    const Complex mqk = m(q, k);
    m(p, k) = c * mpk - s * phase * mqk;
    m(q, k) = s * mpk + c * phase * mqk;
  }
}

void fix_phase(ComplexMatrix& v, std::size_t col) {
  std::size_t best = 0;
  double best_abs = -1.0;
  for (std::size_t r = 0; r < v.rows(); ++r) {
    // Relative slack keeps the choice stable when two components are equal
    // up to rounding.
    const double m = std::abs(v(r, col));
    if (m > best_abs * (1.0 + 1e-12) + 1e-300) {
      best_abs = m;
      best = r;
    }
  }
  if (best_abs <= 0.0) return;
  const Complex rot = std::conj(v(best, col)) / best_abs;
  for (std::size_t r = 0; r < v.rows(); ++r) v(r, col) *= rot;
  v(best, col) = best_abs;
}

}  // namespace

ComplexMatrix EigenSystem::reconstruct() const {
  return func_hermitian(*this, [](double x) { return x; });
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: shape mismatch");
  }
  const auto ea = a.entries();
  const auto eb = b.entries();
  Complex acc{};
  for (std::size_t k = 0; k < ea.size(); ++k) acc += std::conj(ea[k]) * eb[k];
  return acc;
}

double hs_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

RealVector singular_values(const ComplexMatrix& a) {
  const EigenSystem es = eigh(a.adjoint() * a);
  RealVector s(es.eigenvalues.size());
  std::transform(es.eigenvalues.rbegin(), es.eigenvalues.rend(), s.begin(),
                 [](double x) { return std::sqrt(std::max(x, 0.0)); });
  return s;
}

double schatten_norm(const ComplexMatrix& a, double p) {
  if (!(p >= 1.0)) {
    throw InvalidParameter("schatten_norm: p must lie in [1, inf], got " +
                           std::to_string(p));
  }
  const RealVector s = singular_values(a);
  if (s.empty()) return 0.0;
  const double smax = s.front();
  if (std::isinf(p) || smax == 0.0) return smax;
  double acc = 0.0;
  for (double x : s) acc += std::pow(x / smax, p);
  return smax * std::pow(acc, 1.0 / p);
}

double hermiticity_defect(const ComplexMatrix& h) {
  if (!h.is_square()) return kInfinity;
  return hs_norm(h - h.adjoint()) / std::max(1.0, hs_norm(h));
}

void require_hermitian(const ComplexMatrix& h, const char* what,
                       const Tolerances& tol) {
  if (!h.is_square()) {
    throw DimensionError(std::string(what) + ": matrix is not square");
  }
  const double defect = hermiticity_defect(h);
  if (defect > tol.validation) {
    throw ValidationError(std::string(what) +
                          ": matrix is not Hermitian (relative defect " +
                          std::to_string(defect) + ")");
  }
}

void require_unitary(const ComplexMatrix& u, const char* what,
                     const Tolerances& tol) {
  if (!u.is_square()) {
    throw DimensionError(std::string(what) + ": matrix is not square");
  }
  const double defect =
      hs_norm(u.adjoint() * u - ComplexMatrix::identity(u.rows()));
  if (defect > tol.validation) {
    throw ValidationError(std::string(what) +
                          ": matrix is not unitary (defect " +
                          std::to_string(defect) + ")");
  }
}

EigenSystem eigh(const ComplexMatrix& h, const Tolerances& tol) {
  require_hermitian(h, "eigh", tol);
  const std::size_t n = h.rows();

  ComplexMatrix a = (h + h.adjoint()) * 0.5;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kJacobiRelativeThreshold * hs_norm(a);

  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal_mass(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;
        const double alpha = a(p, p).real();
        const double delta = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * mag, delta - alpha);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        rotate_columns(a, p, q, c, s, std::conj(phase));
        rotate_rows(a, p, q, c, s, phase);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        rotate_columns(v, p, q, c, s, std::conj(phase));
      }
    }
  }
  if (!converged) {
    throw NumericalError("eigh: Jacobi iteration did not converge in " +
                         std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenSystem es;
  es.eigenvalues.resize(n);
  es.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    es.eigenvalues[k] = a(order[k], order[k]).real();
    es.eigenvectors.set_column(k, v.column(order[k]));
    fix_phase(es.eigenvectors, k);
  }
  return es;
}

ComplexMatrix func_hermitian(const EigenSystem& es,
                             const std::function<double(double)>& f) {
  const std::size_t n = es.dim();
  RealVector fl(n);
  std::transform(es.eigenvalues.begin(), es.eigenvalues.end(), fl.begin(), f);
  const ComplexMatrix& v = es.eigenvectors;
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) {
        acc += v(i, k) * fl[k] * std::conj(v(j, k));
      }
      out(i, j) = acc;
      out(j, i) = std::conj(acc);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

ComplexMatrix func_hermitian(const ComplexMatrix& h,
                             const std::function<double(double)>& f,
                             const Tolerances& tol) {
  return func_hermitian(eigh(h, tol), f);
}

ComplexMatrix positive_sqrt(const ComplexMatrix& a, const Tolerances& tol) {
  const EigenSystem es = eigh(a, tol);
  const double floor = -tol.validation * std::max(1.0, hs_norm(a));
  if (!es.eigenvalues.empty() && es.eigenvalues.front() < floor) {
    throw NotPositiveError("positive_sqrt: eigenvalue " +
                           std::to_string(es.eigenvalues.front()) +
                           " is substantially negative");
  }
  return func_hermitian(es, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Subsystem keep) {
  const std::size_t n = dim_a * dim_b;
  if (dim_a == 0 || dim_b == 0 || m.rows() != n || m.cols() != n) {
    throw DimensionError("partial_trace: matrix is " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) + ", expected " +
                         std::to_string(n) + "x" + std::to_string(n));
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t a = 0; a < dim_a; ++a) {
      for (std::size_t ap = 0; ap < dim_a; ++ap) {
        Complex acc{};
        for (std::size_t b = 0; b < dim_b; ++b) {
          acc += m(a * dim_b + b, ap * dim_b + b);
        }
        out(a, ap) = acc;
      }
    }
    return out;
  }
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t b = 0; b < dim_b; ++b) {
    for (std::size_t bp = 0; bp < dim_b; ++bp) {
      Complex acc{};
      for (std::size_t a = 0; a < dim_a; ++a) {
        acc += m(a * dim_b + b, a * dim_b + bp);
      }
      out(b, bp) = acc;
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

}  // namespace fluctum
