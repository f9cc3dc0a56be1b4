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

#include "fluctum/channel.hpp"

#include <cmath>
#include <mutex>
#include <optional>
#include <string>

#include "fluctum/errors.hpp"
#include "fluctum/linalg.hpp"
#include "fluctum/random.hpp"

namespace fluctum {

struct QuantumChannel::ChoiCache {
  std::once_flag once;
  std::optional<ChoiMatrix> value;
};

namespace {

void check_kraus_shapes(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) {
    throw ValidationError("channel needs at least one Kraus operator");
  }
  const std::size_t rows = kraus.front().rows();
  const std::size_t cols = kraus.front().cols();
  if (rows == 0 || cols == 0) {
    throw DimensionError("Kraus operators must be non-empty");
  }
  for (const auto& k : kraus) {
    if (k.rows() != rows || k.cols() != cols) {
      throw DimensionError("Kraus operators have inconsistent shapes");
    }
  }
}

void require_input_shape(const ComplexMatrix& a, std::size_t dim,
                         const char* what) {
  if (a.rows() != dim || a.cols() != dim) {
    throw DimensionError(std::string(what) + ": operand is " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", channel expects " +
                         std::to_string(dim) + "x" + std::to_string(dim));
  }
}

}  // namespace

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus,
                               const Tolerances& tol)
    : QuantumChannel(Unchecked{}, std::move(kraus), {}, false) {
  ComplexMatrix sum(dim_in_, dim_in_);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  const double defect = hs_norm(sum - ComplexMatrix::identity(dim_in_));
  if (defect > tol.validation) {
    throw ValidationError(
        "Kraus operators are not trace preserving (||sum K^dag K - I||_2 = " +
        std::to_string(defect) + ")");
  }
}

QuantumChannel::QuantumChannel(Unchecked, std::vector<ComplexMatrix> kraus,
                               RealVector weights, bool raw)
    : kraus_(std::move(kraus)),
      weights_(std::move(weights)),
      raw_(raw),
      cache_(std::make_shared<ChoiCache>()) {
  check_kraus_shapes(kraus_);
  dim_out_ = kraus_.front().rows();
  dim_in_ = kraus_.front().cols();
  if (weights_.empty()) weights_.assign(kraus_.size(), 1.0);
  if (weights_.size() != kraus_.size()) {
    throw DimensionError("one weight per Kraus operator required");
  }
}

QuantumChannel QuantumChannel::raw(std::vector<ComplexMatrix> kraus,
                                   RealVector weights) {
  return QuantumChannel(Unchecked{}, std::move(kraus), std::move(weights),
                        true);
}

const ChoiMatrix& QuantumChannel::choi() const {
  if (!is_square()) {
    throw UnsupportedError("Choi matrix requires equal input and output "
                           "dimensions");
  }
  std::call_once(cache_->once, [this] { cache_->value = build_choi(*this); });
  return *cache_->value;
}

ComplexMatrix apply(const QuantumChannel& phi, const ComplexMatrix& a) {
  require_input_shape(a, phi.dim_in(), "apply");
  ComplexMatrix out(phi.dim_out(), phi.dim_out());
  const auto& ks = phi.kraus();
  for (std::size_t n = 0; n < ks.size(); ++n) {
    out += (ks[n] * a * ks[n].adjoint()) * phi.weights()[n];
  }
  return out;
}

ComplexMatrix adjoint_apply(const QuantumChannel& phi, const ComplexMatrix& b) {
  require_input_shape(b, phi.dim_out(), "adjoint_apply");
  ComplexMatrix out(phi.dim_in(), phi.dim_in());
  const auto& ks = phi.kraus();
  for (std::size_t n = 0; n < ks.size(); ++n) {
    out += (ks[n].adjoint() * b * ks[n]) * phi.weights()[n];
  }
  return out;
}

UnitalityCheck is_unital(const QuantumChannel& phi, const Tolerances& tol) {
  if (!phi.is_square()) return {false, kInfinity};
  const std::size_t n = phi.dim_in();
  const double defect =
      hs_norm(apply(phi, ComplexMatrix::identity(n)) -
              ComplexMatrix::identity(n));
  return {defect < tol.validation, defect};
}

const ChoiMatrix& choi(const QuantumChannel& phi) { return phi.choi(); }

ChoiMatrix build_choi(const QuantumChannel& phi) {
  if (!phi.is_square()) {
    throw UnsupportedError("Choi matrix requires equal input and output "
                           "dimensions");
  }
  const std::size_t n = phi.dim_in();
  ComplexMatrix eta(n * n, n * n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      eta += kron(apply(phi, ComplexMatrix::unit(n, n, m, k)),
                  ComplexMatrix::unit(n, n, m, k));
    }
  }
  eta *= 1.0 / static_cast<double>(n);
  return ChoiMatrix{n, std::move(eta)};
}

ComplexMatrix apply_via_choi(const ChoiMatrix& c, const ComplexMatrix& x) {
  if (x.rows() != c.dim || x.cols() != c.dim) {
    throw DimensionError("apply_via_choi: operand does not match channel "
                         "dimension " + std::to_string(c.dim));
  }
  const ComplexMatrix lifted =
      c.dynamical() * kron(ComplexMatrix::identity(c.dim), x.transpose());
  return partial_trace(lifted, c.dim, c.dim, Subsystem::A);
}

PositivityCheck is_completely_positive(const ChoiMatrix& c,
                                       const Tolerances& tol) {
  const double min_eig = eigh(c.dynamical(), tol).eigenvalues.front();
  return {min_eig >= -tol.validation, min_eig};
}

double map_norm(const QuantumChannel& phi) {
  return spectral_norm(apply(phi, ComplexMatrix::identity(phi.dim_in())));
}

QuantumChannel compose_unitary(const QuantumChannel& phi,
                               const ComplexMatrix& u, const Tolerances& tol) {
  require_unitary(u, "compose_unitary", tol);
  if (u.rows() != phi.dim_out()) {
    throw DimensionError("compose_unitary: rotation dimension mismatch");
  }
  std::vector<ComplexMatrix> rotated;
  rotated.reserve(phi.kraus().size());
  for (const auto& k : phi.kraus()) rotated.push_back(u * k);
  if (phi.is_raw()) return QuantumChannel::raw(std::move(rotated), phi.weights());
  return QuantumChannel(std::move(rotated), tol);
}

QuantumChannel random_channel(std::size_t n, std::size_t n_kraus,
                              std::uint64_t seed) {
  if (n_kraus == 0) {
    throw InvalidParameter("random_channel: n_kraus must be >= 1");
  }
  if (n == 0) throw InvalidParameter("random_channel: dimension must be >= 1");
  constexpr int kAttempts = 5;
  constexpr double kSingularRatio = 1e-12;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt) * 0xD1B54A32D192ED03ULL);
    std::vector<ComplexMatrix> gs;
    gs.reserve(n_kraus);
    ComplexMatrix s(n, n);
    for (std::size_t k = 0; k < n_kraus; ++k) {
      gs.push_back(random_ginibre(n, n, rng));
      s += gs.back().adjoint() * gs.back();
    }
    const EigenSystem es = eigh(s);
    if (es.eigenvalues.front() <= kSingularRatio * es.eigenvalues.back()) {
      continue;
    }
    const ComplexMatrix inv_sqrt =
        func_hermitian(es, [](double x) { return 1.0 / std::sqrt(x); });
    for (auto& g : gs) g = g * inv_sqrt;
    return QuantumChannel(std::move(gs));
  }
  throw NumericalError("random_channel: normalisation matrix singular after " +
                       std::to_string(kAttempts) + " attempts");
}

QuantumChannel unitary_channel(const ComplexMatrix& u, const Tolerances& tol) {
  require_unitary(u, "unitary_channel", tol);
  return QuantumChannel({u}, tol);
}

QuantumChannel identity_channel(std::size_t n) {
  return QuantumChannel({ComplexMatrix::identity(n)});
}

QuantumChannel completely_depolarizing(std::size_t n) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(n * n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      kraus.push_back(ComplexMatrix::unit(n, n, m, k) * amp);
    }
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel transpose_map(std::size_t n) {
  // A^T = sum_m E_mm A E_mm + sum_{m<k} (S A S^dag - T A T^dag) with
  // S = (E_mk + E_km)/sqrt2 and T = (E_mk - E_km)/sqrt2.
  std::vector<ComplexMatrix> kraus;
  RealVector weights;
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t m = 0; m < n; ++m) {
    kraus.push_back(ComplexMatrix::unit(n, n, m, m));
    weights.push_back(1.0);
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = m + 1; k < n; ++k) {
      const ComplexMatrix emk = ComplexMatrix::unit(n, n, m, k);
      const ComplexMatrix ekm = ComplexMatrix::unit(n, n, k, m);
      kraus.push_back((emk + ekm) * r);
      weights.push_back(1.0);
      kraus.push_back((emk - ekm) * r);
      weights.push_back(-1.0);
    }
  }
  return QuantumChannel::raw(std::move(kraus), std::move(weights));
}

}  // namespace fluctum
