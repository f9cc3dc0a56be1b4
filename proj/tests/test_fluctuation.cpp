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

#include <cmath>
#include <numbers>

#include "fluctum/errors.hpp"
#include "fluctum/fluctuation.hpp"
#include "fluctum/linalg.hpp"
#include "fluctum/nonunitality.hpp"
#include "fluctum/random.hpp"
#include "fluctum/thermal.hpp"
#include "fluctum/zoo.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace fluctum;
using testing::max_entry_diff;

namespace {

ComplexMatrix swap_operator(std::size_t n) {
  ComplexMatrix s(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) s(b * n + a, a * n + b) = 1.0;
  }
  return s;
}

double row_sum(const RealVector& r) {
  double s = 0.0;
  for (double x : r) s += x;
  return s;
}

}  // namespace

TEST_CASE("tpm distribution") {
  Rng rng(61);
  SUBCASE("identity channel is diagonal for nondegenerate A") {
    const ComplexMatrix a = random_hermitian(4, rng);
    const RealVector p = random_distribution(4, rng);
    const TpmDistribution d = tpm_distribution(identity_channel(4), a, p, a);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) CHECK_NEAR(d.cond[i][j], i == j ? 1.0 : 0.0, 1e-12);
    }
    CHECK_NEAR(double_bracket(d, [](double x, double y) { return y - x; }), 0.0, 1e-12);
  }
  SUBCASE("depolarizing channel is uniform") {
    const ComplexMatrix a = random_hermitian(3, rng);
    const ComplexMatrix b = random_hermitian(3, rng);
    const TpmDistribution d =
        tpm_distribution(completely_depolarizing(3), a, random_distribution(3, rng), b);
    for (const auto& row : d.cond) {
      for (double x : row) CHECK_NEAR(x, 1.0 / 3.0, 1e-14);
    }
  }
  SUBCASE("random channels") {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const QuantumChannel phi = random_channel(n, 2, 60 * n + trial);
        const TpmDistribution d = tpm_distribution(
            phi, random_hermitian(n, rng), random_distribution(n, rng), random_hermitian(n, rng));
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          CHECK_NEAR(row_sum(d.cond[i]), 1.0, 1e-11);
          for (std::size_t j = 0; j < n; ++j) {
            CHECK(d.cond[i][j] >= -1e-12);
            CHECK(d.joint[i][j] == d.p_a[i] * d.cond[i][j]);
          }
          total += row_sum(d.joint[i]);
        }
        CHECK_NEAR(total, 1.0, 1e-11);
        CHECK_NEAR(double_bracket(d, [](double, double) { return 1.0; }), 1.0, 1e-11);
      }
    }
  }
  SUBCASE("validation") {
    const ComplexMatrix a = testing::sigma_z();
    CHECK_THROWS_AS(tpm_distribution(identity_channel(2), a, RealVector{0.7, 0.2}, a),
                    ValidationError);
    CHECK_THROWS_AS(tpm_distribution(identity_channel(2), a, RealVector{1.1, -0.1}, a),
                    ValidationError);
    CHECK_THROWS_AS(tpm_distribution(identity_channel(2), a, RealVector{1.0}, a),
                    ValidationError);
    CHECK_THROWS_AS(tpm_distribution(identity_channel(3), a, RealVector{0.5, 0.5}, a),
                    DimensionError);
  }
}

TEST_CASE("two-observable exponential identity") {
  Rng rng(62);
  SUBCASE("unital reduction") {
    const QuantumChannel phi = unitary_channel(random_unitary(3, rng));
    const ComplexMatrix a = random_hermitian(3, rng);
    const ComplexMatrix b = random_hermitian(3, rng);
    const IdentityCheck c = proposition1_check(phi, a, 0.8, b, 1.4);
    const double za = oracle::trace(oracle::expm(a, -0.8)).real();
    const double zb = oracle::trace(oracle::expm(b, -1.4)).real();
    CHECK_NEAR(c.rhs, zb / za, 1e-12);
    CHECK(c.residual <= 1e-10);
  }
  SUBCASE("zero temperatures") {
    const QuantumChannel phi = random_channel(3, 2, 9);
    const IdentityCheck c =
        proposition1_check(phi, random_hermitian(3, rng), 0.0, random_hermitian(3, rng), 0.0);
    CHECK_NEAR(c.lhs, 1.0, 1e-12);
    CHECK_NEAR(c.rhs, 1.0, 1e-12);
  }
  SUBCASE("random tuples match the basis-free oracle") {
    for (int trial = 0; trial < 100; ++trial) {
      const QuantumChannel phi = random_channel(3, 1 + trial % 3, 6200 + trial);
      const ComplexMatrix a = random_hermitian(3, rng);
      const ComplexMatrix b = random_hermitian(3, rng);
      const double alpha = rng.uniform(-2.0, 2.0);
      const double beta = rng.uniform(0.0, 2.0);
      const IdentityCheck c = proposition1_check(phi, a, alpha, b, beta);
      CHECK(c.residual <= 1e-10);
      const double expected = oracle::tpm_exponential_average(phi, a, alpha, b, beta);
      CHECK(std::abs(c.lhs - expected) <= 1e-10 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("generalized Jarzynski") {
  Rng rng(63);
  SUBCASE("unital channel reduces to the plain equality") {
    const QuantumChannel phi = unitary_channel(random_unitary(3, rng));
    const ComplexMatrix h0 = random_hermitian(3, rng);
    const ComplexMatrix h1 = random_hermitian(3, rng);
    const JarzynskiReport r = generalized_jarzynski(phi, h0, h1, 1.2, 1.2);
    REQUIRE(r.delta_f.has_value());
    CHECK_NEAR(r.correction, 0.0, 1e-14);
    CHECK_NEAR(r.lhs, std::exp(-1.2 * *r.delta_f), 1e-12);
    CHECK(r.residual <= 1e-12);
    CHECK(r.flags.empty());
  }
  SUBCASE("amplitude damping closed form") {
    const ComplexMatrix h1 = zoo::qubit_hamiltonian(zoo::qubit_field_at_angle(1.0, 0.0));
    const JarzynskiReport r =
        generalized_jarzynski(zoo::amplitude_damping_2(0.5), h1, h1, 1.0, 1.0);
    CHECK_NEAR(r.correction, 0.5 * std::tanh(1.0), 1e-15);
    CHECK_NEAR(r.correction, 0.380797, 1e-6);
    CHECK(r.residual <= 1e-12);
  }
  SUBCASE("random channels against the basis-free oracle") {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (int trial = 0; trial < 25; ++trial) {
        const QuantumChannel phi = random_channel(n, 1 + trial % 4, 630 * n + trial);
        const ComplexMatrix h0 = random_hermitian(n, rng);
        const ComplexMatrix h1 = random_hermitian(n, rng);
        const double b0 = rng.uniform(0.0, 3.0);
        const double b1 = trial % 3 ? rng.uniform(0.0, 3.0) : b0;
        const JarzynskiReport r = generalized_jarzynski(phi, h0, h1, b0, b1);
        CHECK(r.residual <= 1e-10);
        const double expected = oracle::tpm_exponential_average(phi, h0, b0, h1, b1);
        CHECK(std::abs(r.lhs - expected) <= 1e-10 * std::max(1.0, expected));
        const double corr = n * oracle::hs(oracle::gibbs(h1, b1),
                                           oracle::nonunitality(phi)).real();
        CHECK_NEAR(r.correction, corr, 1e-11);
        CHECK(r.delta_f.has_value() == (b0 == b1 && b0 > 0.0));
        if (r.jensen_rhs) CHECK(r.mean_work >= *r.jensen_rhs - 1e-10);
      }
    }
  }
  SUBCASE("unequal temperatures omit the free energy") {
    const JarzynskiReport r = generalized_jarzynski(
        random_channel(2, 2, 1), testing::sigma_z(), testing::sigma_x(), 0.5, 1.5);
    CHECK_FALSE(r.delta_f.has_value());
    CHECK_FALSE(r.jensen_rhs.has_value());
  }
  SUBCASE("zero temperature on both sides") {
    const JarzynskiReport r = generalized_jarzynski(
        random_channel(3, 2, 2), random_hermitian(3, rng), random_hermitian(3, rng), 0.0, 0.0);
    CHECK_NEAR(r.lhs, 1.0, 1e-12);
    CHECK_FALSE(r.delta_f.has_value());
  }
  SUBCASE("vanishing 1 + correction raises the flag") {
    // Contraction onto the excited level at the coldest admissible
    // temperature: omega1 has no weight there.
    const ComplexVector excited{1.0, 0.0};
    const double d[] = {1.0, 0.0};
    const ComplexMatrix h = ComplexMatrix::diagonal(d);
    const JarzynskiReport r =
        generalized_jarzynski(zoo::complete_contraction(excited), h, h, kMaxBeta, kMaxBeta);
    CHECK_NEAR(r.correction, -1.0, 1e-15);
    REQUIRE(r.flags.size() == 1);
    CHECK(r.flags[0] == kFlagLogUndefined);
    CHECK(r.delta_f.has_value());
    CHECK_FALSE(r.jensen_rhs.has_value());
  }
  CHECK_THROWS_AS(generalized_jarzynski(identity_channel(2), ComplexMatrix::identity(3),
                                        ComplexMatrix::identity(2), 1.0, 1.0),
                  DimensionError);
}

TEST_CASE("basis independence under degeneracy") {
  Rng rng(64);
  for (int trial = 0; trial < 20; ++trial) {
    const QuantumChannel phi = random_channel(4, 3, 640 + trial);
    const ComplexMatrix u0 = random_unitary(4, rng);
    const ComplexMatrix u1 = random_unitary(4, rng);
    const double e0[] = {-1.0, 0.5, 0.5, 0.5};
    const double e1[] = {0.2, 0.2, 1.0, 1.0};
    const ComplexMatrix h0 = u0 * ComplexMatrix::diagonal(e0) * u0.adjoint();
    const ComplexMatrix h1 = u1 * ComplexMatrix::diagonal(e1) * u1.adjoint();
    const double b0 = 0.7;
    const double b1 = 1.9;
    const JarzynskiReport ref = generalized_jarzynski(phi, h0, h1, b0, b1);

    // Re-mix every degenerate eigenspace with a random unitary.
    auto remix = [&rng](EigenSystem es) {
      const std::size_t n = es.dim();
      std::size_t start = 0;
      while (start < n) {
        std::size_t stop = start + 1;
        while (stop < n && std::abs(es.eigenvalues[stop] - es.eigenvalues[start]) < 1e-9) ++stop;
        const std::size_t m = stop - start;
        if (m > 1) {
          const ComplexMatrix w = random_unitary(m, rng);
          const ComplexMatrix old = es.eigenvectors;
          for (std::size_t c = 0; c < m; ++c) {
            for (std::size_t r = 0; r < n; ++r) {
              Complex acc = 0.0;
              for (std::size_t k = 0; k < m; ++k) acc += old(r, start + k) * w(k, c);
              es.eigenvectors(r, start + c) = acc;
            }
          }
        }
        start = stop;
      }
      return es;
    };
    const EigenSystem s0 = remix(eigh(h0));
    const EigenSystem s1 = remix(eigh(h1));
    const RealVector p0 = boltzmann_weights(s0.eigenvalues, b0);
    const TpmDistribution d = tpm_distribution(phi, s0, p0, s1);
    const double lhs = double_bracket(
        d, [&](double x, double y) { return std::exp(b0 * x - b1 * y); });
    CHECK(std::abs(lhs - ref.lhs) <= 1e-10 * std::max(1.0, ref.lhs));
  }
}

TEST_CASE("high temperature correction") {
  const ComplexMatrix h_perp = zoo::qubit_hamiltonian(zoo::qubit_field_at_angle(1.0, std::numbers::pi / 2));
  CHECK_NEAR(high_temperature_correction(zoo::amplitude_damping_2(0.7), h_perp, 0.1), 0.0,
             1e-16);

  for (double p : {0.0, 0.3, 1.0}) {
    for (double q : {0.2, 0.6}) {
      const QuantumChannel phi = zoo::gad_3(p, q);
      for (double bz : {0.5, 1.0, 2.0}) {
        const ComplexMatrix h1 = zoo::spin1_hamiltonian({0.0, 0.0, bz});
        const double beta = 0.01;
        CHECK_NEAR(high_temperature_correction(phi, h1, beta),
                   zoo::spin1_high_T_correction(p, q, beta, bz), 1e-15);
        const double r1 = correction_term(phi, h1, beta) - high_temperature_correction(phi, h1, beta);
        const double r2 = correction_term(phi, h1, 2 * beta) -
                          high_temperature_correction(phi, h1, 2 * beta);
        // Quadratic remainder: q (beta B)^2 / 6 at leading order.
        CHECK_NEAR(r1, q * beta * beta * bz * bz / 6.0, 0.05 * q * beta * beta * bz * bz);
        CHECK(std::abs(r2 / r1 - 4.0) <= 0.3 * 4.0);
      }
    }
  }
  CHECK_THROWS_AS(high_temperature_correction(zoo::gad_3(0.1, 0.1), testing::sigma_z(), 0.1),
                  DimensionError);
}

TEST_CASE("low temperature correction") {
  Rng rng(65);
  CHECK_NEAR(low_temperature_correction(completely_depolarizing(3), random_hermitian(3, rng)),
             0.0, 1e-15);
  for (double p : {0.0, 0.4, 1.0}) {
    for (double q : {0.0, 0.3, 1.0}) {
      const ComplexMatrix h1 = zoo::spin1_hamiltonian(zoo::spin1_field_at_angle(1.0, 0.0));
      CHECK_NEAR(low_temperature_correction(zoo::gad_3(p, q), h1), p + q, 1e-14);
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    const QuantumChannel phi = random_channel(3, 2, 650 + trial);
    const ComplexMatrix h1 = random_hermitian(3, rng);
    const RealVector e = eigh(h1).eigenvalues;
    if (e[1] - e[0] < 0.5) continue;  // keep the tail below 1e-10 at beta = 50
    CHECK_NEAR(correction_term(phi, h1, 50.0), low_temperature_correction(phi, h1), 1e-10);
  }
  const double d[] = {-1.0, -1.0, 2.0};
  CHECK_THROWS_AS(low_temperature_correction(random_channel(3, 2, 1), ComplexMatrix::diagonal(d)),
                  UnsupportedError);
}

TEST_CASE("heat transfer between two subsystems") {
  Rng rng(66);
  SUBCASE("unital channel") {
    const QuantumChannel psi = unitary_channel(random_unitary(4, rng));
    const HeatTransferReport r = heat_transfer_check(psi, random_hermitian(2, rng), 0.7,
                                                     random_hermitian(2, rng), 1.3);
    CHECK_NEAR(r.rhs, 1.0, 1e-11);
    CHECK(r.residual <= 1e-10);
    REQUIRE(r.entropy_bound);
    CHECK_NEAR(*r.entropy_bound, 0.0, 1e-11);
  }
  SUBCASE("swap with identical halves") {
    for (std::size_t n : {2u, 3u}) {
      const ComplexMatrix a = random_hermitian(n, rng);
      const HeatTransferReport r =
          heat_transfer_check(unitary_channel(swap_operator(n)), a, 0.9, a, 0.9);
      CHECK_NEAR(r.delta_s, 0.0, 1e-12);
      CHECK(r.residual <= 1e-10);
    }
  }
  SUBCASE("random channels on two qubits") {
    for (int trial = 0; trial < 50; ++trial) {
      const QuantumChannel psi = random_channel(4, 1 + trial % 4, 660 + trial);
      const ComplexMatrix a = random_hermitian(2, rng);
      const ComplexMatrix b = random_hermitian(2, rng);
      const double alpha = rng.uniform(0.0, 2.0);
      const double beta = rng.uniform(0.0, 2.0);
      const HeatTransferReport r = heat_transfer_check(psi, a, alpha, b, beta);
      CHECK(r.residual <= 1e-10);
      // Basis-free left side: Tr(exp(-C) Psi(I)) / Z.
      const ComplexMatrix c = oracle::axpy(oracle::kron(a * alpha, ComplexMatrix::identity(2)),
                                           1.0, oracle::kron(ComplexMatrix::identity(2), b * beta));
      const double z = oracle::trace(oracle::expm(c, -1.0)).real();
      const double expected =
          oracle::trace(oracle::mul(oracle::expm(c, -1.0),
                                    oracle::apply(psi, ComplexMatrix::identity(4)))).real() / z;
      CHECK_NEAR(r.lhs, expected, 1e-10 * std::max(1.0, expected));
      REQUIRE(r.entropy_bound);
      CHECK(r.delta_s >= *r.entropy_bound - 1e-10);
    }
  }
  CHECK_THROWS_AS(heat_transfer_check(identity_channel(4), testing::sigma_z(), 1.0,
                                      ComplexMatrix::identity(3), 1.0),
                  DimensionError);
}
