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

#include "fluctum/channel.hpp"
#include "fluctum/errors.hpp"
#include "fluctum/linalg.hpp"
#include "fluctum/random.hpp"
#include "fluctum/zoo.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace fluctum;
using testing::max_entry_diff;

namespace {

QuantumChannel random_unitary_mixture(std::size_t n, std::size_t k, Rng& rng) {
  const RealVector w = random_distribution(k, rng);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t j = 0; j < k; ++j) {
    kraus.push_back(random_unitary(n, rng) * std::sqrt(w[j]));
  }
  return QuantumChannel(std::move(kraus));
}

ComplexMatrix maximally_entangled_projector(std::size_t n) {
  ComplexVector phi(n * n);
  for (std::size_t k = 0; k < n; ++k) phi[k * n + k] = 1.0 / std::sqrt(double(n));
  return ComplexMatrix::projector(phi);
}

}  // namespace

TEST_CASE("construction validates trace preservation") {
  CHECK_THROWS_AS(QuantumChannel({ComplexMatrix::identity(2) * 2.0}), ValidationError);
  CHECK_THROWS_AS(QuantumChannel(std::vector<ComplexMatrix>{}), ValidationError);
  std::vector<ComplexMatrix> mixed{ComplexMatrix(2, 2), ComplexMatrix(3, 2)};
  CHECK_THROWS_AS(QuantumChannel{mixed}, DimensionError);
  // Rectangular Kraus: an isometry C^2 -> C^3.
  ComplexMatrix v(3, 2);
  v(0, 0) = 1.0;
  v(2, 1) = 1.0;
  const QuantumChannel iso({v});
  CHECK(iso.dim_in() == 2);
  CHECK(iso.dim_out() == 3);
  CHECK_FALSE(iso.is_square());
  CHECK_THROWS_AS(iso.choi(), UnsupportedError);
}

TEST_CASE("apply") {
  Rng rng(31);
  const ComplexMatrix a = random_ginibre(3, 3, rng);
  CHECK(max_entry_diff(apply(identity_channel(3), a), a) == 0.0);
  CHECK_THROWS_AS(apply(identity_channel(3), ComplexMatrix(2, 2)), DimensionError);

  // Full decay sends the mixed state to the surviving basis state.
  const ComplexMatrix out =
      apply(zoo::amplitude_damping_2(1.0), ComplexMatrix::identity(2) * 0.5);
  CHECK(max_entry_diff(out, ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}) <= 1e-15);

  for (std::size_t n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const QuantumChannel phi = random_channel(n, 1 + trial % 4, 1000 * n + trial);
      const ComplexMatrix rho = random_density_matrix(n, rng);
      const ComplexMatrix r = apply(phi, rho);
      CHECK(max_entry_diff(r, oracle::apply(phi, rho)) <= 1e-13);
      CHECK_NEAR(r.trace(), Complex(1.0), 1e-12);
      CHECK(eigh(r).eigenvalues.front() >= -1e-10);
      const ComplexMatrix x = random_ginibre(n, n, rng);
      CHECK_NEAR(apply(phi, x).trace(), x.trace(), 1e-11);
    }
  }
}

TEST_CASE("is_unital") {
  Rng rng(32);
  const auto u = is_unital(unitary_channel(random_unitary(3, rng)));
  CHECK(u.unital);
  CHECK(u.defect < 1e-12);

  const auto ad = is_unital(zoo::amplitude_damping_2(0.5));
  CHECK_FALSE(ad.unital);
  CHECK_NEAR(ad.defect, 0.5 * std::sqrt(2.0), 1e-15);

  for (int trial = 0; trial < 10; ++trial) {
    const auto mix = is_unital(random_unitary_mixture(4, 3, rng));
    CHECK(mix.unital);
    CHECK(mix.defect < 1e-12);
  }
}

TEST_CASE("adjoint_apply") {
  Rng rng(33);
  const ComplexMatrix b = random_ginibre(3, 3, rng);
  CHECK(max_entry_diff(adjoint_apply(identity_channel(3), b), b) == 0.0);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const QuantumChannel phi = random_channel(n, 3, 77 + trial);
      CHECK(max_entry_diff(adjoint_apply(phi, ComplexMatrix::identity(n)),
                           ComplexMatrix::identity(n)) <= 1e-10);
      const ComplexMatrix a = random_ginibre(n, n, rng);
      const ComplexMatrix y = random_ginibre(n, n, rng);
      CHECK_NEAR(oracle::hs(apply(phi, a), y), oracle::hs(a, adjoint_apply(phi, y)),
                 1e-11);
    }
  }
  // A non-TP raw map has adjoint(I) != I.
  const QuantumChannel scaled = QuantumChannel::raw({ComplexMatrix::identity(2) * 2.0});
  CHECK(max_entry_diff(adjoint_apply(scaled, ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(2)) > 1.0);
}

TEST_CASE("choi matrix") {
  SUBCASE("identity channel gives the maximally entangled projector") {
    for (std::size_t n : {2u, 3u}) {
      CHECK(max_entry_diff(choi(identity_channel(n)).eta,
                           maximally_entangled_projector(n)) <= 1e-15);
    }
  }
  SUBCASE("completely depolarizing channel gives I/N^2") {
    for (std::size_t n : {2u, 3u}) {
      CHECK(max_entry_diff(choi(completely_depolarizing(n)).eta,
                           ComplexMatrix::identity(n * n) * (1.0 / (n * n))) <= 1e-15);
    }
  }
  SUBCASE("against the index-loop oracle") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const QuantumChannel phi = random_channel(n, 2, 5 * n);
      const ChoiMatrix& c = choi(phi);
      CHECK(max_entry_diff(c.dynamical(), oracle::dynamical(phi)) <= 1e-13);
      CHECK_NEAR(c.eta.trace(), Complex(1.0), 1e-10);
      CHECK(max_entry_diff(partial_trace(c.dynamical(), n, n, Subsystem::B),
                           ComplexMatrix::identity(n)) <= 1e-10);
      CHECK(&choi(phi) == &c);  // cached
      const QuantumChannel copy = phi;
      CHECK(&choi(copy) == &c);  // shared between copies
      CHECK(max_entry_diff(build_choi(phi).eta, c.eta) == 0.0);
    }
  }
  SUBCASE("apply_via_choi") {
    Rng rng(34);
    for (std::size_t n = 2; n <= 4; ++n) {
      const QuantumChannel phi = random_channel(n, 3, 900 + n);
      const ChoiMatrix& c = choi(phi);
      for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix x = random_ginibre(n, n, rng);
        CHECK(max_entry_diff(apply_via_choi(c, x), oracle::apply(phi, x)) <= 1e-11);
      }
      const ComplexMatrix mixed = ComplexMatrix::identity(n) * (1.0 / n);
      CHECK(max_entry_diff(apply_via_choi(c, mixed),
                           partial_trace(c.eta, n, n, Subsystem::A)) <= 1e-13);
      CHECK(max_entry_diff(apply_via_choi(c, ComplexMatrix::identity(n)),
                           apply(phi, ComplexMatrix::identity(n))) <= 1e-12);
      CHECK_THROWS_AS(apply_via_choi(c, ComplexMatrix(n + 1, n + 1)), DimensionError);
    }
  }
}

TEST_CASE("complete positivity") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto cp = is_completely_positive(choi(random_channel(n, 2, 40 + n)));
    CHECK(cp.completely_positive);
    CHECK(cp.min_eigenvalue >= -1e-10);
  }
  const auto id = is_completely_positive(choi(identity_channel(2)));
  CHECK(id.completely_positive);
  CHECK_NEAR(id.min_eigenvalue, 0.0, 1e-12);

  for (std::size_t n : {2u, 3u}) {
    const QuantumChannel t = transpose_map(n);
    CHECK(t.is_raw());
    Rng rng(35);
    const ComplexMatrix a = random_ginibre(n, n, rng);
    CHECK(max_entry_diff(apply(t, a), a.transpose()) <= 1e-14);
    const auto cp = is_completely_positive(choi(t));
    CHECK_FALSE(cp.completely_positive);
    CHECK_NEAR(cp.min_eigenvalue, -1.0, 1e-12);
    // Positive and unital although not CP.
    CHECK_NEAR(map_norm(t), 1.0, 1e-12);
  }
}

TEST_CASE("map_norm") {
  Rng rng(36);
  CHECK_NEAR(map_norm(random_unitary_mixture(3, 4, rng)), 1.0, 1e-10);
  CHECK_NEAR(map_norm(completely_depolarizing(4)), 1.0, 1e-12);
  for (double p : {0.0, 0.3, 0.8, 1.0}) {
    CHECK_NEAR(map_norm(zoo::amplitude_damping_2(p)), 1.0 + p, 1e-14);
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    const ComplexVector psi = random_unit_vector(n, rng);
    CHECK_NEAR(map_norm(zoo::complete_contraction(psi)), double(n), 1e-12);
  }
}

TEST_CASE("compose_unitary") {
  const QuantumChannel ad = zoo::amplitude_damping_2(0.4);
  const QuantumChannel same = compose_unitary(ad, ComplexMatrix::identity(2));
  for (std::size_t k = 0; k < ad.kraus().size(); ++k) {
    CHECK(max_entry_diff(same.kraus()[k], ad.kraus()[k]) == 0.0);
  }
  // sigma_x swaps the diagonal of Phi(rho_*), flipping tau_z.
  const QuantumChannel flipped = compose_unitary(ad, testing::sigma_x());
  const ComplexMatrix g = apply(flipped, ComplexMatrix::identity(2) * 0.5);
  CHECK_NEAR(g(0, 0).real() - g(1, 1).real(), 0.4, 1e-15);

  Rng rng(37);
  const QuantumChannel phi = compose_unitary(random_channel(3, 2, 1), random_unitary(3, rng));
  CHECK(max_entry_diff(adjoint_apply(phi, ComplexMatrix::identity(3)),
                       ComplexMatrix::identity(3)) <= 1e-10);
  CHECK_THROWS_AS(compose_unitary(ad, ComplexMatrix::identity(2) * 1.1), ValidationError);
}

TEST_CASE("random_channel") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const QuantumChannel phi = random_channel(n, k, 17 * n + k);
      CHECK(phi.kraus().size() == k);
      ComplexMatrix s(n, n);
      for (const auto& m : phi.kraus()) s += oracle::mul(oracle::dagger(m), m);
      CHECK(max_entry_diff(s, ComplexMatrix::identity(n)) <= 1e-10);
    }
  }
  const QuantumChannel single = random_channel(3, 1, 5);
  CHECK(is_unital(single).unital);
  CHECK_NOTHROW(require_unitary(single.kraus()[0], "k"));

  const QuantumChannel a = random_channel(4, 3, 123);
  const QuantumChannel b = random_channel(4, 3, 123);
  const QuantumChannel c = random_channel(4, 3, 124);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(max_entry_diff(a.kraus()[k], b.kraus()[k]) == 0.0);
  }
  CHECK(max_entry_diff(a.kraus()[0], c.kraus()[0]) > 0.0);
  CHECK_THROWS_AS(random_channel(3, 0, 1), InvalidParameter);
}
