// Copyright 2026 The cjkit Authors
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

#include <doctest.h>

#include <cmath>

#include "cjkit/choi.hpp"
#include "cjkit/errors.hpp"
#include "cjkit/transpose.hpp"
#include "support.hpp"

using namespace cjkit;
using namespace cjkit::testing;

namespace {

// Entrywise solve of the defining relation in the rho1 eigenbasis:
// X̂[i,j] = (rho1-basis of Φ*(ρ0^{1/2} A ρ0^{1/2}))[i,j] / sqrt(r_i r_j).
ComplexMatrix transpose_oracle(const Channel& c, const ReferenceState& rho0,
                               const ReferenceState& rho1, const ComplexMatrix& a) {
  const ComplexMatrix rho0_sqrt = rho0.sqrt();
  const ComplexMatrix rhs = c.apply_schrodinger(rho0_sqrt * a * rho0_sqrt);
  ComplexMatrix rhs_hat = rho1.to_eigenbasis(rhs);
  for (std::size_t i = 0; i < rhs_hat.rows(); ++i)
    for (std::size_t j = 0; j < rhs_hat.cols(); ++j)
      rhs_hat(i, j) /= std::sqrt(rho1.weights()[i] * rho1.weights()[j]);
  return rho1.from_eigenbasis(rhs_hat);
}

// Factor swap on C^a ⊗ C^b: (i,k) ↦ (k,i).
ComplexMatrix swap_factors(const ComplexMatrix& s, std::size_t a, std::size_t b) {
  ComplexMatrix out(s.rows(), s.cols());
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t k = 0; k < b; ++k)
      for (std::size_t j = 0; j < a; ++j)
        for (std::size_t l = 0; l < b; ++l)
          out(k * a + i, l * a + j) = s(i * b + k, j * b + l);
  return out;
}

}  // namespace

TEST_CASE("full-support channels are returned unchanged") {
  Rng rng(61);
  Channel c = random_unital_channel(3, 3, 2, rng);
  ReferenceState r = random_reference(3, rng);
  SupportRestriction restricted = restrict_to_support(c, r);
  CHECK(restricted.channel.d_out() == 3);
  CHECK(distance(restricted.isometry, ComplexMatrix::identity(3)) == 0.0);
  CHECK(action_distance(restricted.channel, c) == 0.0);
}

TEST_CASE("rank-one range compresses to one output dimension") {
  ComplexMatrix k0(2, 2);
  k0(0, 0) = 1.0;
  ComplexMatrix k1(2, 2);
  k1(0, 1) = 1.0;
  Channel c(2, 2, {k0, k1});
  REQUIRE(c.is_unital().unital);
  ReferenceState r = uniform_reference(2);
  SupportRestriction restricted = restrict_to_support(c, r);
  CHECK(restricted.channel.d_out() == 1);
  CHECK(restricted.isometry.cols() == 1);
}

TEST_CASE("a padded dead output dimension is removed exactly") {
  Rng rng(62);
  Channel base = random_unital_channel(2, 2, 2, rng);
  std::vector<ComplexMatrix> padded;
  for (const ComplexMatrix& k : base.kraus()) {
    ComplexMatrix p(3, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) p(i, j) = k(i, j);
    padded.push_back(std::move(p));
  }
  Channel c(2, 3, std::move(padded));
  ReferenceState r = random_reference(2, rng);
  SupportRestriction restricted = restrict_to_support(c, r);
  CHECK(restricted.channel.d_out() == 2);
  // the compressed channel reproduces the unpadded action up to the support
  // basis rotation
  const DensityMatrix rho = random_faithful_density(2, rng);
  const ComplexMatrix compressed = restricted.channel.apply_schrodinger(rho.matrix());
  const ComplexMatrix lifted =
      restricted.isometry * compressed * restricted.isometry.adjoint();
  ComplexMatrix embedded(3, 3);
  const ComplexMatrix direct = base.apply_schrodinger(rho.matrix());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) embedded(i, j) = direct(i, j);
  CHECK(distance(lifted, embedded) <= 1e-12);
}

TEST_CASE("transpose of the identity is the identity") {
  Rng rng(63);
  ReferenceState r = random_reference(3, rng);
  TransposePair pair = transpose_channel(Channel::identity(3), r);
  CHECK(action_distance(pair.transposed, Channel::identity(3)) <= 1e-10);
  CHECK(pair.defining_residual() <= 1e-10);
}

TEST_CASE("transpose of a commuting unitary channel conjugates the other way") {
  // U diagonal commutes with a diagonal reference; Φ(B) = U†BU has
  // Φᵀ(A) = U A U†.
  ReferenceState r = make_reference(
      DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{0.3, 0.7})));
  std::vector<Complex> phases{std::polar(1.0, 0.6), std::polar(1.0, -1.1)};
  const ComplexMatrix u = ComplexMatrix::diagonal(phases);
  TransposePair pair = transpose_channel(Channel::from_unitary(u), r);
  Channel expected = Channel::from_unitary(u.adjoint());
  CHECK(action_distance(pair.transposed, expected) <= 1e-10);
}

TEST_CASE("amplitude damping transpose matches the entrywise solve oracle") {
  Channel damping = Channel::amplitude_damping(0.36);
  ReferenceState r = uniform_reference(2);
  TransposePair pair = transpose_channel(damping, r);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const ComplexMatrix unit = matrix_unit(2, i, j);
      CHECK(distance(pair.transposed.apply_heisenberg(unit),
                     transpose_oracle(damping, pair.rho0, pair.rho1, unit)) <= 1e-10);
    }
}

TEST_CASE("defining relation holds on the probe basis for random channels") {
  Rng rng(64);
  for (std::size_t d = 2; d <= 5; ++d) {
    Channel c = random_unital_channel(d, d, 2, rng);
    ReferenceState r = random_reference(d, rng);
    TransposePair pair = transpose_channel(c, r);
    CHECK(pair.defining_residual() <= 1e-9);
    CHECK(pair.transposed.is_unital().residual <= 1e-8);
    // complete positivity: PSD Choi of the transposed channel
    ChoiState st = choi_from_channel(pair.transposed, pair.rho1);
    HermitianEig eig = herm_eig(st.matrix());
    CHECK(eig.eigenvalues.front() >= -1e-9);
  }
}

TEST_CASE("double transpose returns the original channel in action") {
  Rng rng(65);
  Channel c = random_unital_channel(3, 3, 2, rng);
  ReferenceState r = random_reference(3, rng);
  TransposePair pair = transpose_channel(c, r);
  // rho0 is the image of rho1 under the transposed channel
  CHECK(distance(pair.transposed.apply_schrodinger(pair.rho1.density()), r.density()) <=
        1e-10);
  TransposePair twice = transpose_channel(pair.transposed, pair.rho1);
  CHECK(action_distance(twice.transposed, c) <= 1e-9);
}

TEST_CASE("contravariance with chained reference states") {
  Rng rng(66);
  for (int trial = 0; trial < 5; ++trial) {
    // Heisenberg maps Φ: L(d1)→L(d0) (object f) and Ψ: L(d2)→L(d1) (object g).
    Channel f = random_unital_channel(3, 3, 2, rng);
    Channel g = random_unital_channel(3, 3, 2, rng);
    ReferenceState rho0 = random_reference(3, rng);

    // (Φ∘Ψ)ᵀ with respect to rho0
    Channel heisenberg_composite = compose(g, f);
    TransposePair whole = transpose_channel(heisenberg_composite, rho0);

    // Ψᵀ∘Φᵀ with rho1 = Φ*(rho0) chaining into Ψ
    TransposePair f_t = transpose_channel(f, rho0);
    TransposePair g_t = transpose_channel(g, f_t.rho1);
    Channel chained = compose(f_t.transposed, g_t.transposed);

    CHECK(action_distance(whole.transposed, chained) <= 1e-9);
  }
}

TEST_CASE("commutant dual of the identity is the identity") {
  Rng rng(67);
  ReferenceState r = random_reference(2, rng);
  Channel dual = commutant_dual(Channel::identity(2), r);
  CHECK(action_distance(dual, Channel::identity(2)) <= 1e-10);
}

TEST_CASE("commutant dual equals the transpose for real diagonal channels") {
  // dephasing with real diagonal Kraus operators: conjugations cancel
  std::vector<ComplexMatrix> kraus{
      std::sqrt(0.7) * ComplexMatrix::identity(2),
      std::sqrt(0.3) * ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0})};
  Channel dephasing(2, 2, std::move(kraus));
  ReferenceState r = make_reference(
      DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{0.25, 0.75})));
  Channel dual = commutant_dual(dephasing, r);
  TransposePair pair = transpose_channel(dephasing, r);
  CHECK(action_distance(dual, pair.transposed) <= 1e-10);
}

TEST_CASE("commutant dual shares the Choi state up to the factor swap") {
  Rng rng(68);
  for (int trial = 0; trial < 5; ++trial) {
    Channel c = random_unital_channel(3, 3, 2, rng);
    ReferenceState r = random_reference(3, rng);
    TransposePair pair = transpose_channel(c, r);
    Channel dual = commutant_dual(c, r);

    const ComplexMatrix s_phi = choi_from_channel(c, r).matrix();
    const ComplexMatrix s_dual = choi_from_channel(dual, pair.rho1).matrix();
    CHECK(distance(swap_factors(s_dual, 3, 3), s_phi) <= 1e-10);
  }
}

TEST_CASE("transpose Choi is the conjugated factor-swapped Choi") {
  Rng rng(69);
  Channel c = random_unital_channel(3, 3, 3, rng);
  ReferenceState r = random_reference(3, rng);
  TransposePair pair = transpose_channel(c, r);

  const ComplexMatrix s_phi = choi_from_channel(c, r).matrix();
  const ComplexMatrix s_t = choi_from_channel(pair.transposed, pair.rho1).matrix();

  // conjugation in the product eigenbasis of (rho0, rho1)
  const ComplexMatrix basis = kron(pair.rho0.basis(), pair.rho1.basis());
  const ComplexMatrix conjugated =
      basis * (basis.adjoint() * s_phi * basis).conjugate() * basis.adjoint();
  CHECK(distance(swap_factors(s_t, 3, 3), conjugated) <= 1e-10);
}

TEST_CASE("transpose rejects non-unital input") {
  ReferenceState r = uniform_reference(2);
  Channel half(2, 2, {Complex(0.5) * ComplexMatrix::identity(2)});
  CHECK_THROWS_AS(transpose_channel(half, r), Error);
}
