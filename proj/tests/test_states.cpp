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

#include "cjkit/errors.hpp"
#include "cjkit/states.hpp"
#include "support.hpp"

using namespace cjkit;
using namespace cjkit::testing;

TEST_CASE("make_reference pins the canonical basis for the maximally mixed state") {
  ReferenceState r = uniform_reference(2);
  CHECK(r.weights()[0] == doctest::Approx(0.5));
  CHECK(r.weights()[1] == doctest::Approx(0.5));
  CHECK(distance(r.basis(), ComplexMatrix::identity(2)) <= 1e-12);
}

TEST_CASE("make_reference sorts weights ascending with matching columns") {
  const std::vector<double> diag{0.7, 0.3};
  ReferenceState r = make_reference(DensityMatrix(ComplexMatrix::diagonal(diag)));
  CHECK(r.weights()[0] == doctest::Approx(0.3));
  CHECK(r.weights()[1] == doctest::Approx(0.7));
  // column 0 is the 0.3-eigenvector e1, column 1 the 0.7-eigenvector e0
  CHECK(std::abs(r.basis()(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(r.basis()(0, 1)) == doctest::Approx(1.0));
  CHECK(approx_equal(r.density(), ComplexMatrix::diagonal(diag), 1e-12));
}

TEST_CASE("make_reference rejects rank-deficient states") {
  const std::vector<double> diag{1.0, 0.0};
  CHECK_THROWS_AS(make_reference(DensityMatrix(ComplexMatrix::diagonal(diag))), Error);
}

TEST_CASE("gns vector of the maximally mixed qubit") {
  ReferenceState r = uniform_reference(2);
  ComplexMatrix omega = r.gns_vector();
  const double amp = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(omega(0, 0) - amp) <= 1e-14);
  CHECK(std::abs(omega(3, 0) - amp) <= 1e-14);
  CHECK(std::abs(omega(1, 0)) <= 1e-14);
  CHECK(std::abs(omega(2, 0)) <= 1e-14);
}

TEST_CASE("gns vector amplitudes follow the positive square roots") {
  const std::vector<double> diag{0.64, 0.36};
  ReferenceState r = make_reference(DensityMatrix(ComplexMatrix::diagonal(diag)));
  ComplexMatrix omega = r.gns_vector();
  CHECK(std::abs(omega(0, 0) - 0.8) <= 1e-12);  // 0.8|00⟩
  CHECK(std::abs(omega(3, 0) - 0.6) <= 1e-12);  // 0.6|11⟩
}

TEST_CASE("gns vector margin reproduces the state") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    ReferenceState r = random_reference(4, rng);
    ComplexMatrix omega = r.gns_vector();
    CHECK(std::abs(omega.frobenius_norm() - 1.0) <= 1e-12);
    const ComplexMatrix projector = omega * omega.adjoint();
    CHECK(distance(partial_trace(projector, TraceSide::second, 4, 4), r.density()) <=
          1e-12);
  }
}

TEST_CASE("transpose in a diagonal basis is the plain transpose") {
  const std::vector<double> diag{0.3, 0.7};
  ReferenceState r = make_reference(DensityMatrix(ComplexMatrix::diagonal(diag)));
  CHECK(approx_equal(r.transpose_in_basis(matrix_unit(2, 0, 1)), matrix_unit(2, 1, 0),
                     1e-13));
  Rng rng(22);
  ComplexMatrix d(2, 2);
  d(0, 0) = gaussian(rng);
  d(1, 1) = gaussian(rng);
  CHECK(approx_equal(r.transpose_in_basis(d), d, 1e-13));
}

TEST_CASE("transpose in a rotated basis matches the change-of-basis oracle") {
  // Hadamard-rotated reference; the basis transpose is U A^T U† with
  // U = B B^T assembled independently here.
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix hadamard = ComplexMatrix::from_rows({{h, h}, {h, -h}});
  const std::vector<double> diag{0.3, 0.7};
  ComplexMatrix rho = hadamard * ComplexMatrix::diagonal(diag) * hadamard.adjoint();
  ReferenceState r = make_reference(DensityMatrix(rho));

  const ComplexMatrix sigma_y =
      ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
  const ComplexMatrix u = r.basis() * r.basis().transpose();
  const ComplexMatrix oracle = u * sigma_y.transpose() * u.adjoint();
  CHECK(distance(r.transpose_in_basis(sigma_y), oracle) <= 1e-12);
}

TEST_CASE("transpose is an involutive anti-homomorphism") {
  Rng rng(23);
  ReferenceState r = random_reference(3, rng);
  ComplexMatrix a = ginibre(3, 3, rng);
  ComplexMatrix b = ginibre(3, 3, rng);
  CHECK(distance(r.transpose_in_basis(r.transpose_in_basis(a)), a) <= 1e-12);
  CHECK(distance(r.transpose_in_basis(a * b),
                 r.transpose_in_basis(b) * r.transpose_in_basis(a)) <= 1e-12);
}

TEST_CASE("modular data is an exact involution in eigenbasis coordinates") {
  Rng rng(24);
  ReferenceState r = random_reference(3, rng);
  ModularData modular(r);
  ComplexMatrix coords = ginibre(3, 3, rng);
  const ComplexMatrix twice = modular.transpose(modular.transpose(coords));
  for (std::size_t i = 0; i < coords.size(); ++i)
    CHECK(twice.entries()[i] == coords.entries()[i]);
  const ComplexMatrix conj_dagger = modular.conjugate(coords).adjoint();
  const ComplexMatrix transposed = modular.transpose(coords);
  for (std::size_t i = 0; i < coords.size(); ++i)
    CHECK(conj_dagger.entries()[i] == transposed.entries()[i]);
}

TEST_CASE("modular flow basics") {
  const std::vector<double> diag{0.75, 0.25};
  ReferenceState r = make_reference(DensityMatrix(ComplexMatrix::diagonal(diag)));
  Rng rng(25);
  ComplexMatrix a = ginibre(2, 2, rng);
  CHECK(distance(r.modular_flow(a, 0.0), a) <= 1e-15);

  // operators commuting with rho0 are invariant
  ComplexMatrix d(2, 2);
  d(0, 0) = gaussian(rng);
  d(1, 1) = gaussian(rng);
  CHECK(distance(r.modular_flow(d, 1.7), d) <= 1e-13);
}

TEST_CASE("modular flow closed form on a qubit") {
  // rho0 = diag(0.75, 0.25): sigma_x picks up off-diagonal phases e^{±i ln 3}.
  const std::vector<double> diag{0.75, 0.25};
  ReferenceState r = make_reference(DensityMatrix(ComplexMatrix::diagonal(diag)));
  const ComplexMatrix sigma_x = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  const ComplexMatrix flowed = r.modular_flow(sigma_x, 1.0);
  const Complex expected = std::polar(1.0, std::log(3.0));
  CHECK(std::abs(flowed(0, 1) - expected) <= 1e-13);
  CHECK(std::abs(flowed(1, 0) - std::conj(expected)) <= 1e-13);
}

TEST_CASE("modular flow is a one-parameter group fixing rho0") {
  Rng rng(26);
  ReferenceState r = random_reference(3, rng);
  ComplexMatrix a = ginibre(3, 3, rng);
  const double t = 0.9;
  const double s = -2.3;
  CHECK(distance(r.modular_flow(r.modular_flow(a, s), t), r.modular_flow(a, t + s)) <=
        1e-10);
  CHECK(distance(r.modular_flow(r.density(), 1.3), r.density()) <= 1e-12);

  // exactly, in eigenbasis coordinates
  ModularData modular(r);
  ComplexMatrix rho_coords(3, 3);
  for (std::size_t i = 0; i < 3; ++i) rho_coords(i, i) = r.weights()[i];
  const ComplexMatrix flowed = modular.flow(rho_coords, 0.37);
  for (std::size_t i = 0; i < rho_coords.size(); ++i)
    CHECK(flowed.entries()[i] == rho_coords.entries()[i]);
}

TEST_CASE("delta factors multiply to the identity pairing") {
  Rng rng(27);
  ReferenceState r = random_reference(2, rng);
  ModularData modular(r);
  auto [plus, minus] = modular.delta_factors(1.1);
  CHECK(distance(plus * minus, ComplexMatrix::identity(2)) <= 1e-14);
}

TEST_CASE("density matrix validation") {
  const std::vector<double> not_normalized{0.5, 0.25};
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::diagonal(not_normalized)), Error);
  ComplexMatrix non_hermitian = ComplexMatrix::from_rows({{0.5, 0.4}, {0.0, 0.5}});
  CHECK_THROWS_AS(DensityMatrix{non_hermitian}, Error);
  const std::vector<double> negative{1.5, -0.5};
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::diagonal(negative)), Error);
}
