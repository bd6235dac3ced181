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
#include <numbers>
#include <numeric>

#include "cjkit/errors.hpp"
#include "cjkit/phase_covariant.hpp"
#include "cjkit/symmetry.hpp"
#include "support.hpp"

using namespace cjkit;
using namespace cjkit::testing;

namespace {

constexpr double kPi = std::numbers::pi;

Representation number_phase_rep(std::size_t d) {
  std::vector<long> weights(d);
  std::iota(weights.begin(), weights.end(), 0L);
  return Representation::phase(std::move(weights));
}

TauFamily rotation_tau(std::size_t d, double theta0) {
  std::vector<TauEntry> entries;
  for (std::size_t m = 0; m < d; ++m)
    entries.push_back({0, 0, m, std::polar(1.0, theta0 * static_cast<double>(m))});
  return TauFamily(d, std::move(entries));
}

}  // namespace

TEST_CASE("tau family validation") {
  // truncation: l = 1 at the top level maps outside
  CHECK_THROWS_AS(TauFamily(2, {{1, 0, 1, Complex(1.0)}, {0, 0, 0, Complex(1.0)}}),
                  Error);
  // normalization violation at m = 0
  CHECK_THROWS_AS(TauFamily(2, {{0, 0, 0, Complex(0.5)}, {0, 0, 1, Complex(1.0)}}),
                  Error);
}

TEST_CASE("the pure rotation family builds the phase conjugation channel") {
  const std::size_t d = 4;
  const double theta0 = 0.8;
  Channel c = build_channel(rotation_tau(d, theta0));
  REQUIRE(c.kraus().size() == 1);

  Representation rep = number_phase_rep(d);
  const ComplexMatrix u = rep.phase_unitary(theta0);
  Channel expected = Channel::from_unitary(u);
  CHECK(action_distance(c, expected) <= 1e-12);

  // rank-1 Choi
  ReferenceState r = uniform_reference(d);
  CHECK(choi_rank(choi_from_channel(c, r)) == 1);
}

TEST_CASE("the constant family is the identity channel") {
  std::vector<TauEntry> entries;
  for (std::size_t m = 0; m < 3; ++m) entries.push_back({0, 0, m, Complex(1.0)});
  Channel c = build_channel(TauFamily(3, std::move(entries)));
  CHECK(action_distance(c, Channel::identity(3)) <= 1e-14);
}

TEST_CASE("the amplitude damping tau table reproduces the standard Kraus form") {
  const double gamma = 0.36;
  TauFamily tf(2, {{0, 0, 0, Complex(1.0)},
                   {0, 0, 1, Complex(std::sqrt(1.0 - gamma))},
                   {-1, 1, 1, Complex(std::sqrt(gamma))}});
  Channel c = build_channel(tf);
  CHECK(action_distance(c, Channel::amplitude_damping(gamma)) <= 1e-12);
}

TEST_CASE("built channels are unital and covariant") {
  Rng rng(91);
  for (std::size_t d = 2; d <= 6; ++d) {
    TauFamily tf = random_tau_family(d, rng);
    Channel c = build_channel(tf);
    CHECK(c.is_unital().residual <= 1e-10);
    Representation rep = number_phase_rep(d);
    ReferenceState r = uniform_reference(d);
    CovarianceReport report = check_covariance(c, rep, rep, r);
    CHECK(report.covariant);
    CHECK(report.residual <= 1e-10);
  }
}

TEST_CASE("sector decomposition of the identity channel") {
  ReferenceState r = make_reference(
      DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{0.2, 0.35, 0.45})));
  ChoiState s = choi_from_channel(Channel::identity(3), r);
  SectorBlocks sectors = sector_decompose(s);
  CHECK(sectors.off_sector_norm <= 1e-12);
  double trace_sum = 0.0;
  for (const auto& [shift, block] : sectors.blocks) {
    trace_sum += block.trace().real();
    if (shift != 0) CHECK(block.frobenius_norm() <= 1e-12);
  }
  CHECK(trace_sum == doctest::Approx(1.0));
}

TEST_CASE("amplitude damping splits between the stay and lowering sectors") {
  const double gamma = 0.36;
  ReferenceState r = uniform_reference(2);
  ChoiState s = choi_from_channel(Channel::amplitude_damping(gamma), r);
  SectorBlocks sectors = sector_decompose(s);
  CHECK(sectors.off_sector_norm <= 1e-12);

  // l = −1 block carries the damped weight t_1·γ
  const ComplexMatrix& lowering = sectors.blocks.at(-1);
  REQUIRE(lowering.rows() == 1);
  CHECK(lowering(0, 0).real() == doctest::Approx(0.5 * gamma));

  // l = 0 block carries the two stay amplitudes
  const ComplexMatrix& stay = sectors.blocks.at(0);
  REQUIRE(stay.rows() == 2);
  CHECK(stay(0, 0).real() == doctest::Approx(0.5));
  CHECK(stay(1, 1).real() == doctest::Approx(0.5 * (1.0 - gamma)));
}

TEST_CASE("sector margins reproduce the reference weights") {
  Rng rng(92);
  const std::size_t d = 5;
  TauFamily tf = random_tau_family(d, rng);
  Channel c = build_channel(tf);
  std::vector<double> weights(d);
  std::uniform_real_distribution<double> unit(0.5, 1.5);
  double sum = 0.0;
  for (double& w : weights) {
    w = unit(rng);
    sum += w;
  }
  for (double& w : weights) w /= sum;
  ReferenceState r = make_reference(DensityMatrix(ComplexMatrix::diagonal(weights)));
  SectorBlocks sectors = sector_decompose(choi_from_channel(c, r));

  const ComplexMatrix rho = r.density();
  for (std::size_t m = 0; m < d; ++m) {
    double margin = 0.0;
    for (const auto& [shift, block] : sectors.blocks) {
      const std::size_t m0 = sectors.m_begin(shift);
      if (m < m0 || m >= sectors.m_end(shift)) continue;
      margin += block(m - m0, m - m0).real();
    }
    CHECK(std::abs(margin - rho(m, m).real()) <= 1e-10);
  }
}

TEST_CASE("sector decomposition demands a diagonal reference") {
  Rng rng(93);
  ReferenceState rotated = random_reference(2, rng);
  Channel c = Channel::amplitude_damping(0.2);
  ChoiState s = choi_from_channel(c, rotated);
  CHECK_THROWS_AS(sector_decompose(s), Error);
}

TEST_CASE("tau extraction recovers the rotation family up to a global phase") {
  const std::size_t d = 4;
  const double theta0 = 1.1;
  Channel c = build_channel(rotation_tau(d, theta0));
  ReferenceState r = uniform_reference(d);
  TauFamily recovered = extract_tau(c, r);

  std::vector<Complex> tau(d, Complex(0.0));
  for (const TauEntry& e : recovered.entries()) {
    REQUIRE(e.l == 0);
    REQUIRE(e.j == 0);
    tau[e.m] = e.value;
  }
  for (std::size_t m = 0; m < d; ++m) CHECK(std::abs(std::abs(tau[m]) - 1.0) <= 1e-10);
  for (std::size_t m = 0; m + 1 < d; ++m)
    CHECK(std::abs(tau[m + 1] / tau[m] - std::polar(1.0, theta0)) <= 1e-10);
}

TEST_CASE("tau extraction of the identity is constant up to a global phase") {
  Channel c = Channel::identity(3);
  ReferenceState r = make_reference(
      DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{0.2, 0.35, 0.45})));
  TauFamily recovered = extract_tau(c, r);
  std::vector<Complex> tau(3, Complex(0.0));
  for (const TauEntry& e : recovered.entries()) {
    REQUIRE(e.l == 0);
    tau[e.m] = e.value;
  }
  for (std::size_t m = 0; m + 1 < 3; ++m)
    CHECK(std::abs(tau[m + 1] - tau[m]) <= 1e-10);
}

TEST_CASE("extract then build reproduces the channel action") {
  Rng rng(94);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + trial % 7;  // up to 8
    TauFamily tf = random_tau_family(d, rng);
    Channel c = build_channel(tf);
    ReferenceState r = uniform_reference(d);
    TauFamily recovered = extract_tau(c, r);
    Channel rebuilt = build_channel(recovered);
    CHECK(action_distance(rebuilt, c) <= 1e-9);

    // roundtrip at the Choi level as well
    CHECK(distance(choi_from_channel(rebuilt, r).matrix(),
                   choi_from_channel(c, r).matrix()) <= 1e-10);
  }
}

TEST_CASE("extraction refuses non-covariant channels") {
  const double h = 1.0 / std::sqrt(2.0);
  Channel skew = Channel::from_unitary(ComplexMatrix::from_rows({{h, h}, {h, -h}}));
  ReferenceState r = uniform_reference(2);
  CHECK_THROWS_AS(extract_tau(skew, r), Error);
}

TEST_CASE("extraction works against a nonuniform diagonal reference") {
  Rng rng(95);
  const std::size_t d = 4;
  TauFamily tf = random_tau_family(d, rng);
  Channel c = build_channel(tf);
  std::vector<double> weights{0.1, 0.2, 0.3, 0.4};
  ReferenceState r = make_reference(DensityMatrix(ComplexMatrix::diagonal(weights)));
  TauFamily recovered = extract_tau(c, r);
  CHECK(action_distance(build_channel(recovered), c) <= 1e-9);
}
