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

#include "cjkit/transpose.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "cjkit/choi.hpp"
#include "cjkit/errors.hpp"
#include "cjkit/tolerances.hpp"

namespace cjkit {

SupportRestriction restrict_to_support(const Channel& c, const ReferenceState& r) {
  if (r.dimension() != c.d_in())
    throw Error(ErrorCode::dimension_mismatch,
                "reference state dimension does not match channel input");
  const ComplexMatrix rho1_full = c.apply_schrodinger(r.density());
  HermitianEig eig = herm_eig(rho1_full);
  const double floor = tol::scaled(tol::kSupport);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i)
    if (eig.eigenvalues[i] > floor) kept.push_back(i);
  if (kept.size() == c.d_out())
    return {c, ComplexMatrix::identity(c.d_out())};

  const std::size_t s = kept.size();
  ComplexMatrix isometry(c.d_out(), s);
  for (std::size_t col = 0; col < s; ++col)
    for (std::size_t i = 0; i < c.d_out(); ++i)
      isometry(i, col) = eig.eigenvectors(i, kept[col]);

  const ComplexMatrix compressor = isometry.adjoint();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(c.kraus().size());
  for (const ComplexMatrix& k : c.kraus()) kraus.push_back(compressor * k);
  return {Channel(c.d_in(), s, std::move(kraus)), std::move(isometry)};
}

double TransposePair::defining_residual() const {
  const std::size_t d = original.d_in();
  const ComplexMatrix rho0_sqrt = rho0.sqrt();
  const ComplexMatrix rho1_sqrt = rho1.sqrt();
  const ComplexMatrix compress = support_isometry.adjoint();
  double residual = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix unit(d, d);
      unit(i, j) = 1.0;
      const ComplexMatrix lhs =
          rho1_sqrt * transposed.apply_heisenberg(unit) * rho1_sqrt;
      const ComplexMatrix rhs_full =
          original.apply_schrodinger(rho0_sqrt * unit * rho0_sqrt);
      const ComplexMatrix rhs = compress * rhs_full * support_isometry;
      residual = std::max(residual, distance(lhs, rhs));
    }
  return residual;
}

TransposePair transpose_channel(const Channel& c, const ReferenceState& r) {
  UnitalityReport unital = c.is_unital();
  if (!unital.unital)
    throw Error(ErrorCode::non_unital,
                "transpose requires a unital channel (residual " +
                    std::to_string(unital.residual) + ")");

  SupportRestriction restricted = restrict_to_support(c, r);
  const Channel& cs = restricted.channel;
  const ComplexMatrix rho1_mat = cs.apply_schrodinger(r.density());
  ReferenceState rho1 = make_reference(DensityMatrix(rho1_mat));

  // Kraus realization of A ↦ ρ1^{-1/2} Φ*(ρ0^{1/2} A ρ0^{1/2}) ρ1^{-1/2}:
  // the Heisenberg map of the channel with Kraus set {ρ0^{1/2} K† ρ1^{-1/2}}.
  const ComplexMatrix rho0_sqrt = r.sqrt();
  const ComplexMatrix rho1_inv_sqrt = rho1.inv_sqrt();
  std::vector<ComplexMatrix> raw;
  raw.reserve(cs.kraus().size());
  for (const ComplexMatrix& k : cs.kraus())
    raw.push_back(rho0_sqrt * k.adjoint() * rho1_inv_sqrt);
  Channel direct(cs.d_out(), c.d_in(), std::move(raw));

  // Canonical minimal Kraus form via the Choi roundtrip.
  Channel transposed = channel_from_choi(choi_from_channel(direct, rho1));
  return {c, std::move(transposed), r, std::move(rho1),
          std::move(restricted.isometry)};
}

Channel commutant_dual(const Channel& c, const ReferenceState& r) {
  TransposePair pair = transpose_channel(c, r);
  // Φ^#(A) = (Φᵀ(Aᵀ))^{T'} turns each Kraus operator of Φᵀ into its entrywise
  // conjugate taken in the (ρ0-eigenbasis, ρ1-eigenbasis) coordinates.
  const ComplexMatrix& b0 = pair.rho0.basis();
  const ComplexMatrix& b1 = pair.rho1.basis();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(pair.transposed.kraus().size());
  for (const ComplexMatrix& n : pair.transposed.kraus())
    kraus.push_back(b0 * (b0.adjoint() * n * b1).conjugate() * b1.adjoint());
  return Channel(pair.transposed.d_in(), pair.transposed.d_out(), std::move(kraus));
}

}  // namespace cjkit
