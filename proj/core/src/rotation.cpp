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

#include "cjkit/rotation.hpp"

#include <cmath>
#include <string>

#include "cjkit/errors.hpp"
#include "cjkit/tolerances.hpp"

namespace cjkit {

SpinRep spin_rep(double j) {
  const double two_j = 2.0 * j;
  if (j < 0.0 || std::abs(two_j - std::round(two_j)) > 1e-9)
    throw Error(ErrorCode::invalid_spin,
                "spin must be a nonnegative half-integer, got " + std::to_string(j));
  const std::size_t n = static_cast<std::size_t>(std::lround(two_j)) + 1;

  SpinRep rep;
  rep.j = j;
  ComplexMatrix jplus(n, n);
  rep.jz = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = j - static_cast<double>(i);
    rep.jz(i, i) = m;
    if (i > 0) {
      // J+ |j,m⟩ = sqrt(j(j+1) − m(m+1)) |j,m+1⟩; row index i−1 is m+1.
      const double coeff = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
      jplus(i - 1, i) = coeff;
    }
  }
  const ComplexMatrix jminus = jplus.adjoint();
  rep.jx = Complex(0.5) * (jplus + jminus);
  rep.jy = Complex(0.0, -0.5) * (jplus - jminus);
  return rep;
}

ComplexMatrix rotation_unitary(const SpinRep& rep, double theta,
                               const std::array<double, 3>& axis) {
  const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (norm == 0.0)
    throw Error(ErrorCode::invalid_argument, "rotation axis must be nonzero");
  const ComplexMatrix h = (axis[0] / norm) * rep.jx + (axis[1] / norm) * rep.jy +
                          (axis[2] / norm) * rep.jz;
  return matrix_exp_ih(Complex(-theta) * h);
}

OrbitalSpace::OrbitalSpace(std::size_t l_max, std::size_t n_rad)
    : l_max_(l_max), n_rad_(n_rad) {
  if (n_rad_ == 0)
    throw Error(ErrorCode::invalid_argument, "radial dimension must be positive");
  dimension_ = 0;
  for (std::size_t l = 0; l <= l_max_; ++l) dimension_ += (2 * l + 1) * n_rad_;
}

std::size_t OrbitalSpace::block_offset(std::size_t l) const {
  if (l > l_max_)
    throw Error(ErrorCode::dimension_mismatch, "orbital index beyond the cutoff");
  std::size_t offset = 0;
  for (std::size_t k = 0; k < l; ++k) offset += (2 * k + 1) * n_rad_;
  return offset;
}

ComplexMatrix OrbitalSpace::block_rotation(double theta,
                                           const std::array<double, 3>& axis) const {
  ComplexMatrix out(dimension_, dimension_);
  for (std::size_t l = 0; l <= l_max_; ++l) {
    const ComplexMatrix d = rotation_unitary(spin_rep(static_cast<double>(l)), theta, axis);
    const std::size_t base = block_offset(l);
    for (std::size_t a = 0; a < 2 * l + 1; ++a)
      for (std::size_t b = 0; b < 2 * l + 1; ++b) {
        const Complex value = d(a, b);
        if (value == Complex(0.0)) continue;
        for (std::size_t n = 0; n < n_rad_; ++n)
          out(base + a * n_rad_ + n, base + b * n_rad_ + n) = value;
      }
  }
  return out;
}

ComplexMatrix OrbitalSpace::assemble_generator(std::size_t which) const {
  ComplexMatrix out(dimension_, dimension_);
  for (std::size_t l = 0; l <= l_max_; ++l) {
    const SpinRep rep = spin_rep(static_cast<double>(l));
    const ComplexMatrix& g = which == 0 ? rep.jx : which == 1 ? rep.jy : rep.jz;
    const std::size_t base = block_offset(l);
    for (std::size_t a = 0; a < 2 * l + 1; ++a)
      for (std::size_t b = 0; b < 2 * l + 1; ++b) {
        const Complex value = g(a, b);
        if (value == Complex(0.0)) continue;
        for (std::size_t n = 0; n < n_rad_; ++n)
          out(base + a * n_rad_ + n, base + b * n_rad_ + n) = value;
      }
  }
  return out;
}

ComplexMatrix OrbitalSpace::generator_x() const { return assemble_generator(0); }
ComplexMatrix OrbitalSpace::generator_y() const { return assemble_generator(1); }
ComplexMatrix OrbitalSpace::generator_z() const { return assemble_generator(2); }

Representation OrbitalSpace::block_representation() const {
  return Representation::spin_from_generators(generator_x(), generator_y(), generator_z());
}

ReferenceState rotation_invariant_state(const OrbitalSpace& space,
                                        std::span<const double> t,
                                        std::span<const DensityMatrix> sigma) {
  if (t.size() != space.l_max() + 1 || sigma.size() != space.l_max() + 1)
    throw Error(ErrorCode::dimension_mismatch,
                "need one weight and one radial state per orbital block");
  double sum = 0.0;
  for (double tl : t) {
    if (tl <= 0.0)
      throw Error(ErrorCode::not_faithful, "orbital weights must be strictly positive");
    sum += tl;
  }
  if (std::abs(sum - 1.0) > tol::scaled(tol::kTraceOne))
    throw Error(ErrorCode::normalization_violation,
                "orbital weights sum to " + std::to_string(sum));

  const std::size_t dim = space.dimension();
  ComplexMatrix rho(dim, dim);
  for (std::size_t l = 0; l <= space.l_max(); ++l) {
    const DensityMatrix& radial = sigma[l];
    if (radial.dimension() != space.n_rad())
      throw Error(ErrorCode::dimension_mismatch,
                  "radial state dimension does not match the space");
    const double scale = t[l] / static_cast<double>(2 * l + 1);
    const std::size_t base = space.block_offset(l);
    for (std::size_t a = 0; a < 2 * l + 1; ++a)
      for (std::size_t n = 0; n < space.n_rad(); ++n)
        for (std::size_t m = 0; m < space.n_rad(); ++m)
          rho(base + a * space.n_rad() + n, base + a * space.n_rad() + m) =
              scale * radial.matrix()(n, m);
  }
  return make_reference(DensityMatrix(std::move(rho)));
}

CovarianceReport check_rotation_covariance(const Channel& c, const OrbitalSpace& in_space,
                                           const SpinRep& out_rep,
                                           const ReferenceState& r) {
  Representation rep_b =
      Representation::spin_from_generators(out_rep.jx, out_rep.jy, out_rep.jz);
  return check_covariance(c, in_space.block_representation(), rep_b, r);
}

CovarianceReport check_rotation_covariance(const Channel& c, const SpinRep& in_rep,
                                           const SpinRep& out_rep,
                                           const ReferenceState& r) {
  Representation rep_a =
      Representation::spin_from_generators(in_rep.jx, in_rep.jy, in_rep.jz);
  Representation rep_b =
      Representation::spin_from_generators(out_rep.jx, out_rep.jy, out_rep.jz);
  return check_covariance(c, rep_a, rep_b, r);
}

}  // namespace cjkit
