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

#pragma once

#include <array>
#include <vector>

#include "cjkit/symmetry.hpp"

namespace cjkit {

// Standard (2j+1)-dimensional angular momentum matrices from the ladder
// construction, J_z diagonal with entries j, j-1, ..., -j.
struct SpinRep {
  double j = 0.0;
  ComplexMatrix jx;
  ComplexMatrix jy;
  ComplexMatrix jz;
};

// Throws invalid-j unless 2j is a nonnegative integer.
SpinRep spin_rep(double j);

// exp(-i·theta·(axis·J)) for a unit (or unnormalized, normalized here) axis.
ComplexMatrix rotation_unitary(const SpinRep& rep, double theta,
                               const std::array<double, 3>& axis);

// Truncated orbital ⊗ radial space: blocks (l, m, n) with l ≤ l_max,
// m = l, l-1, ..., -l inside each block and n < n_rad, laid out
// lexicographically. Carries the block rotation representation
// ⊕_l D^l(R) ⊗ 1 without evaluating any position-space wavefunctions.
class OrbitalSpace {
 public:
  OrbitalSpace(std::size_t l_max, std::size_t n_rad);

  std::size_t l_max() const { return l_max_; }
  std::size_t n_rad() const { return n_rad_; }
  std::size_t dimension() const { return dimension_; }

  // Start offset of the l block; the block is (2l+1)·n_rad wide.
  std::size_t block_offset(std::size_t l) const;

  // ⊕_l D^l(R) ⊗ 1 for the rotation by theta around axis.
  ComplexMatrix block_rotation(double theta, const std::array<double, 3>& axis) const;

  // Generators of the block rotation representation, ⊕_l J^{(l)}_k ⊗ 1.
  ComplexMatrix generator_x() const;
  ComplexMatrix generator_y() const;
  ComplexMatrix generator_z() const;
  Representation block_representation() const;

 private:
  ComplexMatrix assemble_generator(std::size_t which) const;

  std::size_t l_max_;
  std::size_t n_rad_;
  std::size_t dimension_;
};

// The rotation-invariant faithful states on an orbital space:
// ρ0 = ⊕_l (t_l/(2l+1))·1_{2l+1} ⊗ σ_l with t_l > 0 summing to one and
// faithful radial states σ_l. Commutes with every block rotation.
ReferenceState rotation_invariant_state(const OrbitalSpace& space,
                                        std::span<const double> t,
                                        std::span<const DensityMatrix> sigma);

// Rotation covariance of a channel from an orbital space into a spin-j
// carrier; delegates to the generator-level symmetry check.
CovarianceReport check_rotation_covariance(const Channel& c, const OrbitalSpace& in_space,
                                           const SpinRep& out_rep,
                                           const ReferenceState& r);
// Same with a plain spin block on the input side.
CovarianceReport check_rotation_covariance(const Channel& c, const SpinRep& in_rep,
                                           const SpinRep& out_rep,
                                           const ReferenceState& r);

}  // namespace cjkit
