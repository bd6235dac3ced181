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

#include <vector>

#include "cjkit/matrix.hpp"

namespace cjkit {

// A validated quantum state: Hermitian, positive semidefinite and trace one
// within the standard gates.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat);

  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dimension() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

// A faithful state with a pinned eigenbasis. The basis columns are the
// eigenvectors ordered by ascending weight; degenerate eigenvalues get a
// deterministic basis (projection of the standard basis onto the eigenspace,
// Gram-Schmidt in lexicographic order, first significant component made real
// positive) so that transposes and conjugations are reproducible across runs.
//
// The reference state defines the GNS vector, the transpose, the conjugation
// and the modular flow used throughout the toolkit.
class ReferenceState {
 public:
  std::size_t dimension() const { return static_cast<std::size_t>(weights_.size()); }
  const ComplexMatrix& basis() const { return basis_; }
  const std::vector<double>& weights() const { return weights_; }

  ComplexMatrix density() const;

  // Omega = sum_xi sqrt(t_xi) xi (x) xi, a d^2-component column vector with
  // first-factor-major indexing.
  ComplexMatrix gns_vector() const;

  ComplexMatrix to_eigenbasis(const ComplexMatrix& a) const;    // B† a B
  ComplexMatrix from_eigenbasis(const ComplexMatrix& a) const;  // B a B†

  // Transpose/conjugation defined with respect to the pinned eigenbasis,
  // acting on standard-coordinate matrices.
  ComplexMatrix transpose_in_basis(const ComplexMatrix& a) const;
  ComplexMatrix conjugate_in_basis(const ComplexMatrix& a) const;

  // Modular flow a ↦ rho0^{it} a rho0^{-it}. Diagonal-in-basis matrices are
  // exact fixed points: the flow is applied as entrywise phases in eigenbasis
  // coordinates and the diagonal phases vanish identically.
  ComplexMatrix modular_flow(const ComplexMatrix& a, double t) const;

  // Spectral functions of the state operator itself.
  ComplexMatrix sqrt() const;
  ComplexMatrix inv_sqrt() const;
  ComplexMatrix inverse() const;
  ComplexMatrix log() const;
  ComplexMatrix imaginary_power(double t) const;  // rho0^{it}

  friend ReferenceState make_reference(const DensityMatrix& rho);

 private:
  ReferenceState(ComplexMatrix basis, std::vector<double> weights);

  ComplexMatrix apply_diagonal(const std::vector<Complex>& diag) const;

  ComplexMatrix basis_;
  std::vector<double> weights_;
};

// Spectral data extraction with the deterministic degeneracy rule. Throws
// not-faithful when any eigenvalue sits below the 1e-12 faithfulness floor.
ReferenceState make_reference(const DensityMatrix& rho);

// Modular structures of a reference state acting on eigenbasis-coordinate
// matrices, where transpose∘transpose is an exact involution and
// conjugate(A)† equals transpose(A) entry for entry. The modular operator
// Δ = rho0 ⊗ rho0^{-1} is exposed through its pair of diagonal factors.
class ModularData {
 public:
  explicit ModularData(const ReferenceState& owner) : owner_(&owner) {}

  const ReferenceState& owner() const { return *owner_; }

  ComplexMatrix transpose(const ComplexMatrix& a_coords) const;
  ComplexMatrix conjugate(const ComplexMatrix& a_coords) const;
  ComplexMatrix flow(const ComplexMatrix& a_coords, double t) const;

  // (rho0^{it}, rho0^{-it}) as diagonal eigenbasis-coordinate matrices.
  std::pair<ComplexMatrix, ComplexMatrix> delta_factors(double t) const;

 private:
  const ReferenceState* owner_;
};

}  // namespace cjkit
