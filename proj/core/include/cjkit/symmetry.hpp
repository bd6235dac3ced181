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

#include "cjkit/choi.hpp"

namespace cjkit {

// A group symmetry acting by unitary conjugation. Three flavours:
//   finite  — an explicit list of unitaries closed under product,
//   phase   — U(θ) = diag(e^{i n_k θ}) with integer weights n,
//   spin    — a connected SU(2) family given by its three generators.
// Projective multipliers need no bookkeeping: covariance conditions use
// conjugation only, so phases cancel.
class Representation {
 public:
  enum class Kind { finite, phase, spin };

  static Representation finite(std::vector<ComplexMatrix> elements);
  static Representation phase(std::vector<long> weights);
  static Representation spin(double j);
  // Connected family with explicit generators obeying [Jx,Jy] = iJz and
  // cyclic; used for block spin structures on composite spaces.
  static Representation spin_from_generators(ComplexMatrix jx, ComplexMatrix jy,
                                             ComplexMatrix jz);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }

  const std::vector<ComplexMatrix>& elements() const;  // finite only
  const std::vector<long>& weights() const;            // phase only
  const ComplexMatrix& jx() const;                     // spin only
  const ComplexMatrix& jy() const;
  const ComplexMatrix& jz() const;

  // diag(e^{i n_k θ}) for phase representations.
  ComplexMatrix phase_unitary(double theta) const;

 private:
  Representation(Kind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

  Kind kind_;
  std::size_t dim_;
  std::vector<ComplexMatrix> elements_;
  std::vector<long> weights_;
  std::vector<ComplexMatrix> generators_;  // jx, jy, jz
};

struct CovarianceReport {
  double residual = 0.0;
  bool covariant = false;         // residual ≤ 1e-9
  std::size_t elements_tested = 0;
};

// The commutant-side representation g ↦ conj(U(g)) with the conjugation taken
// in the ρ0 eigenbasis: finite reps get a conjugated element list, phase reps
// negated weights, spin reps the generators −conj(J_k).
Representation conjugate_rep(const Representation& rep, const ReferenceState& r);

// Covariance of a channel under (repA, repB) relative to ρ0. When ρ0 is
// repA-invariant the test is commutation of the Choi matrix with
// conj(U_A(g)) ⊗ U_B(g) (at the generator level for spin); otherwise the
// displaced-vector criterion is evaluated element by element. Phase groups
// are sampled at N = 2·max|weight gap|+1 uniform angles, which is exact for
// integer weights.
CovarianceReport check_covariance(const Channel& c, const Representation& rep_a,
                                  const Representation& rep_b,
                                  const ReferenceState& r);

// Group average of a Choi state over conj(U_A) ⊗ U_B. Requires a
// repA-invariant reference state (the margin would break otherwise). Finite
// groups average exactly over the element list, phase groups over the exact
// Fourier angle set, spin families project onto the joint nullspace of the
// three commutator superoperators. Idempotent, margin-preserving.
ChoiState twirl(const ChoiState& s, const Representation& rep_a,
                const Representation& rep_b);
Channel twirl(const Channel& c, const Representation& rep_a,
              const Representation& rep_b, const ReferenceState& r);

// Haar (or exact finite) average of a faithful state under a representation;
// the result is invariant and still faithful.
ReferenceState invariantize_state(const DensityMatrix& rho, const Representation& rep);

// Covariance under the modular flow of ρ0 on the input side paired with the
// evolution β_t = Ad(e^{-itH}) generated by the output-side modular
// Hamiltonian H (so H = −log ρ0 pairs the flow with itself through the
// identity channel). Decided at the generator level with finite-t spot
// checks.
CovarianceReport check_modular_covariance(const Channel& c, const ReferenceState& r,
                                          const ComplexMatrix& h);

// Both-sides-modular variant: commutation of S with ρ0^{-1} ⊗ σ0.
CovarianceReport check_modular_covariance(const Channel& c, const ReferenceState& r,
                                          const ReferenceState& sigma0);

}  // namespace cjkit
