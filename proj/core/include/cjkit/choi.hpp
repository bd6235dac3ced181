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

#include "cjkit/channel.hpp"
#include "cjkit/matrix.hpp"
#include "cjkit/states.hpp"

namespace cjkit {

// The dual object of a channel under the reference-state Choi isomorphism:
// a positive trace-one operator on the input ⊗ output space (input factor
// first) whose first margin tr_out(S) reproduces the reference state. The
// margin is the defining constraint; a ChoiState built from a non-unital
// channel is returned flagged with its margin residual instead of failing,
// since intermediate objects during twirling can transiently violate it.
class ChoiState {
 public:
  // Fully validated construction (PSD, trace one, margin within 1e-8).
  // This is the path used when loading external data.
  ChoiState(ReferenceState ref, std::size_t d_out, ComplexMatrix s);

  std::size_t d_in() const { return ref_.dimension(); }
  std::size_t d_out() const { return d_out_; }
  const ReferenceState& ref() const { return ref_; }
  const ComplexMatrix& matrix() const { return s_; }

  double margin_residual() const { return margin_residual_; }
  bool margin_ok() const;

  friend ChoiState choi_from_channel(const Channel& c, const ReferenceState& r);
  friend ChoiState mix(const ChoiState& s1, const ChoiState& s2, double t);
  friend ChoiState with_matrix(const ChoiState& proto, ComplexMatrix s);

 private:
  struct Unchecked {};
  ChoiState(Unchecked, ReferenceState ref, std::size_t d_out, ComplexMatrix s,
            double margin_residual);

  ReferenceState ref_;
  std::size_t d_out_;
  ComplexMatrix s_;
  double margin_residual_;
};

// S = Σ_λ |w_λ⟩⟨w_λ| with w_λ = (1 ⊗ K_λ)Ω. For a unital channel all
// ChoiState invariants hold; otherwise the object is flagged.
ChoiState choi_from_channel(const Channel& c, const ReferenceState& r);

// Inverse direction. Kraus operators are extracted from the spectral
// decomposition of S: eigenvectors scaled by the square root of their
// eigenvalue become the orthogonal vectors w_λ, and K_λ ξ = t_ξ^{-1/2} ψ_{λ,ξ}
// where ψ_{λ,ξ} is the output-space component of w_λ along the eigenbasis
// vector ξ. The result is a minimal, pairwise ρ0-orthogonal Kraus set and a
// unital channel.
Channel channel_from_choi(const ChoiState& s);

// Choi matrix of the channel at a displaced GNS vector omega (unit vector in
// the d_in² GNS space, algebra factor major). Coincides with
// choi_from_channel when omega is the reference GNS vector. Needed for the
// covariance criterion at non-invariant reference states.
ComplexMatrix choi_from_vector(const Channel& c, const ComplexMatrix& omega);

// Convex combination t·s1 + (1−t)·s2 of two Choi states over the same
// reference; equals the Choi state of the mixed channel.
ChoiState mix(const ChoiState& s1, const ChoiState& s2, double t);

// Number of eigenvalues above the relative 1e-10 cutoff; equals the minimal
// Kraus cardinality of the associated channel.
std::size_t choi_rank(const ChoiState& s);

// Rebuilds a ChoiState around a transformed matrix of the same shape,
// recomputing the margin residual but skipping the full validation gate.
// Used by twirling, whose intermediate objects may carry a margin flag.
ChoiState with_matrix(const ChoiState& proto, ComplexMatrix s);

}  // namespace cjkit
