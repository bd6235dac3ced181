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

struct SupportRestriction {
  Channel channel;        // Kraus operators left-compressed onto the support
  ComplexMatrix isometry; // d_out × s, columns span the support of Φ*(ρ0)
};

// Computes ρ1 = Φ*(ρ0), its support projection (eigenvalues above 1e-12) and
// the channel compressed onto that support, so that the compressed ρ1 is
// faithful. A full-support channel is returned unchanged with the identity
// isometry.
SupportRestriction restrict_to_support(const Channel& c, const ReferenceState& r);

// A channel together with its ρ0-transpose. The transpose runs in the
// opposite Heisenberg direction (input and output dimensions swap) and is
// pinned by the defining relation
//   ρ1^{1/2} Φᵀ(A) ρ1^{1/2} = Φ*(ρ0^{1/2} A ρ0^{1/2}),
// with ρ1 = Φ*(ρ0) after support restriction.
struct TransposePair {
  Channel original;
  Channel transposed;
  ReferenceState rho0;  // on original.d_in
  ReferenceState rho1;  // on the restricted output space
  ComplexMatrix support_isometry;

  // Max Frobenius residual of the defining relation over the full matrix-unit
  // probe basis of the input space.
  double defining_residual() const;
};

// Builds the ρ0-transpose of a unital channel. The transposed action is
// evaluated as A ↦ ρ1^{-1/2} Φ*(ρ0^{1/2} A ρ0^{1/2}) ρ1^{-1/2} and its
// minimal Kraus form is recovered through the Choi module.
TransposePair transpose_channel(const Channel& c, const ReferenceState& r);

// Commutant dual Φ^#(A) = (Φᵀ(Aᵀ))^{T'}, with the inner transpose taken in
// the ρ0 eigenbasis and the outer one in the ρ1 eigenbasis.
Channel commutant_dual(const Channel& c, const ReferenceState& r);

}  // namespace cjkit
