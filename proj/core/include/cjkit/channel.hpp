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
#include "cjkit/states.hpp"

namespace cjkit {

struct UnitalityReport {
  bool unital = false;
  double residual = 0.0;  // ‖Σ K† K − I‖_F
};

// A completely positive map in Kraus form. A channel with input dimension
// d_in and output dimension d_out carries Kraus operators K: C^{d_in} →
// C^{d_out} and acts in two pictures:
//   Heisenberg   Φ(B)  = Σ K† B K   on observables of the output space,
//   Schrödinger  Φ*(T) = Σ K T K†   on states of the input space.
// Heisenberg unitality (Σ K†K = I) is equivalent to Schrödinger trace
// preservation; it is checked on demand, not enforced at construction, since
// intermediate objects (twirls in progress, compressions) may violate it.
class Channel {
 public:
  Channel(std::size_t d_in, std::size_t d_out, std::vector<ComplexMatrix> kraus);

  static Channel identity(std::size_t d);
  // Heisenberg conjugation B ↦ U†BU, Schrödinger T ↦ UTU†.
  static Channel from_unitary(const ComplexMatrix& u);
  // Completely depolarizing channel with Kraus set {|i⟩⟨j|/√d}.
  static Channel depolarizing(std::size_t d);
  // Qubit amplitude damping, Kraus {diag(1, √(1−γ)), √γ·|0⟩⟨1|}.
  static Channel amplitude_damping(double gamma);

  std::size_t d_in() const { return d_in_; }
  std::size_t d_out() const { return d_out_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  ComplexMatrix apply_heisenberg(const ComplexMatrix& b) const;
  ComplexMatrix apply_schrodinger(const ComplexMatrix& t) const;

  UnitalityReport is_unital() const;

  // Gram matrix G[λ,μ] = tr[ρ0 K_λ† K_μ]; positive semidefinite, diagonal
  // exactly when the Kraus set is ρ0-orthogonal.
  ComplexMatrix kraus_gram(const ReferenceState& r) const;

  // Weak independence of the Kraus set. In finite dimension this is linear
  // independence, tested as full numerical rank of the Gram matrix taken with
  // the maximally mixed reference so that a near-singular session state
  // cannot mask a dependence.
  bool is_minimal_kraus() const;

 private:
  std::size_t d_in_;
  std::size_t d_out_;
  std::vector<ComplexMatrix> kraus_;
};

// Sequential composition in the Schrödinger (state-flow) order: states pass
// through `inner` first, then `outer`; the Kraus set is the full product set
// {K_outer · K_inner}. In the Heisenberg picture this is Φ_inner ∘ Φ_outer.
Channel compose(const Channel& outer, const Channel& inner);

}  // namespace cjkit
