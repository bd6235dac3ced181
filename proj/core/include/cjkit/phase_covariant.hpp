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

#include <map>
#include <vector>

#include "cjkit/choi.hpp"

namespace cjkit {

struct TauEntry {
  long l = 0;          // sector shift, |m⟩ ↦ |m+l⟩
  std::size_t j = 0;   // multiplicity index within the sector
  std::size_t m = 0;   // number-basis level, 0 ≤ m < d
  Complex value;
};

// The coefficient table of a phase-shift-covariant channel on a truncated
// oscillator: entries τ_{l,j,m} with 0 ≤ m+l < d, normalized per level,
// Σ_{l,j} |τ_{l,j,m}|² = 1 for every m. The sector index runs over all
// integers in (−d, d): lowering channels (amplitude damping) occupy negative
// sectors, which the truncation admits on the same footing as raising ones.
class TauFamily {
 public:
  TauFamily(std::size_t d, std::vector<TauEntry> entries);

  std::size_t dimension() const { return d_; }
  const std::vector<TauEntry>& entries() const { return entries_; }

 private:
  std::size_t d_;
  std::vector<TauEntry> entries_;
};

// Sector blocks of a Choi state under the number-basis phase action:
// the block for shift l is the compression of S onto span{|m, m+l⟩}, stored
// over the admissible m range in ascending order. off_sector_norm is the
// Frobenius weight of everything outside the blocks; it vanishes exactly for
// U-covariant channels.
struct SectorBlocks {
  std::size_t d = 0;
  std::map<long, ComplexMatrix> blocks;
  double off_sector_norm = 0.0;

  // Admissible m range for sector l: [m_begin(l), m_end(l)).
  std::size_t m_begin(long l) const { return l < 0 ? static_cast<std::size_t>(-l) : 0; }
  std::size_t m_end(long l) const {
    return l > 0 ? d - static_cast<std::size_t>(l) : d;
  }
};

// Assembles the channel Φ(B) = Σ_{l,j} K_{l,j}† B K_{l,j} with
// K_{l,j}|m⟩ = τ_{l,j,m}|m+l⟩. Always unital and U-covariant.
Channel build_channel(const TauFamily& tf);

// Splits a Choi state over a number-basis-diagonal reference into its phase
// sectors. Throws nondiagonal-reference when the reference state is not
// diagonal in the number basis.
SectorBlocks sector_decompose(const ChoiState& s);

// Recovers a τ table from a U-covariant channel: each sector block is
// eigendecomposed, the j index enumerates eigenvectors by descending
// eigenvalue with the first nonzero component made real positive, and
// τ_{l,j,m} = t_m^{-1/2}·(scaled eigenvector component). Rebuilding through
// build_channel reproduces the channel action.
TauFamily extract_tau(const Channel& c, const ReferenceState& r);

}  // namespace cjkit
