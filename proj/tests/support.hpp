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

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "cjkit/channel.hpp"
#include "cjkit/choi.hpp"
#include "cjkit/matrix.hpp"
#include "cjkit/phase_covariant.hpp"
#include "cjkit/states.hpp"

namespace cjkit::testing {

using Rng = std::mt19937_64;

inline Complex gaussian(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return {dist(rng), dist(rng)};
}

inline ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = gaussian(rng);
  return m;
}

inline ComplexMatrix matrix_unit(std::size_t d, std::size_t i, std::size_t j) {
  ComplexMatrix m(d, d);
  m(i, j) = 1.0;
  return m;
}

// Modified Gram-Schmidt on the columns; requires rows >= cols.
inline ComplexMatrix orthonormalize_columns(ComplexMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < rows; ++i)
        overlap += std::conj(m(i, prev)) * m(i, c);
      for (std::size_t i = 0; i < rows; ++i) m(i, c) -= overlap * m(i, prev);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < rows; ++i) norm += std::norm(m(i, c));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < rows; ++i) m(i, c) /= norm;
  }
  return m;
}

inline ComplexMatrix haar_unitary(std::size_t d, Rng& rng) {
  return orthonormalize_columns(ginibre(d, d, rng));
}

inline ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  ComplexMatrix g = ginibre(d, d, rng);
  return Complex(0.5) * (g + g.adjoint());
}

// Faithful random state: Wishart plus a floor that keeps the smallest
// eigenvalue safely above the faithfulness threshold.
inline DensityMatrix random_faithful_density(std::size_t d, Rng& rng,
                                             double floor = 0.1) {
  ComplexMatrix g = ginibre(d, d, rng);
  ComplexMatrix rho = g * g.adjoint() + floor * ComplexMatrix::identity(d);
  rho *= Complex(1.0 / rho.trace().real());
  return DensityMatrix(std::move(rho));
}

inline ReferenceState random_reference(std::size_t d, Rng& rng, double floor = 0.1) {
  return make_reference(random_faithful_density(d, rng, floor));
}

inline ReferenceState uniform_reference(std::size_t d) {
  std::vector<Complex> diag(d, Complex(1.0 / static_cast<double>(d)));
  return make_reference(DensityMatrix(ComplexMatrix::diagonal(diag)));
}

// Heisenberg-unital random channel: slice a Haar-random isometry
// C^{d_in} → C^{d_out·k} into k Kraus blocks, so Σ K†K = 1 exactly up to
// orthonormalization rounding. The block count is raised when needed so an
// isometry exists (d_out·k ≥ d_in).
inline Channel random_unital_channel(std::size_t d_in, std::size_t d_out,
                                     std::size_t kraus_count, Rng& rng) {
  kraus_count = std::max(kraus_count, (d_in + d_out - 1) / d_out);
  const std::size_t rows = d_out * kraus_count;
  ComplexMatrix isometry = orthonormalize_columns(ginibre(rows, d_in, rng));
  std::vector<ComplexMatrix> kraus(kraus_count, ComplexMatrix(d_out, d_in));
  for (std::size_t block = 0; block < kraus_count; ++block)
    for (std::size_t i = 0; i < d_out; ++i)
      for (std::size_t j = 0; j < d_in; ++j)
        kraus[block](i, j) = isometry(block * d_out + i, j);
  return Channel(d_in, d_out, std::move(kraus));
}

// Independent Choi assembly from the Schrödinger action alone:
// S = Σ_{ξζ} √(t_ξ t_ζ) |ξ⟩⟨ζ| ⊗ action(|ξ⟩⟨ζ|) over the eigenbasis of r.
inline ComplexMatrix choi_from_action(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& action,
    const ReferenceState& r, std::size_t d_out) {
  const std::size_t d = r.dimension();
  const ComplexMatrix& basis = r.basis();
  ComplexMatrix s(d * d_out, d * d_out);
  for (std::size_t xi = 0; xi < d; ++xi)
    for (std::size_t zeta = 0; zeta < d; ++zeta) {
      ComplexMatrix ket_bra(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          ket_bra(i, j) = basis(i, xi) * std::conj(basis(j, zeta));
      const double amp = std::sqrt(r.weights()[xi] * r.weights()[zeta]);
      const ComplexMatrix mapped = action(ket_bra);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          const Complex left = amp * ket_bra(i, j);
          if (left == Complex(0.0)) continue;
          for (std::size_t p = 0; p < d_out; ++p)
            for (std::size_t q = 0; q < d_out; ++q)
              s(i * d_out + p, j * d_out + q) += left * mapped(p, q);
        }
    }
  return s;
}

// Random valid TauFamily: three distinct admissible (l, j) slots per level
// (the pick index doubles as the multiplicity index), normalized per level.
inline TauFamily random_tau_family(std::size_t d, Rng& rng) {
  std::uniform_int_distribution<long> shift(-static_cast<long>(d) + 1,
                                            static_cast<long>(d) - 1);
  std::vector<TauEntry> entries;
  for (std::size_t m = 0; m < d; ++m) {
    std::vector<TauEntry> level;
    for (std::size_t pick = 0; pick < 3; ++pick) {
      long l = shift(rng);
      if (static_cast<long>(m) + l < 0 ||
          static_cast<long>(m) + l >= static_cast<long>(d))
        l = 0;
      level.push_back({l, pick, m, gaussian(rng)});
    }
    double norm = 0.0;
    for (const TauEntry& e : level) norm += std::norm(e.value);
    norm = std::sqrt(norm);
    for (TauEntry& e : level) {
      e.value /= norm;
      entries.push_back(e);
    }
  }
  return TauFamily(d, std::move(entries));
}

// Max Frobenius distance of the two channels' Heisenberg actions over the
// matrix-unit probe basis of the output space.
inline double action_distance(const Channel& a, const Channel& b) {
  double result = 0.0;
  for (std::size_t i = 0; i < a.d_out(); ++i)
    for (std::size_t j = 0; j < a.d_out(); ++j) {
      const ComplexMatrix unit = matrix_unit(a.d_out(), i, j);
      result = std::max(result,
                        distance(a.apply_heisenberg(unit), b.apply_heisenberg(unit)));
    }
  return result;
}

}  // namespace cjkit::testing
