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

#include "cjkit/choi.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "cjkit/errors.hpp"
#include "cjkit/tolerances.hpp"

namespace cjkit {

namespace {

// Rank-one accumulation S += |w⟩⟨w| for a length-n coordinate vector.
void add_outer(ComplexMatrix& s, const std::vector<Complex>& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (w[p] == Complex(0.0)) continue;
    for (std::size_t q = 0; q < n; ++q) s(p, q) += w[p] * std::conj(w[q]);
  }
}

double margin_residual_of(const ComplexMatrix& s, const ReferenceState& r,
                          std::size_t d_out) {
  const ComplexMatrix margin = partial_trace(s, TraceSide::second, r.dimension(), d_out);
  return distance(margin, r.density());
}

}  // namespace

ChoiState::ChoiState(ReferenceState ref, std::size_t d_out, ComplexMatrix s)
    : ref_(std::move(ref)), d_out_(d_out), s_(std::move(s)), margin_residual_(0.0) {
  const std::size_t dim = ref_.dimension() * d_out_;
  if (!s_.is_square() || s_.rows() != dim)
    throw Error(ErrorCode::dimension_mismatch,
                "Choi matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
  const double herm_tol = tol::scaled(tol::kChoiPsd) * std::max(1.0, s_.frobenius_norm());
  if (distance(s_, s_.adjoint()) > herm_tol)
    throw Error(ErrorCode::non_hermitian, "Choi matrix is not Hermitian");
  HermitianEig eig = herm_eig(s_);
  const double top = std::max(eig.eigenvalues.back(), 0.0);
  if (eig.eigenvalues.front() < -tol::scaled(tol::kChoiPsd) * std::max(1.0, top))
    throw Error(ErrorCode::not_psd, "Choi matrix has eigenvalue " +
                                        std::to_string(eig.eigenvalues.front()));
  if (std::abs(s_.trace() - Complex(1.0)) > tol::scaled(tol::kChoiTrace))
    throw Error(ErrorCode::normalization_violation, "Choi matrix trace is not 1");
  margin_residual_ = margin_residual_of(s_, ref_, d_out_);
  if (margin_residual_ > tol::scaled(tol::kMargin))
    throw Error(ErrorCode::margin_violation,
                "first margin differs from the reference state by " +
                    std::to_string(margin_residual_));
}

ChoiState::ChoiState(Unchecked, ReferenceState ref, std::size_t d_out, ComplexMatrix s,
                     double margin_residual)
    : ref_(std::move(ref)),
      d_out_(d_out),
      s_(std::move(s)),
      margin_residual_(margin_residual) {}

bool ChoiState::margin_ok() const {
  return margin_residual_ <= tol::scaled(tol::kMargin);
}

ChoiState choi_from_channel(const Channel& c, const ReferenceState& r) {
  if (r.dimension() != c.d_in())
    throw Error(ErrorCode::dimension_mismatch,
                "reference state dimension does not match channel input");
  const std::size_t d = c.d_in();
  const std::size_t m = c.d_out();
  const ComplexMatrix& basis = r.basis();
  const std::vector<double>& weights = r.weights();

  ComplexMatrix s(d * m, d * m);
  std::vector<Complex> w(d * m);
  for (const ComplexMatrix& k : c.kraus()) {
    // w = (1 ⊗ K)Ω, assembled per eigenbasis column: Ω = Σ √t_ξ ξ⊗ξ gives
    // w[(i,p)] = Σ_ξ √t_ξ B[i,ξ]·(Kξ)[p].
    const ComplexMatrix kb = k * basis;  // column ξ = K ξ
    std::fill(w.begin(), w.end(), Complex(0.0));
    for (std::size_t xi = 0; xi < d; ++xi) {
      const double amp = std::sqrt(weights[xi]);
      for (std::size_t i = 0; i < d; ++i) {
        const Complex left = amp * basis(i, xi);
        if (left == Complex(0.0)) continue;
        for (std::size_t p = 0; p < m; ++p) w[i * m + p] += left * kb(p, xi);
      }
    }
    add_outer(s, w);
  }

  const double residual = margin_residual_of(s, r, m);
  return ChoiState(ChoiState::Unchecked{}, r, m, std::move(s), residual);
}

Channel channel_from_choi(const ChoiState& s) {
  if (!s.margin_ok())
    throw Error(ErrorCode::margin_violation,
                "Choi state margin residual " + std::to_string(s.margin_residual()) +
                    " exceeds the 1e-8 gate");
  const std::size_t d = s.d_in();
  const std::size_t m = s.d_out();
  const ReferenceState& r = s.ref();

  HermitianEig eig = herm_eig(s.matrix());
  const double top = std::max(eig.eigenvalues.back(), 0.0);
  if (eig.eigenvalues.front() < -tol::scaled(tol::kChoiPsd) * std::max(1.0, top))
    throw Error(ErrorCode::not_psd, "Choi matrix has eigenvalue " +
                                        std::to_string(eig.eigenvalues.front()));
  const double cut = tol::scaled(tol::kChoiRankCut) * top;

  const ComplexMatrix& basis = r.basis();
  const std::vector<double>& weights = r.weights();

  std::vector<ComplexMatrix> kraus;
  // Walk eigenvalues in descending order so the dominant Kraus operator
  // comes first.
  for (std::size_t idx = eig.eigenvalues.size(); idx-- > 0;) {
    const double value = eig.eigenvalues[idx];
    if (value <= cut) break;
    const double amp = std::sqrt(value);
    // ψ_{λ,ξ}[p] = ⟨ξ ⊗ e_p | w_λ⟩; K_λ maps ξ ↦ t_ξ^{-1/2} ψ_{λ,ξ}, i.e.
    // K_λ = Σ_ξ t_ξ^{-1/2} ψ_{λ,ξ} ξ†.
    ComplexMatrix k(m, d);
    for (std::size_t xi = 0; xi < d; ++xi) {
      const double scale = amp / std::sqrt(weights[xi]);
      std::vector<Complex> psi(m, Complex(0.0));
      for (std::size_t i = 0; i < d; ++i) {
        const Complex coeff = std::conj(basis(i, xi));
        if (coeff == Complex(0.0)) continue;
        for (std::size_t p = 0; p < m; ++p)
          psi[p] += coeff * eig.eigenvectors(i * m + p, idx);
      }
      for (std::size_t p = 0; p < m; ++p) {
        const Complex value_p = scale * psi[p];
        for (std::size_t j = 0; j < d; ++j)
          k(p, j) += value_p * std::conj(basis(j, xi));
      }
    }
    kraus.push_back(std::move(k));
  }
  if (kraus.empty())
    throw Error(ErrorCode::not_psd, "Choi matrix has no spectral weight above the cutoff");
  return Channel(d, m, std::move(kraus));
}

ComplexMatrix choi_from_vector(const Channel& c, const ComplexMatrix& omega) {
  const std::size_t d = c.d_in();
  const std::size_t m = c.d_out();
  if (omega.rows() != d * d || omega.cols() != 1)
    throw Error(ErrorCode::dimension_mismatch,
                "GNS vector must be a " + std::to_string(d * d) + "-component column");
  double norm2 = 0.0;
  for (const Complex& z : omega.entries()) norm2 += std::norm(z);
  if (std::abs(std::sqrt(norm2) - 1.0) > tol::scaled(tol::kUnitVector))
    throw Error(ErrorCode::normalization_violation, "GNS vector is not normalized");

  // Reshape omega with the algebra factor major: Om[i,j] = omega[(i,j)].
  // The displaced Choi state swaps factors after the Schrödinger action on
  // the algebra factor, so each Kraus operator contributes the vector
  // w = vec((K·Om)^T) on the (commutant ⊗ output) space.
  ComplexMatrix s(d * m, d * m);
  std::vector<Complex> w(d * m);
  for (const ComplexMatrix& k : c.kraus()) {
    std::fill(w.begin(), w.end(), Complex(0.0));
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t i = 0; i < d; ++i) {
        Complex sum = 0.0;
        for (std::size_t a = 0; a < d; ++a) sum += k(p, a) * omega(a * d + i, 0);
        w[i * m + p] = sum;
      }
    add_outer(s, w);
  }
  return s;
}

ChoiState mix(const ChoiState& s1, const ChoiState& s2, double t) {
  if (t < 0.0 || t > 1.0)
    throw Error(ErrorCode::invalid_argument, "mixing weight must lie in [0,1]");
  if (s1.d_in() != s2.d_in() || s1.d_out() != s2.d_out())
    throw Error(ErrorCode::ref_mismatch, "Choi states have different dimensions");
  if (distance(s1.ref().density(), s2.ref().density()) > tol::scaled(tol::kFaithful) * 10.0)
    throw Error(ErrorCode::ref_mismatch, "Choi states carry different reference states");
  ComplexMatrix s = t * s1.matrix() + (1.0 - t) * s2.matrix();
  const double residual =
      t * s1.margin_residual() + (1.0 - t) * s2.margin_residual();
  return ChoiState(ChoiState::Unchecked{}, s1.ref(), s1.d_out(), std::move(s), residual);
}

ChoiState with_matrix(const ChoiState& proto, ComplexMatrix s) {
  if (!s.is_square() || s.rows() != proto.matrix().rows())
    throw Error(ErrorCode::dimension_mismatch, "replacement Choi matrix has wrong shape");
  const double residual = margin_residual_of(s, proto.ref(), proto.d_out());
  return ChoiState(ChoiState::Unchecked{}, proto.ref(), proto.d_out(), std::move(s),
                   residual);
}

std::size_t choi_rank(const ChoiState& s) {
  HermitianEig eig = herm_eig(s.matrix());
  const double top = std::max(eig.eigenvalues.back(), 0.0);
  if (top <= 0.0) return 0;
  const double cut = tol::scaled(tol::kChoiRankCut) * top;
  std::size_t rank = 0;
  for (double value : eig.eigenvalues)
    if (value > cut) ++rank;
  return rank;
}

}  // namespace cjkit
