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

#include "cjkit/states.hpp"

#include <cmath>
#include <utility>

#include "cjkit/errors.hpp"
#include "cjkit/tolerances.hpp"

namespace cjkit {

namespace {

// Make the first significant component of each column real positive.
void fix_column_phases(ComplexMatrix& basis) {
  const std::size_t d = basis.rows();
  for (std::size_t col = 0; col < basis.cols(); ++col) {
    double max_abs = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      max_abs = std::max(max_abs, std::abs(basis(i, col)));
    if (max_abs == 0.0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      const Complex z = basis(i, col);
      if (std::abs(z) > 1e-8 * max_abs) {
        const Complex phase = std::conj(z) / std::abs(z);
        for (std::size_t k = 0; k < d; ++k) basis(k, col) *= phase;
        break;
      }
    }
  }
}

// Replace the columns of each (near-)degenerate eigenvalue group by the
// Gram-Schmidt orthonormalization of the standard basis projected onto the
// group eigenspace, taken in lexicographic order. This pins a canonical basis
// for degenerate spectra (the maximally mixed state gets the identity).
void canonicalize_degenerate_groups(ComplexMatrix& basis,
                                    const std::vector<double>& weights,
                                    double scale) {
  const std::size_t d = basis.rows();
  const double gap_tol = 1e-10 * std::max(1.0, scale);
  std::size_t start = 0;
  while (start < d) {
    std::size_t end = start + 1;
    while (end < d && weights[end] - weights[end - 1] <= gap_tol) ++end;
    const std::size_t g = end - start;
    if (g > 1) {
      std::vector<std::vector<Complex>> kept;
      for (std::size_t j = 0; j < d && kept.size() < g; ++j) {
        // candidate = P e_j where P projects onto the group eigenspace
        std::vector<Complex> v(d, Complex(0.0));
        for (std::size_t c = start; c < end; ++c) {
          const Complex coeff = std::conj(basis(j, c));
          for (std::size_t i = 0; i < d; ++i) v[i] += coeff * basis(i, c);
        }
        for (const auto& u : kept) {
          Complex overlap = 0.0;
          for (std::size_t i = 0; i < d; ++i) overlap += std::conj(u[i]) * v[i];
          for (std::size_t i = 0; i < d; ++i) v[i] -= overlap * u[i];
        }
        double norm = 0.0;
        for (const Complex& z : v) norm += std::norm(z);
        norm = std::sqrt(norm);
        if (norm > 1e-6) {
          for (Complex& z : v) z /= norm;
          kept.push_back(std::move(v));
        }
      }
      if (kept.size() == g) {
        for (std::size_t c = 0; c < g; ++c)
          for (std::size_t i = 0; i < d; ++i) basis(i, start + c) = kept[c][i];
      }
    }
    start = end;
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (!mat_.is_square())
    throw Error(ErrorCode::dimension_mismatch, "density matrix must be square");
  const double herm_tol = tol::scaled(tol::kHermitian) * std::max(1.0, mat_.frobenius_norm());
  if (distance(mat_, mat_.adjoint()) > herm_tol)
    throw Error(ErrorCode::non_hermitian, "density matrix is not Hermitian");
  const Complex tr = mat_.trace();
  if (std::abs(tr - Complex(1.0)) > tol::scaled(tol::kTraceOne))
    throw Error(ErrorCode::normalization_violation,
                "density matrix trace " + std::to_string(tr.real()) + " is not 1");
  HermitianEig eig = herm_eig(mat_);
  if (eig.eigenvalues.front() < -tol::scaled(tol::kPsdEigenFloor))
    throw Error(ErrorCode::not_psd,
                "density matrix has eigenvalue " + std::to_string(eig.eigenvalues.front()));
}

ReferenceState::ReferenceState(ComplexMatrix basis, std::vector<double> weights)
    : basis_(std::move(basis)), weights_(std::move(weights)) {}

ReferenceState make_reference(const DensityMatrix& rho) {
  HermitianEig eig = herm_eig(rho.matrix());
  if (eig.eigenvalues.front() < tol::scaled(tol::kFaithful))
    throw Error(ErrorCode::not_faithful,
                "state has eigenvalue " + std::to_string(eig.eigenvalues.front()) +
                    " below the faithfulness floor");
  ComplexMatrix basis = eig.eigenvectors;
  canonicalize_degenerate_groups(basis, eig.eigenvalues, rho.matrix().frobenius_norm());
  fix_column_phases(basis);
  return ReferenceState(std::move(basis), std::move(eig.eigenvalues));
}

ComplexMatrix ReferenceState::density() const {
  const std::size_t d = dimension();
  ComplexMatrix diag(d, d);
  for (std::size_t i = 0; i < d; ++i) diag(i, i) = weights_[i];
  return basis_ * diag * basis_.adjoint();
}

ComplexMatrix ReferenceState::gns_vector() const {
  const std::size_t d = dimension();
  ComplexMatrix omega(d * d, 1);
  for (std::size_t xi = 0; xi < d; ++xi) {
    const double amp = std::sqrt(weights_[xi]);
    for (std::size_t i = 0; i < d; ++i) {
      const Complex left = amp * basis_(i, xi);
      if (left == Complex(0.0)) continue;
      for (std::size_t j = 0; j < d; ++j)
        omega(i * d + j, 0) += left * basis_(j, xi);
    }
  }
  return omega;
}

ComplexMatrix ReferenceState::to_eigenbasis(const ComplexMatrix& a) const {
  return basis_.adjoint() * a * basis_;
}

ComplexMatrix ReferenceState::from_eigenbasis(const ComplexMatrix& a) const {
  return basis_ * a * basis_.adjoint();
}

ComplexMatrix ReferenceState::transpose_in_basis(const ComplexMatrix& a) const {
  if (a.rows() != dimension() || a.cols() != dimension())
    throw Error(ErrorCode::dimension_mismatch,
                "transpose_in_basis expects a " + std::to_string(dimension()) +
                    "-dimensional square matrix");
  return from_eigenbasis(to_eigenbasis(a).transpose());
}

ComplexMatrix ReferenceState::conjugate_in_basis(const ComplexMatrix& a) const {
  if (a.rows() != dimension() || a.cols() != dimension())
    throw Error(ErrorCode::dimension_mismatch,
                "conjugate_in_basis expects a " + std::to_string(dimension()) +
                    "-dimensional square matrix");
  return from_eigenbasis(to_eigenbasis(a).conjugate());
}

ComplexMatrix ReferenceState::modular_flow(const ComplexMatrix& a, double t) const {
  if (a.rows() != dimension() || a.cols() != dimension())
    throw Error(ErrorCode::dimension_mismatch,
                "modular_flow expects a " + std::to_string(dimension()) +
                    "-dimensional square matrix");
  const std::size_t d = dimension();
  std::vector<double> logw(d);
  for (std::size_t i = 0; i < d; ++i) logw[i] = std::log(weights_[i]);
  ComplexMatrix coords = to_eigenbasis(a);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      coords(i, j) *= std::polar(1.0, t * (logw[i] - logw[j]));
  return from_eigenbasis(coords);
}

ComplexMatrix ReferenceState::apply_diagonal(const std::vector<Complex>& diag) const {
  return from_eigenbasis(ComplexMatrix::diagonal(diag));
}

ComplexMatrix ReferenceState::sqrt() const {
  std::vector<Complex> diag(dimension());
  for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = std::sqrt(weights_[i]);
  return apply_diagonal(diag);
}

ComplexMatrix ReferenceState::inv_sqrt() const {
  std::vector<Complex> diag(dimension());
  for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = 1.0 / std::sqrt(weights_[i]);
  return apply_diagonal(diag);
}

ComplexMatrix ReferenceState::inverse() const {
  std::vector<Complex> diag(dimension());
  for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = 1.0 / weights_[i];
  return apply_diagonal(diag);
}

ComplexMatrix ReferenceState::log() const {
  std::vector<Complex> diag(dimension());
  for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = std::log(weights_[i]);
  return apply_diagonal(diag);
}

ComplexMatrix ReferenceState::imaginary_power(double t) const {
  std::vector<Complex> diag(dimension());
  for (std::size_t i = 0; i < diag.size(); ++i)
    diag[i] = std::polar(1.0, t * std::log(weights_[i]));
  return apply_diagonal(diag);
}

ComplexMatrix ModularData::transpose(const ComplexMatrix& a_coords) const {
  return a_coords.transpose();
}

ComplexMatrix ModularData::conjugate(const ComplexMatrix& a_coords) const {
  return a_coords.conjugate();
}

ComplexMatrix ModularData::flow(const ComplexMatrix& a_coords, double t) const {
  const std::size_t d = owner_->dimension();
  if (a_coords.rows() != d || a_coords.cols() != d)
    throw Error(ErrorCode::dimension_mismatch, "modular flow dimension mismatch");
  const std::vector<double>& w = owner_->weights();
  ComplexMatrix out = a_coords;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      out(i, j) *= std::polar(1.0, t * (std::log(w[i]) - std::log(w[j])));
  return out;
}

std::pair<ComplexMatrix, ComplexMatrix> ModularData::delta_factors(double t) const {
  const std::size_t d = owner_->dimension();
  const std::vector<double>& w = owner_->weights();
  ComplexMatrix plus(d, d);
  ComplexMatrix minus(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    plus(i, i) = std::polar(1.0, t * std::log(w[i]));
    minus(i, i) = std::polar(1.0, -t * std::log(w[i]));
  }
  return {plus, minus};
}

}  // namespace cjkit
