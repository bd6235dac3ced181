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

#include "cjkit/matrix.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <utility>

#include "cjkit/errors.hpp"
#include "cjkit/tolerances.hpp"

namespace cjkit {

namespace {

using EigenRowMajor =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenRowMajor> map_of(const ComplexMatrix& m) {
  return {m.entries().data(), static_cast<Eigen::Index>(m.rows()),
          static_cast<Eigen::Index>(m.cols())};
}

ComplexMatrix from_eigen(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()),
                    static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::dimension_mismatch,
                "matrix shapes " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                    "x" + std::to_string(b.cols()) + " differ");
}

// Shared spectral-function driver: gate Hermiticity, decompose, map the
// eigenvalues, reassemble in the same eigenbasis.
ComplexMatrix apply_spectral(const ComplexMatrix& a,
                             const std::function<Complex(double)>& f) {
  HermitianEig eig = herm_eig(a);
  const std::size_t n = a.rows();
  ComplexMatrix diag(n, n);
  for (std::size_t k = 0; k < n; ++k) diag(k, k) = f(eig.eigenvalues[k]);
  return eig.eigenvectors * diag * eig.eigenvectors.adjoint();
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw Error(ErrorCode::dimension_mismatch,
                "entry count " + std::to_string(entries_.size()) +
                    " does not match " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  for (const Complex& z : entries_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::invalid_argument, "non-finite matrix entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c)
      throw Error(ErrorCode::dimension_mismatch, "ragged initializer rows");
    std::size_t j = 0;
    for (const Complex& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
  ComplexMatrix m(values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) m(i, 0) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_ * cols_; ++i)
    out.entries_[i] = std::conj(entries_[i]);
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square())
    throw Error(ErrorCode::dimension_mismatch, "trace of non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::dimension_mismatch,
                "product of " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " with " + std::to_string(b.rows()) +
                    "x" + std::to_string(b.cols()));
  ComplexMatrix out(a.rows(), b.cols());
  Eigen::Map<EigenRowMajor> result(out.entries().data(),
                                   static_cast<Eigen::Index>(out.rows()),
                                   static_cast<Eigen::Index>(out.cols()));
  result = map_of(a) * map_of(b);
  return out;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(double scalar, ComplexMatrix m) { return m *= Complex(scalar); }

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sum += std::norm(a.entries()[i] - b.entries()[i]);
  return std::sqrt(sum);
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tolerance) {
  return a.rows() == b.rows() && a.cols() == b.cols() && distance(a, b) <= tolerance;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, TraceSide traced,
                            std::size_t d1, std::size_t d2) {
  if (!m.is_square() || m.rows() != d1 * d2)
    throw Error(ErrorCode::dimension_mismatch,
                "partial trace expects a square matrix of size " +
                    std::to_string(d1 * d2) + ", got " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()));
  if (traced == TraceSide::second) {
    ComplexMatrix out(d1, d1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j) {
        Complex sum = 0.0;
        for (std::size_t k = 0; k < d2; ++k) sum += m(i * d2 + k, j * d2 + k);
        out(i, j) = sum;
      }
    return out;
  }
  ComplexMatrix out(d2, d2);
  for (std::size_t k = 0; k < d2; ++k)
    for (std::size_t l = 0; l < d2; ++l) {
      Complex sum = 0.0;
      for (std::size_t i = 0; i < d1; ++i) sum += m(i * d2 + k, i * d2 + l);
      out(k, l) = sum;
    }
  return out;
}

HermitianEig herm_eig(const ComplexMatrix& a) {
  if (!a.is_square())
    throw Error(ErrorCode::dimension_mismatch, "eigendecomposition of non-square matrix");
  const double norm = a.frobenius_norm();
  const double gate = tol::scaled(tol::kHermitianGate) * std::max(1.0, norm);
  if (distance(a, a.adjoint()) > gate)
    throw Error(ErrorCode::non_hermitian,
                "matrix is not Hermitian within the 1e-8 relative gate");

  Eigen::MatrixXcd sym = map_of(a);
  sym = 0.5 * (sym + sym.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::invalid_argument, "eigendecomposition failed to converge");

  HermitianEig out;
  out.eigenvalues.assign(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  out.eigenvectors = from_eigen(solver.eigenvectors());
  return out;
}

ComplexMatrix matrix_sqrt(const ComplexMatrix& a) {
  const double floor = -tol::scaled(tol::kClampFloor) * a.frobenius_norm();
  return apply_spectral(a, [floor](double x) -> Complex {
    if (x < floor)
      throw Error(ErrorCode::not_psd, "sqrt of matrix with negative eigenvalue " +
                                          std::to_string(x));
    return std::sqrt(std::max(x, 0.0));
  });
}

ComplexMatrix matrix_inv_sqrt(const ComplexMatrix& a) {
  const double floor = tol::scaled(tol::kSingular) * a.frobenius_norm();
  return apply_spectral(a, [floor](double x) -> Complex {
    if (x < floor)
      throw Error(ErrorCode::singular_input,
                  "inv_sqrt of matrix with eigenvalue " + std::to_string(x));
    return 1.0 / std::sqrt(x);
  });
}

ComplexMatrix matrix_log(const ComplexMatrix& a) {
  const double floor = tol::scaled(tol::kSingular) * a.frobenius_norm();
  return apply_spectral(a, [floor](double x) -> Complex {
    if (x < floor)
      throw Error(ErrorCode::singular_input,
                  "log of matrix with eigenvalue " + std::to_string(x));
    return std::log(x);
  });
}

ComplexMatrix matrix_power(const ComplexMatrix& a, double p) {
  if (p >= 0.0) {
    const double floor = -tol::scaled(tol::kClampFloor) * a.frobenius_norm();
    return apply_spectral(a, [floor, p](double x) -> Complex {
      if (x < floor)
        throw Error(ErrorCode::not_psd, "power of matrix with negative eigenvalue " +
                                            std::to_string(x));
      return std::pow(std::max(x, 0.0), p);
    });
  }
  const double floor = tol::scaled(tol::kSingular) * a.frobenius_norm();
  return apply_spectral(a, [floor, p](double x) -> Complex {
    if (x < floor)
      throw Error(ErrorCode::singular_input,
                  "negative power of matrix with eigenvalue " + std::to_string(x));
    return std::pow(x, p);
  });
}

ComplexMatrix matrix_imaginary_power(const ComplexMatrix& a, double t) {
  const double floor = tol::scaled(tol::kSingular) * a.frobenius_norm();
  return apply_spectral(a, [floor, t](double x) -> Complex {
    if (x < floor)
      throw Error(ErrorCode::singular_input,
                  "imaginary power of matrix with eigenvalue " + std::to_string(x));
    return std::polar(1.0, t * std::log(x));
  });
}

ComplexMatrix matrix_exp_ih(const ComplexMatrix& h) {
  return apply_spectral(h, [](double x) { return std::polar(1.0, x); });
}

}  // namespace cjkit
