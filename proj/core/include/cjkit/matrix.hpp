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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cjkit {

using Complex = std::complex<double>;

// Dense complex matrix with row-major storage. The universal numeric carrier
// of the toolkit; every operator (observables, Kraus blocks, Choi matrices,
// group unitaries) is one of these. Entries must be finite; construction from
// external data rejects NaN/Inf.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::span<const Complex> values);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix column(std::span<const Complex> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;  // plain transpose in the standard basis
  ComplexMatrix conjugate() const;
  Complex trace() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(double scalar, ComplexMatrix m);

// Frobenius distance ‖a − b‖_F; dimension mismatch throws.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tolerance);

// Kronecker product, (a⊗b)[(i·rb+k),(j·cb+l)] = a[i,j]·b[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Which tensor factor partial_trace removes.
enum class TraceSide { first, second };

// Partial trace of a square matrix on a d1·d2-dimensional product space,
// first factor index major. tr_second(a⊗b) = tr(b)·a and symmetrically.
ComplexMatrix partial_trace(const ComplexMatrix& m, TraceSide traced,
                            std::size_t d1, std::size_t d2);

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, columns matched to eigenvalues
};

// Hermitian eigendecomposition. The input must be Hermitian up to a relative
// 1e-8 gate and is symmetrized as (a+a†)/2 before decomposition.
HermitianEig herm_eig(const ComplexMatrix& a);

// Spectral matrix functions on Hermitian inputs. sqrt and power clamp
// eigenvalues in [−1e-12·‖a‖_F, 0) to zero; inv_sqrt and log reject
// eigenvalues below 1e-14·‖a‖_F.
ComplexMatrix matrix_sqrt(const ComplexMatrix& a);
ComplexMatrix matrix_inv_sqrt(const ComplexMatrix& a);
ComplexMatrix matrix_log(const ComplexMatrix& a);
ComplexMatrix matrix_power(const ComplexMatrix& a, double p);
// a^{it} = exp(it·log a), a unitary for positive definite a.
ComplexMatrix matrix_imaginary_power(const ComplexMatrix& a, double t);
// exp(i·h) for Hermitian h.
ComplexMatrix matrix_exp_ih(const ComplexMatrix& h);

}  // namespace cjkit
