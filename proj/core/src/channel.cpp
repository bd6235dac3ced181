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

#include "cjkit/channel.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "cjkit/errors.hpp"
#include "cjkit/tolerances.hpp"

namespace cjkit {

Channel::Channel(std::size_t d_in, std::size_t d_out, std::vector<ComplexMatrix> kraus)
    : d_in_(d_in), d_out_(d_out), kraus_(std::move(kraus)) {
  if (d_in_ == 0 || d_out_ == 0)
    throw Error(ErrorCode::dimension_mismatch, "channel dimensions must be positive");
  if (kraus_.empty())
    throw Error(ErrorCode::invalid_argument, "channel needs at least one Kraus operator");
  for (const ComplexMatrix& k : kraus_)
    if (k.rows() != d_out_ || k.cols() != d_in_)
      throw Error(ErrorCode::dimension_mismatch,
                  "Kraus operator is " + std::to_string(k.rows()) + "x" +
                      std::to_string(k.cols()) + ", expected " + std::to_string(d_out_) +
                      "x" + std::to_string(d_in_));
}

Channel Channel::identity(std::size_t d) {
  return Channel(d, d, {ComplexMatrix::identity(d)});
}

Channel Channel::from_unitary(const ComplexMatrix& u) {
  if (!u.is_square())
    throw Error(ErrorCode::dimension_mismatch, "unitary channel needs a square matrix");
  return Channel(u.rows(), u.rows(), {u});
}

Channel Channel::depolarizing(std::size_t d) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix k(d, d);
      k(i, j) = amp;
      kraus.push_back(std::move(k));
    }
  return Channel(d, d, std::move(kraus));
}

Channel Channel::amplitude_damping(double gamma) {
  if (gamma < 0.0 || gamma > 1.0)
    throw Error(ErrorCode::invalid_argument, "damping parameter must lie in [0,1]");
  ComplexMatrix k0(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  ComplexMatrix k1(2, 2);
  k1(0, 1) = std::sqrt(gamma);
  return Channel(2, 2, {k0, k1});
}

ComplexMatrix Channel::apply_heisenberg(const ComplexMatrix& b) const {
  if (b.rows() != d_out_ || b.cols() != d_out_)
    throw Error(ErrorCode::dimension_mismatch,
                "Heisenberg input must be " + std::to_string(d_out_) + "x" +
                    std::to_string(d_out_));
  ComplexMatrix out(d_in_, d_in_);
  for (const ComplexMatrix& k : kraus_) out += k.adjoint() * b * k;
  return out;
}

ComplexMatrix Channel::apply_schrodinger(const ComplexMatrix& t) const {
  if (t.rows() != d_in_ || t.cols() != d_in_)
    throw Error(ErrorCode::dimension_mismatch,
                "Schrodinger input must be " + std::to_string(d_in_) + "x" +
                    std::to_string(d_in_));
  ComplexMatrix out(d_out_, d_out_);
  for (const ComplexMatrix& k : kraus_) out += k * t * k.adjoint();
  return out;
}

UnitalityReport Channel::is_unital() const {
  ComplexMatrix sum(d_in_, d_in_);
  for (const ComplexMatrix& k : kraus_) sum += k.adjoint() * k;
  const double residual = distance(sum, ComplexMatrix::identity(d_in_));
  return {residual <= tol::scaled(tol::kUnital), residual};
}

ComplexMatrix Channel::kraus_gram(const ReferenceState& r) const {
  if (r.dimension() != d_in_)
    throw Error(ErrorCode::dimension_mismatch,
                "reference state dimension does not match channel input");
  const ComplexMatrix rho = r.density();
  const std::size_t n = kraus_.size();
  ComplexMatrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      gram(a, b) = (rho * kraus_[a].adjoint() * kraus_[b]).trace();
  return gram;
}

bool Channel::is_minimal_kraus() const {
  // Gram with the maximally mixed state: G[a,b] = tr[K_a† K_b]/d.
  const std::size_t n = kraus_.size();
  ComplexMatrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Complex sum = 0.0;
      for (std::size_t i = 0; i < d_out_; ++i)
        for (std::size_t j = 0; j < d_in_; ++j)
          sum += std::conj(kraus_[a](i, j)) * kraus_[b](i, j);
      gram(a, b) = sum / static_cast<double>(d_in_);
    }
  HermitianEig eig = herm_eig(gram);
  const double largest = eig.eigenvalues.back();
  if (largest <= 0.0) return false;
  return eig.eigenvalues.front() > tol::scaled(tol::kKrausIndependence) * largest;
}

Channel compose(const Channel& outer, const Channel& inner) {
  if (inner.d_out() != outer.d_in())
    throw Error(ErrorCode::dimension_mismatch,
                "compose: inner output " + std::to_string(inner.d_out()) +
                    " does not match outer input " + std::to_string(outer.d_in()));
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(outer.kraus().size() * inner.kraus().size());
  for (const ComplexMatrix& ko : outer.kraus())
    for (const ComplexMatrix& ki : inner.kraus()) kraus.push_back(ko * ki);
  return Channel(inner.d_in(), outer.d_out(), std::move(kraus));
}

}  // namespace cjkit
