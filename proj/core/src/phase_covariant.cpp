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

#include "cjkit/phase_covariant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

#include "cjkit/errors.hpp"
#include "cjkit/symmetry.hpp"
#include "cjkit/tolerances.hpp"

namespace cjkit {

namespace {

// Number-basis weights t_m of a diagonal reference state, rejecting
// references with off-diagonal structure.
std::vector<double> diagonal_weights(const ReferenceState& r) {
  const ComplexMatrix rho = r.density();
  const std::size_t d = r.dimension();
  double off = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) off += std::norm(rho(i, j));
  if (std::sqrt(off) > tol::scaled(tol::kInvariantState))
    throw Error(ErrorCode::nondiagonal_reference,
                "reference state is not diagonal in the number basis");
  std::vector<double> t(d);
  for (std::size_t i = 0; i < d; ++i) t[i] = rho(i, i).real();
  return t;
}

std::vector<long> number_weights(std::size_t d) {
  std::vector<long> w(d);
  std::iota(w.begin(), w.end(), 0L);
  return w;
}

}  // namespace

TauFamily::TauFamily(std::size_t d, std::vector<TauEntry> entries)
    : d_(d), entries_(std::move(entries)) {
  if (d_ == 0) throw Error(ErrorCode::invalid_argument, "truncation must be positive");
  std::map<std::tuple<long, std::size_t, std::size_t>, bool> seen;
  for (const TauEntry& e : entries_)
    if (!seen.emplace(std::tuple{e.l, e.j, e.m}, true).second)
      throw Error(ErrorCode::invalid_argument,
                  "duplicate tau entry at (l=" + std::to_string(e.l) +
                      ", j=" + std::to_string(e.j) + ", m=" + std::to_string(e.m) + ")");
  std::vector<double> level_norm(d_, 0.0);
  for (const TauEntry& e : entries_) {
    if (e.m >= d_)
      throw Error(ErrorCode::truncation_violation,
                  "level m=" + std::to_string(e.m) + " outside the truncation");
    const long target = static_cast<long>(e.m) + e.l;
    if (target < 0 || target >= static_cast<long>(d_))
      throw Error(ErrorCode::truncation_violation,
                  "entry (l=" + std::to_string(e.l) + ", m=" + std::to_string(e.m) +
                      ") maps outside the truncation");
    level_norm[e.m] += std::norm(e.value);
  }
  for (std::size_t m = 0; m < d_; ++m)
    if (std::abs(level_norm[m] - 1.0) > tol::scaled(tol::kTauNormalization))
      throw Error(ErrorCode::normalization_violation,
                  "per-level normalization fails at m=" + std::to_string(m) +
                      " (sum " + std::to_string(level_norm[m]) + ")");
}

Channel build_channel(const TauFamily& tf) {
  const std::size_t d = tf.dimension();
  // One Kraus operator per occupied (l, j) pair, in deterministic order.
  std::map<std::pair<long, std::size_t>, ComplexMatrix> kraus_map;
  for (const TauEntry& e : tf.entries()) {
    auto [it, inserted] = kraus_map.try_emplace({e.l, e.j}, ComplexMatrix(d, d));
    const std::size_t target = static_cast<std::size_t>(static_cast<long>(e.m) + e.l);
    it->second(target, e.m) += e.value;
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(kraus_map.size());
  for (auto& [key, k] : kraus_map) {
    if (k.frobenius_norm() == 0.0) continue;  // all-zero tau slots contribute nothing
    kraus.push_back(std::move(k));
  }
  return Channel(d, d, std::move(kraus));
}

SectorBlocks sector_decompose(const ChoiState& s) {
  if (s.d_in() != s.d_out())
    throw Error(ErrorCode::dimension_mismatch,
                "sector decomposition needs equal input and output dimensions");
  diagonal_weights(s.ref());  // nondiagonal-reference gate
  const std::size_t d = s.d_in();
  const ComplexMatrix& mat = s.matrix();

  SectorBlocks out;
  out.d = d;
  double off = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) {
          const long row_shift = static_cast<long>(k) - static_cast<long>(i);
          const long col_shift = static_cast<long>(l) - static_cast<long>(j);
          if (row_shift != col_shift)
            off += std::norm(mat(i * d + k, j * d + l));
        }
  out.off_sector_norm = std::sqrt(off);

  for (long shift = -(static_cast<long>(d) - 1); shift < static_cast<long>(d); ++shift) {
    const std::size_t m0 = out.m_begin(shift);
    const std::size_t m1 = out.m_end(shift);
    const std::size_t width = m1 - m0;
    ComplexMatrix block(width, width);
    for (std::size_t a = 0; a < width; ++a)
      for (std::size_t b = 0; b < width; ++b) {
        const std::size_t ma = m0 + a;
        const std::size_t mb = m0 + b;
        block(a, b) = mat(ma * d + (ma + shift), mb * d + (mb + shift));
      }
    out.blocks.emplace(shift, std::move(block));
  }
  return out;
}

TauFamily extract_tau(const Channel& c, const ReferenceState& r) {
  if (c.d_in() != c.d_out())
    throw Error(ErrorCode::dimension_mismatch,
                "tau extraction needs equal input and output dimensions");
  const std::size_t d = c.d_in();
  const std::vector<double> t = diagonal_weights(r);

  const Representation rep = Representation::phase(number_weights(d));
  const CovarianceReport report = check_covariance(c, rep, rep, r);
  if (!report.covariant)
    throw Error(ErrorCode::not_covariant,
                "channel is not phase covariant (residual " +
                    std::to_string(report.residual) + ")");

  const ChoiState s = choi_from_channel(c, r);
  const SectorBlocks sectors = sector_decompose(s);

  HermitianEig global = herm_eig(s.matrix());
  const double cut = tol::scaled(tol::kClampFloor) * std::max(global.eigenvalues.back(), 0.0);

  std::vector<TauEntry> entries;
  for (const auto& [shift, block] : sectors.blocks) {
    if (block.rows() == 0) continue;
    HermitianEig eig = herm_eig(block);
    const std::size_t width = block.rows();
    const std::size_t m0 = shift < 0 ? static_cast<std::size_t>(-shift) : 0;
    std::size_t j = 0;
    // Descending eigenvalues; the phase convention makes the first nonzero
    // component real positive so repeated extractions agree.
    for (std::size_t idx = width; idx-- > 0;) {
      const double value = eig.eigenvalues[idx];
      if (value <= cut) break;
      const double amp = std::sqrt(value);
      Complex phase(1.0, 0.0);
      double max_abs = 0.0;
      for (std::size_t a = 0; a < width; ++a)
        max_abs = std::max(max_abs, std::abs(eig.eigenvectors(a, idx)));
      for (std::size_t a = 0; a < width; ++a) {
        const Complex z = eig.eigenvectors(a, idx);
        if (std::abs(z) > 1e-8 * max_abs) {
          phase = std::conj(z) / std::abs(z);
          break;
        }
      }
      for (std::size_t a = 0; a < width; ++a) {
        const std::size_t m = m0 + a;
        const Complex tau = amp * phase * eig.eigenvectors(a, idx) / std::sqrt(t[m]);
        if (std::abs(tau) == 0.0) continue;
        entries.push_back({shift, j, m, tau});
      }
      ++j;
    }
  }
  return TauFamily(d, std::move(entries));
}

}  // namespace cjkit
