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

#include "cjkit/symmetry.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "cjkit/errors.hpp"
#include "cjkit/rotation.hpp"
#include "cjkit/tolerances.hpp"

namespace cjkit {

namespace {

constexpr double kPi = std::numbers::pi;

void require_unitary(const ComplexMatrix& u, double tolerance) {
  if (!u.is_square())
    throw Error(ErrorCode::dimension_mismatch, "group element is not square");
  if (distance(u.adjoint() * u, ComplexMatrix::identity(u.rows())) > tolerance)
    throw Error(ErrorCode::invalid_argument, "group element is not unitary");
}

void require_spin_algebra(const ComplexMatrix& jx, const ComplexMatrix& jy,
                          const ComplexMatrix& jz) {
  const double scale = std::max(1.0, jz.frobenius_norm());
  const double gate = tol::scaled(tol::kInvariantState) * scale;
  const Complex i(0.0, 1.0);
  if (distance(jx * jy - jy * jx, i * jz) > gate ||
      distance(jy * jz - jz * jy, i * jx) > gate ||
      distance(jz * jx - jx * jz, i * jy) > gate)
    throw Error(ErrorCode::invalid_argument,
                "generators do not satisfy the angular momentum algebra");
}

// Exact Fourier angle count for integer phase weights: sampling
// N = 2·max|gap|+1 uniform angles integrates every mode the pair of weight
// vectors can produce.
std::size_t fourier_angle_count(const std::vector<long>& wa,
                                const std::vector<long>& wb) {
  long gap = 0;
  for (long a : wa)
    for (long b : wb) gap = std::max(gap, std::labs(b - a));
  return static_cast<std::size_t>(2 * gap + 1);
}

std::size_t fourier_angle_count(const std::vector<long>& w) {
  return fourier_angle_count(w, w);
}

// Deterministic SU(2) sample used only for the displaced-vector covariance
// path, where the group cannot be reduced to its generators.
std::vector<std::pair<double, std::array<double, 3>>> spin_sample_parameters() {
  const double s3 = 1.0 / std::sqrt(3.0);
  const double s2 = 1.0 / std::sqrt(2.0);
  return {
      {0.7, {1.0, 0.0, 0.0}},  {1.9, {1.0, 0.0, 0.0}},  {0.7, {0.0, 1.0, 0.0}},
      {1.9, {0.0, 1.0, 0.0}},  {0.7, {0.0, 0.0, 1.0}},  {1.9, {0.0, 0.0, 1.0}},
      {1.3, {s3, s3, s3}},     {2.6, {s3, s3, s3}},     {0.9, {s2, 0.0, s2}},
      {2.2, {0.0, s2, -s2}},   {kPi / 2.0, {s2, -s2, 0.0}}, {2.9, {s3, -s3, s3}},
  };
}

ComplexMatrix exp_generator(const ComplexMatrix& jx, const ComplexMatrix& jy,
                            const ComplexMatrix& jz, double theta,
                            const std::array<double, 3>& axis) {
  ComplexMatrix h = axis[0] * jx + axis[1] * jy + axis[2] * jz;
  return matrix_exp_ih(Complex(-theta) * h);
}

// Row-major vec superoperator of X ↦ [g, X].
ComplexMatrix commutator_superoperator(const ComplexMatrix& g) {
  const ComplexMatrix id = ComplexMatrix::identity(g.rows());
  return kron(g, id) - kron(id, g.transpose());
}

// Orthogonal projection of vec(s) onto the joint nullspace of the stacked
// commutator superoperators; equals the Haar twirl for a connected group.
ComplexMatrix project_to_commutant(const ComplexMatrix& s,
                                   const std::vector<ComplexMatrix>& gens) {
  const std::size_t dim = s.rows();
  const std::size_t n2 = dim * dim;
  Eigen::MatrixXcd stacked(gens.size() * n2, n2);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const ComplexMatrix l = commutator_superoperator(gens[k]);
    for (std::size_t p = 0; p < n2; ++p)
      for (std::size_t q = 0; q < n2; ++q)
        stacked(static_cast<Eigen::Index>(k * n2 + p), static_cast<Eigen::Index>(q)) =
            l(p, q);
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  const double cut = tol::scaled(tol::kNullspaceCut) * (sigma.size() > 0 ? sigma(0) : 0.0);
  Eigen::VectorXcd vec_s(n2);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      vec_s(static_cast<Eigen::Index>(i * dim + j)) = s(i, j);
  Eigen::VectorXcd projected = Eigen::VectorXcd::Zero(n2);
  for (Eigen::Index col = 0; col < svd.matrixV().cols(); ++col) {
    if (col < sigma.size() && sigma(col) > cut) continue;
    const Eigen::VectorXcd v = svd.matrixV().col(col);
    projected += v * v.dot(vec_s);
  }
  ComplexMatrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      out(i, j) = projected(static_cast<Eigen::Index>(i * dim + j));
  // The commutant is *-closed, so the projection preserves Hermiticity up to
  // rounding; symmetrize to keep downstream PSD gates honest.
  return 0.5 * (out + out.adjoint());
}

}  // namespace

Representation Representation::finite(std::vector<ComplexMatrix> elements) {
  if (elements.empty())
    throw Error(ErrorCode::invalid_argument, "finite representation needs elements");
  const std::size_t d = elements.front().rows();
  const double gate = tol::scaled(tol::kInvariantState);
  bool has_identity = false;
  for (const ComplexMatrix& u : elements) {
    if (u.rows() != d || u.cols() != d)
      throw Error(ErrorCode::dimension_mismatch, "group elements differ in dimension");
    require_unitary(u, gate);
    if (distance(u, ComplexMatrix::identity(d)) <= gate) has_identity = true;
  }
  if (!has_identity)
    throw Error(ErrorCode::invalid_argument, "element list does not contain the identity");
  // Closure under product; tolerances widen slightly since products of
  // near-unitaries accumulate error.
  for (const ComplexMatrix& u : elements)
    for (const ComplexMatrix& v : elements) {
      const ComplexMatrix uv = u * v;
      double best = 1e300;
      for (const ComplexMatrix& w : elements) best = std::min(best, distance(uv, w));
      if (best > 1e-8 * std::max(1.0, uv.frobenius_norm()))
        throw Error(ErrorCode::invalid_argument,
                    "element list is not closed under product");
    }
  Representation rep(Kind::finite, d);
  rep.elements_ = std::move(elements);
  return rep;
}

Representation Representation::phase(std::vector<long> weights) {
  if (weights.empty())
    throw Error(ErrorCode::invalid_argument, "phase representation needs weights");
  Representation rep(Kind::phase, weights.size());
  rep.weights_ = std::move(weights);
  return rep;
}

Representation Representation::spin(double j) {
  SpinRep sr = spin_rep(j);
  return spin_from_generators(std::move(sr.jx), std::move(sr.jy), std::move(sr.jz));
}

Representation Representation::spin_from_generators(ComplexMatrix jx, ComplexMatrix jy,
                                                    ComplexMatrix jz) {
  const std::size_t d = jz.rows();
  if (jx.rows() != d || jx.cols() != d || jy.rows() != d || jy.cols() != d ||
      !jz.is_square())
    throw Error(ErrorCode::dimension_mismatch, "generator dimensions differ");
  require_spin_algebra(jx, jy, jz);
  Representation rep(Kind::spin, d);
  rep.generators_ = {std::move(jx), std::move(jy), std::move(jz)};
  return rep;
}

const std::vector<ComplexMatrix>& Representation::elements() const {
  if (kind_ != Kind::finite)
    throw Error(ErrorCode::invalid_argument, "not a finite representation");
  return elements_;
}

const std::vector<long>& Representation::weights() const {
  if (kind_ != Kind::phase)
    throw Error(ErrorCode::invalid_argument, "not a phase representation");
  return weights_;
}

const ComplexMatrix& Representation::jx() const {
  if (kind_ != Kind::spin)
    throw Error(ErrorCode::invalid_argument, "not a spin representation");
  return generators_[0];
}

const ComplexMatrix& Representation::jy() const {
  if (kind_ != Kind::spin)
    throw Error(ErrorCode::invalid_argument, "not a spin representation");
  return generators_[1];
}

const ComplexMatrix& Representation::jz() const {
  if (kind_ != Kind::spin)
    throw Error(ErrorCode::invalid_argument, "not a spin representation");
  return generators_[2];
}

ComplexMatrix Representation::phase_unitary(double theta) const {
  const std::vector<long>& w = weights();
  ComplexMatrix u(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    u(k, k) = std::polar(1.0, static_cast<double>(w[k]) * theta);
  return u;
}

Representation conjugate_rep(const Representation& rep, const ReferenceState& r) {
  if (rep.dim() != r.dimension())
    throw Error(ErrorCode::dimension_mismatch,
                "representation dimension does not match the reference state");
  switch (rep.kind()) {
    case Representation::Kind::finite: {
      std::vector<ComplexMatrix> conjugated;
      conjugated.reserve(rep.elements().size());
      for (const ComplexMatrix& u : rep.elements())
        conjugated.push_back(r.conjugate_in_basis(u));
      return Representation::finite(std::move(conjugated));
    }
    case Representation::Kind::phase: {
      std::vector<long> negated;
      negated.reserve(rep.weights().size());
      for (long w : rep.weights()) negated.push_back(-w);
      return Representation::phase(std::move(negated));
    }
    case Representation::Kind::spin: {
      return Representation::spin_from_generators(
          Complex(-1.0) * r.conjugate_in_basis(rep.jx()),
          Complex(-1.0) * r.conjugate_in_basis(rep.jy()),
          Complex(-1.0) * r.conjugate_in_basis(rep.jz()));
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown representation kind");
}

namespace {

bool reference_is_invariant(const ReferenceState& r, const Representation& rep,
                            double* residual_out = nullptr) {
  const ComplexMatrix rho = r.density();
  double residual = 0.0;
  switch (rep.kind()) {
    case Representation::Kind::finite:
      for (const ComplexMatrix& u : rep.elements())
        residual = std::max(residual, distance(u * rho * u.adjoint(), rho));
      break;
    case Representation::Kind::phase: {
      const std::size_t n = fourier_angle_count(rep.weights());
      for (std::size_t k = 0; k < n; ++k) {
        const ComplexMatrix u = rep.phase_unitary(2.0 * kPi * k / n);
        residual = std::max(residual, distance(u * rho * u.adjoint(), rho));
      }
      break;
    }
    case Representation::Kind::spin:
      for (const ComplexMatrix* j : {&rep.jx(), &rep.jy(), &rep.jz()})
        residual = std::max(residual, distance(*j * rho, rho * *j));
      break;
  }
  if (residual_out != nullptr) *residual_out = residual;
  return residual <= tol::scaled(tol::kInvariantState);
}

// Unitaries of the combined action conj(U_A) ⊗ U_B over the deciding element
// set, plus the matching input-side unitaries (needed for displaced vectors).
struct ElementSet {
  std::vector<ComplexMatrix> input;     // U_A(g), standard coordinates
  std::vector<ComplexMatrix> output;    // U_B(g)
};

ElementSet covariance_elements(const Representation& rep_a, const Representation& rep_b,
                               bool general_path) {
  ElementSet set;
  switch (rep_a.kind()) {
    case Representation::Kind::finite: {
      set.input = rep_a.elements();
      set.output = rep_b.elements();
      if (set.input.size() != set.output.size())
        throw Error(ErrorCode::invalid_argument,
                    "finite representations must pair element by element");
      break;
    }
    case Representation::Kind::phase: {
      const std::size_t n = fourier_angle_count(rep_a.weights(), rep_b.weights());
      for (std::size_t k = 0; k < n; ++k) {
        const double theta = 2.0 * kPi * k / n;
        set.input.push_back(rep_a.phase_unitary(theta));
        set.output.push_back(rep_b.phase_unitary(theta));
      }
      break;
    }
    case Representation::Kind::spin: {
      if (!general_path) break;  // generator test needs no elements
      for (const auto& [theta, axis] : spin_sample_parameters()) {
        set.input.push_back(exp_generator(rep_a.jx(), rep_a.jy(), rep_a.jz(), theta, axis));
        set.output.push_back(exp_generator(rep_b.jx(), rep_b.jy(), rep_b.jz(), theta, axis));
      }
      break;
    }
  }
  return set;
}

}  // namespace

CovarianceReport check_covariance(const Channel& c, const Representation& rep_a,
                                  const Representation& rep_b,
                                  const ReferenceState& r) {
  if (rep_a.dim() != c.d_in() || r.dimension() != c.d_in())
    throw Error(ErrorCode::dimension_mismatch,
                "input representation or reference does not match channel input");
  if (rep_b.dim() != c.d_out())
    throw Error(ErrorCode::dimension_mismatch,
                "output representation does not match channel output");
  if (rep_a.kind() != rep_b.kind())
    throw Error(ErrorCode::invalid_argument,
                "covariance needs one group: representation kinds must match");

  const ComplexMatrix s = choi_from_channel(c, r).matrix();
  CovarianceReport report;

  if (reference_is_invariant(r, rep_a)) {
    if (rep_a.kind() == Representation::Kind::spin) {
      // Lie-algebra level decision: [(-conj J^A_k) ⊗ 1 + 1 ⊗ J^B_k, S] = 0.
      const ComplexMatrix id_in = ComplexMatrix::identity(c.d_in());
      const ComplexMatrix id_out = ComplexMatrix::identity(c.d_out());
      const Representation conj_a = conjugate_rep(rep_a, r);
      const std::array<const ComplexMatrix*, 3> ja = {&conj_a.jx(), &conj_a.jy(),
                                                      &conj_a.jz()};
      const std::array<const ComplexMatrix*, 3> jb = {&rep_b.jx(), &rep_b.jy(),
                                                      &rep_b.jz()};
      for (std::size_t k = 0; k < 3; ++k) {
        const ComplexMatrix g = kron(*ja[k], id_out) + kron(id_in, *jb[k]);
        report.residual = std::max(report.residual, distance(g * s, s * g));
      }
      report.elements_tested = 3;
    } else {
      ElementSet set = covariance_elements(rep_a, rep_b, false);
      for (std::size_t g = 0; g < set.input.size(); ++g) {
        const ComplexMatrix m = kron(r.conjugate_in_basis(set.input[g]), set.output[g]);
        report.residual = std::max(report.residual, distance(m * s, s * m));
      }
      report.elements_tested = set.input.size();
    }
  } else {
    // Displaced-vector criterion: (conjU ⊗ V)† S (conjU ⊗ V) must equal the
    // Choi matrix rebuilt at Ω' = (U ⊗ conjU)† Ω.
    const ComplexMatrix omega = r.gns_vector();
    ElementSet set = covariance_elements(rep_a, rep_b, true);
    for (std::size_t g = 0; g < set.input.size(); ++g) {
      const ComplexMatrix ubar = r.conjugate_in_basis(set.input[g]);
      const ComplexMatrix m = kron(ubar, set.output[g]);
      const ComplexMatrix lhs = m.adjoint() * s * m;
      const ComplexMatrix displaced = kron(set.input[g], ubar).adjoint() * omega;
      const ComplexMatrix rhs = choi_from_vector(c, displaced);
      report.residual = std::max(report.residual, distance(lhs, rhs));
    }
    report.elements_tested = set.input.size();
  }

  report.covariant = report.residual <= tol::scaled(tol::kCovariant);
  return report;
}

ChoiState twirl(const ChoiState& s, const Representation& rep_a,
                const Representation& rep_b) {
  const ReferenceState& r = s.ref();
  if (rep_a.dim() != s.d_in() || rep_b.dim() != s.d_out())
    throw Error(ErrorCode::dimension_mismatch,
                "representation dimensions do not match the Choi state");
  if (rep_a.kind() != rep_b.kind())
    throw Error(ErrorCode::invalid_argument,
                "twirl needs one group: representation kinds must match");
  double invariance_residual = 0.0;
  if (!reference_is_invariant(r, rep_a, &invariance_residual))
    throw Error(ErrorCode::non_invariant_reference,
                "reference state moves under the input representation (residual " +
                    std::to_string(invariance_residual) + ")");

  if (rep_a.kind() == Representation::Kind::spin) {
    const Representation conj_a = conjugate_rep(rep_a, r);
    const ComplexMatrix id_in = ComplexMatrix::identity(s.d_in());
    const ComplexMatrix id_out = ComplexMatrix::identity(s.d_out());
    std::vector<ComplexMatrix> gens;
    gens.push_back(kron(conj_a.jx(), id_out) + kron(id_in, rep_b.jx()));
    gens.push_back(kron(conj_a.jy(), id_out) + kron(id_in, rep_b.jy()));
    gens.push_back(kron(conj_a.jz(), id_out) + kron(id_in, rep_b.jz()));
    return with_matrix(s, project_to_commutant(s.matrix(), gens));
  }

  ElementSet set = covariance_elements(rep_a, rep_b, false);
  ComplexMatrix sum(s.matrix().rows(), s.matrix().cols());
  for (std::size_t g = 0; g < set.input.size(); ++g) {
    const ComplexMatrix m = kron(r.conjugate_in_basis(set.input[g]), set.output[g]);
    sum += m.adjoint() * s.matrix() * m;
  }
  const double inv_count = 1.0 / static_cast<double>(set.input.size());
  return with_matrix(s, inv_count * std::move(sum));
}

Channel twirl(const Channel& c, const Representation& rep_a,
              const Representation& rep_b, const ReferenceState& r) {
  return channel_from_choi(twirl(choi_from_channel(c, r), rep_a, rep_b));
}

ReferenceState invariantize_state(const DensityMatrix& rho, const Representation& rep) {
  if (rep.dim() != rho.dimension())
    throw Error(ErrorCode::dimension_mismatch,
                "representation dimension does not match the state");
  const std::size_t d = rho.dimension();
  ComplexMatrix averaged(d, d);
  switch (rep.kind()) {
    case Representation::Kind::finite: {
      for (const ComplexMatrix& u : rep.elements())
        averaged += u.adjoint() * rho.matrix() * u;
      averaged *= Complex(1.0 / static_cast<double>(rep.elements().size()));
      break;
    }
    case Representation::Kind::phase: {
      const std::size_t n = fourier_angle_count(rep.weights());
      for (std::size_t k = 0; k < n; ++k) {
        const ComplexMatrix u = rep.phase_unitary(2.0 * kPi * k / n);
        averaged += u.adjoint() * rho.matrix() * u;
      }
      averaged *= Complex(1.0 / static_cast<double>(n));
      break;
    }
    case Representation::Kind::spin: {
      averaged = project_to_commutant(rho.matrix(), {rep.jx(), rep.jy(), rep.jz()});
      break;
    }
  }
  averaged = 0.5 * (averaged + averaged.adjoint());
  return make_reference(DensityMatrix(std::move(averaged)));
}

CovarianceReport check_modular_covariance(const Channel& c, const ReferenceState& r,
                                          const ComplexMatrix& h) {
  if (r.dimension() != c.d_in())
    throw Error(ErrorCode::dimension_mismatch,
                "reference state dimension does not match channel input");
  if (h.rows() != c.d_out() || h.cols() != c.d_out())
    throw Error(ErrorCode::dimension_mismatch,
                "generator must act on the channel output space");
  if (distance(h, h.adjoint()) >
      tol::scaled(tol::kHermitianGate) * std::max(1.0, h.frobenius_norm()))
    throw Error(ErrorCode::non_hermitian, "modular generator is not Hermitian");

  const ComplexMatrix s = choi_from_channel(c, r).matrix();
  const ComplexMatrix id_in = ComplexMatrix::identity(c.d_in());
  const ComplexMatrix id_out = ComplexMatrix::identity(c.d_out());

  // h is the output-side modular Hamiltonian: the output evolves by
  // β_t = Ad(e^{-ith}), so h = -log σ0 pairs the flow of ρ0 with the flow of
  // σ0. The combined unitary is ρ0^{-it} ⊗ e^{-ith} with generator
  // (-log ρ0) ⊗ 1 - 1 ⊗ h.
  CovarianceReport report;
  const ComplexMatrix generator =
      kron(Complex(-1.0) * r.log(), id_out) - kron(id_in, h);
  report.residual = distance(generator * s, s * generator);
  report.elements_tested = 1;

  for (double t : {0.1, 1.0, kPi}) {
    const ComplexMatrix m =
        kron(r.imaginary_power(-t), matrix_exp_ih(Complex(-t) * h));
    report.residual = std::max(report.residual, distance(m * s, s * m));
    ++report.elements_tested;
  }
  report.covariant = report.residual <= tol::scaled(tol::kCovariant);
  return report;
}

CovarianceReport check_modular_covariance(const Channel& c, const ReferenceState& r,
                                          const ReferenceState& sigma0) {
  if (r.dimension() != c.d_in() || sigma0.dimension() != c.d_out())
    throw Error(ErrorCode::dimension_mismatch,
                "modular pair dimensions do not match the channel");
  const ComplexMatrix s = choi_from_channel(c, r).matrix();
  const ComplexMatrix m = kron(r.inverse(), sigma0.density());
  CovarianceReport report;
  report.residual = distance(m * s, s * m);
  report.elements_tested = 1;
  report.covariant = report.residual <= tol::scaled(tol::kCovariant);
  return report;
}

}  // namespace cjkit
