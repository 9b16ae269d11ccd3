// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#include "superchan/pauli.hpp"

#include <cmath>
#include <string>

#include "superchan/du_superchannel.hpp"
#include "superchan/error.hpp"

namespace superchan {

namespace {

// vec(W) = sum_k |k> (x) W|k>
Vector vec(const Matrix& w) {
  const Eigen::Index n = w.cols();
  Vector v(n * w.rows());
  for (Eigen::Index k = 0; k < n; ++k) v.segment(k * w.rows(), w.rows()) = w.col(k);
  return v;
}

const std::array<Vector, 16>& pauli_string_vectors() {
  static const std::array<Vector, 16> vs = [] {
    std::array<Vector, 16> out;
    const auto& s = pauli_matrices();
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) out[static_cast<std::size_t>(mu * 4 + nu)] = vec(kron(s[mu], s[nu]));
    return out;
  }();
  return vs;
}

void check_prob4(const Prob4& q) {
  double sum = 0.0;
  for (double x : q) {
    if (!std::isfinite(x) || x < -1e-12)
      throw Error(ErrorCode::OutOfRange, "probability vector has a negative or non-finite entry");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw Error(ErrorCode::OutOfRange, "probability vector sums to " + format_double(sum));
}

}  // namespace

const std::array<Matrix, 4>& pauli_matrices() {
  static const std::array<Matrix, 4> s = [] {
    std::array<Matrix, 4> out;
    out[0] = Matrix::Identity(2, 2);
    out[1] = Matrix::Zero(2, 2);
    out[1](0, 1) = out[1](1, 0) = 1.0;
    out[2] = Matrix::Zero(2, 2);
    out[2](0, 1) = Complex(0.0, -1.0);
    out[2](1, 0) = Complex(0.0, 1.0);
    out[3] = Matrix::Zero(2, 2);
    out[3](0, 0) = 1.0;
    out[3](1, 1) = -1.0;
    return out;
  }();
  return s;
}

Vector bell_vector(int alpha) {
  if (alpha < 0 || alpha > 3) throw Error(ErrorCode::InvalidArgument, "Bell index must be 0..3");
  return vec(pauli_matrices()[static_cast<std::size_t>(alpha)]);
}

PauliSuperParams::PauliSuperParams(const Eigen::Matrix4d& pi) : pi_(pi) {
  if (!pi_.allFinite()) throw Error(ErrorCode::InvalidArgument, "pi has non-finite entries");
  if (pi_.minCoeff() < -1e-12) throw Error(ErrorCode::InvalidArgument, "pi has a negative entry");
  if (std::abs(pi_.sum() - 1.0) > 1e-12)
    throw Error(ErrorCode::InvalidArgument, "pi sums to " + format_double(pi_.sum()) + ", not 1");
}

SuperChoi pauli_super_choi(const PauliSuperParams& p) {
  Matrix c = Matrix::Zero(16, 16);
  const auto& vs = pauli_string_vectors();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const double w = p.pi(mu, nu);
      if (w == 0.0) continue;
      const Vector& v = vs[static_cast<std::size_t>(mu * 4 + nu)];
      c.noalias() += w * (v * v.adjoint());
    }
  return {SuperDims{2, 2, 2, 2}, std::move(c)};
}

PauliSuperParams pauli_from_choi(const SuperChoi& s, double tol) {
  if (s.dims() != SuperDims{2, 2, 2, 2}) throw Error(ErrorCode::DimensionMismatch, "Pauli superchannels are qubit-only");
  Eigen::Matrix4d pi;
  const auto& vs = pauli_string_vectors();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Vector& v = vs[static_cast<std::size_t>(mu * 4 + nu)];
      pi(mu, nu) = (v.adjoint() * s.matrix() * v)(0, 0).real() / 16.0;
    }
  PauliSuperParams p(pi);
  const double residual = max_abs_diff(pauli_super_choi(p).matrix(), s.matrix());
  if (residual > tol)
    throw Error(ErrorCode::InvalidArgument, "Choi matrix is not a Pauli superchannel (residual " +
                                                format_double(residual) + ")");
  return p;
}

Report PauliDUVerdict::to_report() const {
  Report r("pauli-du");
  r.add("du_covariant", equalities_hold)
      .add("max_violation", max_violation)
      .add("extraction_succeeds", extraction_succeeds)
      .add("extraction_residual", extraction_residual)
      .add("agrees", agrees());
  if (!agrees()) r.add_violation("extraction_disagreement", extraction_residual);
  return r;
}

PauliDUVerdict pauli_du_check(const PauliSuperParams& p, double tol) {
  PauliDUVerdict v;
  for (int a = 0; a < 4; ++a) {
    v.max_violation = std::max(v.max_violation, std::abs(p.pi(a, 1) - p.pi(a, 2)));
    v.max_violation = std::max(v.max_violation, std::abs(p.pi(1, a) - p.pi(2, a)));
  }
  v.equalities_hold = v.max_violation <= tol;
  try {
    (void)du_from_choi(pauli_super_choi(p), tol);
    v.extraction_succeeds = true;
  } catch (const NotCovariantError& e) {
    v.extraction_succeeds = false;
    v.extraction_residual = e.residual();
  }
  return v;
}

Eigen::Matrix4d pauli_induced_bistochastic(const PauliSuperParams& p) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          if (pauli_xor(mu, nu) == pauli_xor(a, b)) m(a, b) += p.pi(mu, nu);
  return m;
}

Prob4 pauli_apply(const PauliSuperParams& p, const Prob4& q_in) {
  check_prob4(q_in);
  const Eigen::Matrix4d m = pauli_induced_bistochastic(p);
  Prob4 out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out[static_cast<std::size_t>(a)] += m(a, b) * q_in[static_cast<std::size_t>(b)];
  return out;
}

Prob4 bell_diagonal_readoff(const ChoiChannel& ch) {
  if (ch.d_in() != 2 || ch.d_out() != 2) throw Error(ErrorCode::DimensionMismatch, "Bell read-off needs a qubit channel");
  Prob4 out{};
  for (int a = 0; a < 4; ++a) {
    const Vector v = bell_vector(a);
    out[static_cast<std::size_t>(a)] = (v.adjoint() * ch.matrix() * v)(0, 0).real() / 4.0;
  }
  return out;
}

ChoiChannel pauli_marginal_channel(const PauliSuperParams& p) {
  Prob4 marg{};
  for (int mu = 0; mu < 4; ++mu) marg[static_cast<std::size_t>(mu)] = p.pi().row(mu).sum();
  return channels::pauli_channel(marg);
}

PauliSuperParams pauli_compose(const PauliSuperParams& p2, const PauliSuperParams& p1) {
  // Pauli strings multiply by label XOR on each factor.
  Eigen::Matrix4d pi = Eigen::Matrix4d::Zero();
  for (int m1 = 0; m1 < 4; ++m1)
    for (int n1 = 0; n1 < 4; ++n1)
      for (int m2 = 0; m2 < 4; ++m2)
        for (int n2 = 0; n2 < 4; ++n2) pi(m1 ^ m2, n1 ^ n2) += p1.pi(m1, n1) * p2.pi(m2, n2);
  return PauliSuperParams(pi);
}

}  // namespace superchan
