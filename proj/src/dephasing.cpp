// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#include "superchan/dephasing.hpp"

#include <algorithm>
#include <string>

#include "superchan/error.hpp"

namespace superchan {

namespace {

using Idx = Eigen::Index;

Idx ix(std::size_t v) { return static_cast<Idx>(v); }

}  // namespace

DephasingSuperParams::DephasingSuperParams(std::size_t d, Matrix m_big) : d_(d), m_(std::move(m_big)) {
  if (d_ < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  if (m_.rows() != ix(d_ * d_) || m_.cols() != ix(d_ * d_))
    throw Error(ErrorCode::DimensionMismatch, "M_big must be d^2 x d^2");
  if (!all_finite(m_)) throw Error(ErrorCode::InvalidArgument, "M_big has non-finite entries");
}

Matrix DephasingSuperParams::channel_matrix() const {
  Matrix m(ix(d_), ix(d_));
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) m(ix(i), ix(j)) = M_big(i, 0, j, 0);
  return m;
}

ChoiChannel dephasing_super_apply(const DephasingSuperParams& p, const ChoiChannel& c) {
  if (c.d_in() != p.d() || c.d_out() != p.d())
    throw Error(ErrorCode::DimensionMismatch, "channel dimensions must equal d");
  return {p.d(), p.d(), p.M_big().cwiseProduct(c.matrix())};
}

SuperChoi dephasing_super_choi(const DephasingSuperParams& p) {
  const std::size_t n = p.d() * p.d();
  Matrix m = Matrix::Zero(ix(n * n), ix(n * n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(ix(r * n + r), ix(c * n + c)) = p.M_big()(ix(r), ix(c));
  return {SuperDims{p.d(), p.d(), p.d(), p.d()}, std::move(m)};
}

Report DephasingVerdict::to_report() const {
  Report r("dephasing");
  r.add("psd", psd)
      .add("fiber_consistent", fiber_consistent)
      .add("unit_diagonal", unit_diagonal)
      .add("min_eig", min_eigenvalue)
      .add("fiber_deviation", fiber_deviation)
      .add("diagonal_deviation", diagonal_deviation)
      .add("generic_valid", generic_valid)
      .add("agrees_with_generic", agrees());
  if (!fiber_consistent)
    r.add("witness", "i=" + std::to_string(witness_i) + " j=" + std::to_string(witness_j) +
                         " a=" + std::to_string(witness_a) + " a'=" + std::to_string(witness_a2));
  if (!psd) r.add_violation("min_eig", min_eigenvalue);
  if (!fiber_consistent) r.add_violation("fiber_deviation", fiber_deviation);
  if (!unit_diagonal) r.add_violation("diagonal_deviation", diagonal_deviation);
  if (!agrees()) r.add_violation("generic_disagreement", 1.0);
  return r;
}

DephasingVerdict dephasing_validate(const DephasingSuperParams& p, double tol) {
  const std::size_t d = p.d();
  DephasingVerdict v;
  const PsdReport psd = psd_report(p.M_big(), tol);
  v.psd = psd.psd;
  v.min_eigenvalue = psd.min_eigenvalue;
  double worst = -1.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t a = 1; a < d; ++a) {
        const double dev = std::abs(p.M_big(i, a, j, a) - p.M_big(i, 0, j, 0));
        if (dev > worst) {
          worst = dev;
          v.witness_i = i;
          v.witness_j = j;
          v.witness_a = 0;
          v.witness_a2 = a;
        }
      }
  v.fiber_deviation = std::max(worst, 0.0);
  v.fiber_consistent = v.fiber_deviation <= tol;
  for (std::size_t i = 0; i < d; ++i)
    v.diagonal_deviation = std::max(v.diagonal_deviation, std::abs(p.M_big(i, 0, i, 0) - Complex(1.0)));
  v.unit_diagonal = v.diagonal_deviation <= tol;
  const SuperChoi s = dephasing_super_choi(p);
  v.generic_valid = validate_superchannel(s, tol).valid() && tp_preserving_check(s, tol).passed();
  return v;
}

DephasingSuperParams dephasing_from_realization(std::span<const Matrix> u, std::span<const Matrix> v,
                                                const Vector& psi) {
  const std::size_t d = u.size();
  if (d == 0 || v.size() != d) throw Error(ErrorCode::InvalidArgument, "need d unitaries in both lists");
  const Idx e = psi.size();
  if (e == 0) throw Error(ErrorCode::InvalidArgument, "empty environment state");
  if (std::abs(psi.norm() - 1.0) > 1e-12) throw Error(ErrorCode::InvalidArgument, "psi must be a unit vector");
  auto check_unitary = [e](const Matrix& w, const char* which) {
    if (w.rows() != e || w.cols() != e)
      throw Error(ErrorCode::DimensionMismatch, std::string(which) + " has the wrong environment dimension");
    if (max_abs_diff(w.adjoint() * w, Matrix::Identity(e, e)) > 1e-10)
      throw Error(ErrorCode::InvalidArgument, std::string(which) + " is not unitary");
  };
  for (const Matrix& w : u) check_unitary(w, "U_i");
  for (const Matrix& w : v) check_unitary(w, "V_a");
  // phi_{ia} = V_a U_i psi; M_{ia,jb} = <phi_{jb}|phi_{ia}>.
  const Idx n = ix(d * d);
  Matrix phi(e, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a) phi.col(ix(pair_index(i, a, d))) = v[a] * (u[i] * psi);
  Matrix m = (phi.adjoint() * phi).transpose();
  return {d, std::move(m)};
}

Matrix dephasing_on_dephasing(const DephasingSuperParams& p, const Matrix& m_chan, double tol) {
  const std::size_t d = p.d();
  if (m_chan.rows() != ix(d) || m_chan.cols() != ix(d))
    throw Error(ErrorCode::DimensionMismatch, "covariance matrix must be d x d");
  // Validates PSD and unit diagonal.
  (void)channels::dephasing_channel(m_chan, tol);
  Matrix out(ix(d), ix(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(ix(i), ix(j)) = p.M_big(i, i, j, j) * m_chan(ix(i), ix(j));
  return out;
}

DUSuperParams dephasing_embed_du(const DephasingSuperParams& p) {
  const std::size_t d = p.d();
  const Idx n = ix(d * d);
  RealMatrix a = RealMatrix::Zero(n, n);
  Matrix b = Matrix::Zero(n, n), c = Matrix::Zero(n, n), dd = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t y = 0; y < d; ++y) {
          const Idx r = ix(pair_index(i, x, d)), col = ix(pair_index(j, y, d));
          const Complex m = p.M_big()(r, col);
          if (i == j && x == y) a(r, col) = m.real();
          else if (i == j) b(r, col) = m;
          else if (x == y) c(r, col) = m;
          else dd(r, col) = m;
        }
  return {d, std::move(a), std::move(b), std::move(c), std::move(dd)};
}

DephasingSuperParams dephasing_from_du(const DUSuperParams& p, double tol) {
  const std::size_t d = p.d();
  const Idx n = ix(d * d);
  Matrix m = Matrix::Zero(n, n);
  double stray = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t y = 0; y < d; ++y) {
          const Idx r = ix(pair_index(i, x, d)), col = ix(pair_index(j, y, d));
          if (i == j && x == y) m(r, col) = p.A()(r, col);
          else stray = std::max(stray, std::abs(p.A()(r, col)));
          if (i == j) m(r, col) += p.B()(r, col);
          else stray = std::max(stray, std::abs(p.B()(r, col)));
          if (x == y) m(r, col) += p.C()(r, col);
          else stray = std::max(stray, std::abs(p.C()(r, col)));
          m(r, col) += p.D()(r, col);
        }
  if (stray > tol)
    throw Error(ErrorCode::InvalidArgument,
                "DU parameters are not of dephasing type (stray entry " + format_double(stray) + ")");
  return {d, std::move(m)};
}

DephasingSuperParams dephasing_compose(const DephasingSuperParams& p, const DephasingSuperParams& q) {
  if (p.d() != q.d()) throw Error(ErrorCode::DimensionMismatch, "dephasing_compose: dimensions differ");
  return {p.d(), p.M_big().cwiseProduct(q.M_big())};
}

}  // namespace superchan
