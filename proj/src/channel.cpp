// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#include "superchan/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "superchan/error.hpp"

namespace superchan {

namespace {

using Idx = Eigen::Index;

Idx ix(std::size_t v) { return static_cast<Idx>(v); }

constexpr double kRangeTol = 1e-12;

void require_range(double v, double lo, double hi, const char* what) {
  if (!std::isfinite(v) || v < lo - kRangeTol || v > hi + kRangeTol)
    throw Error(ErrorCode::OutOfRange, std::string(what) + " = " + format_double(v) + " outside [" +
                                           format_double(lo) + ", " + format_double(hi) + "]");
}

void require_dim(std::size_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
}

double herm_tol(const Matrix& m) { return 1e-12 * std::max(1.0, max_abs(m)); }

void check_offdiag_hermitian(const Matrix& m, std::size_t d, const char* name) {
  if (static_cast<std::size_t>(m.rows()) != d || static_cast<std::size_t>(m.cols()) != d)
    throw Error(ErrorCode::DimensionMismatch, std::string(name) + " must be d x d");
  if (!all_finite(m)) throw Error(ErrorCode::InvalidArgument, std::string(name) + " has non-finite entries");
  for (std::size_t i = 0; i < d; ++i)
    if (m(ix(i), ix(i)) != Complex(0.0))
      throw Error(ErrorCode::InvalidArgument, std::string(name) + " must vanish on the diagonal");
  if (hermiticity_deviation(m) > herm_tol(m))
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " must satisfy X_ij = conj(X_ji)");
}

void check_a(const RealMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "A must be square");
  if (!a.allFinite()) throw Error(ErrorCode::InvalidArgument, "A has non-finite entries");
}

}  // namespace

Matrix choi_apply(const Matrix& choi, std::size_t d_in, std::size_t d_out, const Matrix& x) {
  if (static_cast<std::size_t>(choi.rows()) != d_in * d_out || choi.rows() != choi.cols())
    throw Error(ErrorCode::DimensionMismatch, "Choi side does not match d_in*d_out");
  if (static_cast<std::size_t>(x.rows()) != d_in || static_cast<std::size_t>(x.cols()) != d_in)
    throw Error(ErrorCode::DimensionMismatch, "input side " + std::to_string(x.rows()) +
                                                  " does not match d_in " + std::to_string(d_in));
  const Idx o = ix(d_out);
  Matrix y = Matrix::Zero(o, o);
  for (Idx j = 0; j < ix(d_in); ++j)
    for (Idx i = 0; i < ix(d_in); ++i) {
      const Complex xij = x(i, j);
      if (xij != Complex(0.0)) y.noalias() += xij * choi.block(i * o, j * o, o, o);
    }
  return y;
}

Matrix choi_compose(const Matrix& f, std::size_t f_out, const Matrix& g, std::size_t g_in,
                    std::size_t mid) {
  if (static_cast<std::size_t>(g.rows()) != g_in * mid || static_cast<std::size_t>(f.rows()) != mid * f_out)
    throw Error(ErrorCode::DimensionMismatch, "composition: intermediate dimensions disagree");
  const Idx o = ix(f_out), m = ix(mid);
  Matrix out = Matrix::Zero(ix(g_in) * o, ix(g_in) * o);
  for (Idx l = 0; l < ix(g_in); ++l)
    for (Idx k = 0; k < ix(g_in); ++k)
      out.block(k * o, l * o, o, o) = choi_apply(f, mid, f_out, g.block(k * m, l * m, m, m));
  return out;
}

ChoiChannel::ChoiChannel(std::size_t d_in, std::size_t d_out, Matrix choi)
    : d_in_(d_in), d_out_(d_out), choi_(Dims{d_in, d_out}, std::move(choi)) {}

ChoiChannel::ChoiChannel(MultipartiteOperator choi)
    : d_in_(0), d_out_(0), choi_(std::move(choi)) {
  if (choi_.num_subsystems() != 2)
    throw Error(ErrorCode::DimensionMismatch, "channel Choi must carry dims (d_in, d_out)");
  d_in_ = choi_.dims()[0];
  d_out_ = choi_.dims()[1];
}

ChoiChannel choi_from_kraus(std::span<const Matrix> kraus) {
  if (kraus.empty()) throw Error(ErrorCode::InvalidArgument, "empty Kraus list");
  const std::size_t d_out = static_cast<std::size_t>(kraus[0].rows());
  const std::size_t d_in = static_cast<std::size_t>(kraus[0].cols());
  Matrix c = Matrix::Zero(ix(d_in * d_out), ix(d_in * d_out));
  for (const Matrix& k : kraus) {
    if (static_cast<std::size_t>(k.rows()) != d_out || static_cast<std::size_t>(k.cols()) != d_in)
      throw Error(ErrorCode::DimensionMismatch, "Kraus operators must share one shape");
    // |K>> = sum_i |i> (x) K|i>
    Vector v(ix(d_in * d_out));
    for (Idx i = 0; i < ix(d_in); ++i) v.segment(i * ix(d_out), ix(d_out)) = k.col(i);
    c.noalias() += v * v.adjoint();
  }
  return {d_in, d_out, std::move(c)};
}

Matrix apply_channel(const ChoiChannel& ch, const Matrix& rho) {
  return choi_apply(ch.matrix(), ch.d_in(), ch.d_out(), rho);
}

MultipartiteOperator apply_channel(const ChoiChannel& ch, const MultipartiteOperator& rho) {
  return {Dims{ch.d_out()}, apply_channel(ch, rho.matrix())};
}

Report ChannelVerdict::to_report() const {
  Report r("channel");
  r.add("hermitian", hermitian)
      .add("is_cp", is_cp)
      .add("is_tp", is_tp)
      .add("min_eig", min_eigenvalue)
      .add("marginal_deviation", marginal_deviation);
  if (!hermitian) r.add_violation("hermiticity", 1.0);
  if (hermitian && !is_cp) r.add_violation("min_eig", min_eigenvalue);
  if (!is_tp) r.add_violation("marginal_deviation", marginal_deviation);
  return r;
}

ChannelVerdict validate_channel(const ChoiChannel& ch, double tol) {
  ChannelVerdict v;
  const PsdReport psd = psd_report(ch.matrix(), tol);
  v.hermitian = psd.hermitian;
  v.is_cp = psd.psd;
  v.min_eigenvalue = psd.min_eigenvalue;
  const Matrix marg = partial_trace(ch.choi(), {1}).matrix();
  v.marginal_deviation = max_abs_diff(marg, Matrix::Identity(marg.rows(), marg.cols()));
  v.is_tp = v.marginal_deviation <= tol;
  return v;
}

ChoiChannel compose_channels(const ChoiChannel& f, const ChoiChannel& g) {
  if (g.d_out() != f.d_in())
    throw Error(ErrorCode::DimensionMismatch, "compose: g output " + std::to_string(g.d_out()) +
                                                  " != f input " + std::to_string(f.d_in()));
  return {g.d_in(), f.d_out(), choi_compose(f.matrix(), f.d_out(), g.matrix(), g.d_in(), g.d_out())};
}

ChoiChannel combine(std::span<const double> weights, std::span<const ChoiChannel> maps) {
  if (weights.size() != maps.size() || maps.empty())
    throw Error(ErrorCode::InvalidArgument, "combine: weights and maps must have equal nonzero length");
  Matrix acc = Matrix::Zero(maps[0].matrix().rows(), maps[0].matrix().cols());
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].d_in() != maps[0].d_in() || maps[k].d_out() != maps[0].d_out())
      throw Error(ErrorCode::DimensionMismatch, "combine: shapes differ");
    acc += weights[k] * maps[k].matrix();
  }
  return {maps[0].d_in(), maps[0].d_out(), std::move(acc)};
}

RealMatrix classical_channel_extract(const ChoiChannel& ch) {
  const std::size_t n = ch.d_in(), m = ch.d_out();
  RealMatrix s(ix(m), ix(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) s(ix(a), ix(i)) = ch.matrix()(ix(i * m + a), ix(i * m + a)).real();
  return s;
}

namespace channels {

ChoiChannel identity(std::size_t d) {
  require_dim(d);
  Matrix c = Matrix::Zero(ix(d * d), ix(d * d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c(ix(i * d + i), ix(j * d + j)) = 1.0;
  return {d, d, std::move(c)};
}

ChoiChannel depolarizing(std::size_t d) {
  require_dim(d);
  return {d, d, Matrix::Identity(ix(d * d), ix(d * d)) / static_cast<double>(d)};
}

ChoiChannel transpose_map(std::size_t d) {
  require_dim(d);
  Matrix c = Matrix::Zero(ix(d * d), ix(d * d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c(ix(i * d + j), ix(j * d + i)) = 1.0;
  return {d, d, std::move(c)};
}

ChoiChannel unitary_conjugation(const Matrix& u) {
  const Matrix k[] = {u};
  return choi_from_kraus(k);
}

ChoiChannel amplitude_damping(double gamma) {
  require_range(gamma, 0.0, 1.0, "gamma");
  gamma = std::clamp(gamma, 0.0, 1.0);
  Matrix c = Matrix::Zero(4, 4);
  const double s = std::sqrt(1.0 - gamma);
  c(0, 0) = 1.0;
  c(0, 3) = s;
  c(3, 0) = s;
  c(2, 2) = gamma;
  c(3, 3) = 1.0 - gamma;
  return {2, 2, std::move(c)};
}

ChoiChannel bit_flip(double p) {
  require_range(p, 0.0, 1.0, "p");
  p = std::clamp(p, 0.0, 1.0);
  Matrix c = Matrix::Zero(4, 4);
  c(0, 0) = c(0, 3) = c(3, 0) = c(3, 3) = 1.0 - p;
  c(1, 1) = c(1, 2) = c(2, 1) = c(2, 2) = p;
  return {2, 2, std::move(c)};
}

ChoiChannel pauli_channel(const std::array<double, 4>& p) {
  double sum = 0.0;
  for (double v : p) {
    require_range(v, 0.0, 1.0, "p_alpha");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > kRangeTol)
    throw Error(ErrorCode::OutOfRange, "Pauli probabilities sum to " + format_double(sum) + ", not 1");
  Matrix c = Matrix::Zero(4, 4);
  c(0, 0) = c(3, 3) = p[0] + p[3];
  c(0, 3) = c(3, 0) = p[0] - p[3];
  c(1, 1) = c(2, 2) = p[1] + p[2];
  c(1, 2) = c(2, 1) = p[1] - p[2];
  return {2, 2, std::move(c)};
}

ChoiChannel dephasing_channel(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "covariance matrix must be square");
  const std::size_t d = static_cast<std::size_t>(m.rows());
  for (std::size_t i = 0; i < d; ++i)
    if (std::abs(m(ix(i), ix(i)) - Complex(1.0)) > tol)
      throw Error(ErrorCode::InvalidArgument, "covariance matrix needs unit diagonal");
  const PsdReport psd = psd_report(m, tol);
  if (!psd.psd) throw Error(ErrorCode::InvalidArgument, "covariance matrix is not positive semidefinite");
  Matrix c = Matrix::Zero(ix(d * d), ix(d * d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c(ix(i * d + i), ix(j * d + j)) = m(ix(i), ix(j));
  return {d, d, std::move(c)};
}

ChoiChannel unitary_covariant(double lambda, std::size_t d) {
  require_dim(d);
  const double dd = static_cast<double>(d);
  require_range(lambda, -1.0 / (dd * dd - 1.0), 1.0, "lambda");
  const double w[] = {lambda, 1.0 - lambda};
  const ChoiChannel m[] = {identity(d), depolarizing(d)};
  return combine(w, m);
}

ChoiChannel conjugate_covariant(double mu, std::size_t d) {
  require_dim(d);
  const double dd = static_cast<double>(d);
  require_range(mu, -1.0 / (dd - 1.0), 1.0 / (dd + 1.0), "mu");
  const double w[] = {mu, 1.0 - mu};
  const ChoiChannel m[] = {transpose_map(d), depolarizing(d)};
  return combine(w, m);
}

ChoiChannel holevo_werner(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "Holevo-Werner channel needs d >= 2");
  const Idx n = ix(d * d);
  return {d, d, (Matrix::Identity(n, n) - transpose_map(d).matrix()) / (static_cast<double>(d) - 1.0)};
}

ChoiChannel orthogonal_covariant(double alpha, double beta, std::size_t d) {
  require_dim(d);
  const double dd = static_cast<double>(d);
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw Error(ErrorCode::OutOfRange, "alpha and beta must be finite");
  const double g1 = alpha - dd * std::fabs(beta);
  const double g2 = dd * (1.0 - alpha - beta) + alpha / dd + beta;
  if (g1 < -kRangeTol || g2 < -kRangeTol)
    throw Error(ErrorCode::OutOfRange, "(alpha, beta) = (" + format_double(alpha) + ", " +
                                           format_double(beta) + ") outside the CP region");
  const double w[] = {1.0 - alpha - beta, alpha, beta};
  const ChoiChannel m[] = {identity(d), depolarizing(d), transpose_map(d)};
  return combine(w, m);
}

}  // namespace channels

DUChannelParams::DUChannelParams(RealMatrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
  check_a(a_);
  check_offdiag_hermitian(b_, d(), "B");
}

Matrix DUChannelParams::bbb() const {
  Matrix m = b_;
  for (Idx i = 0; i < a_.rows(); ++i) m(i, i) = a_(i, i);
  return m;
}

ConjDUChannelParams::ConjDUChannelParams(RealMatrix a, Matrix c) : a_(std::move(a)), c_(std::move(c)) {
  check_a(a_);
  check_offdiag_hermitian(c_, d(), "C");
}

DOChannelParams::DOChannelParams(RealMatrix a, Matrix b, Matrix c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  check_a(a_);
  check_offdiag_hermitian(b_, d(), "B");
  check_offdiag_hermitian(c_, d(), "C");
}

Matrix DOChannelParams::bbb() const {
  Matrix m = b_;
  for (Idx i = 0; i < a_.rows(); ++i) m(i, i) = a_(i, i);
  return m;
}

namespace {

Matrix a_part(const RealMatrix& a) {
  const std::size_t d = static_cast<std::size_t>(a.rows());
  Matrix c = Matrix::Zero(ix(d * d), ix(d * d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c(ix(j * d + i), ix(j * d + i)) = a(ix(i), ix(j));
  return c;
}

void add_b_part(Matrix& c, const Matrix& b) {
  const std::size_t d = static_cast<std::size_t>(b.rows());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) c(ix(i * d + i), ix(j * d + j)) += b(ix(i), ix(j));
}

void add_c_part(Matrix& c, const Matrix& cc) {
  const std::size_t d = static_cast<std::size_t>(cc.rows());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) c(ix(j * d + i), ix(i * d + j)) += cc(ix(i), ix(j));
}

void check_a_part(DUChannelVerdict& v, const RealMatrix& a, double tol) {
  v.min_a = a.minCoeff();
  v.a_nonnegative = v.min_a >= -tol;
  const Eigen::RowVectorXd cols = a.colwise().sum();
  v.stochastic_deviation = (cols.array() - 1.0).abs().maxCoeff();
  v.column_stochastic = v.stochastic_deviation <= tol;
}

void check_bbb(DUChannelVerdict& v, const Matrix& bbb, double tol) {
  const PsdReport psd = psd_report(bbb, tol);
  v.min_eig_bbb = psd.min_eigenvalue;
  v.bbb_psd = psd.psd;
}

void check_c(DUChannelVerdict& v, const RealMatrix& a, const Matrix& c, double tol) {
  double worst = 0.0;
  for (Idx i = 0; i < a.rows(); ++i)
    for (Idx j = 0; j < a.rows(); ++j)
      if (i != j) worst = std::max(worst, std::norm(c(i, j)) - a(i, j) * a(j, i));
  v.c_violation = worst;
  v.c_bounded = worst <= tol * std::max(1.0, a.cwiseAbs().maxCoeff());
}

}  // namespace

Report DUChannelVerdict::to_report() const {
  Report r("du-channel");
  r.add("a_nonnegative", a_nonnegative)
      .add("bbb_psd", bbb_psd)
      .add("c_bounded", c_bounded)
      .add("column_stochastic", column_stochastic)
      .add("min_a", min_a)
      .add("min_eig_bbb", min_eig_bbb)
      .add("c_violation", c_violation)
      .add("stochastic_deviation", stochastic_deviation);
  if (!a_nonnegative) r.add_violation("min_a", min_a);
  if (!bbb_psd) r.add_violation("min_eig_bbb", min_eig_bbb);
  if (!c_bounded) r.add_violation("c_violation", c_violation);
  if (!column_stochastic) r.add_violation("stochastic_deviation", stochastic_deviation);
  return r;
}

ChoiChannel du_channel(const DUChannelParams& p) {
  Matrix c = a_part(p.A());
  add_b_part(c, p.B());
  return {p.d(), p.d(), std::move(c)};
}

ChoiChannel conj_du_channel(const ConjDUChannelParams& p) {
  Matrix c = a_part(p.A());
  add_c_part(c, p.C());
  return {p.d(), p.d(), std::move(c)};
}

ChoiChannel do_channel(const DOChannelParams& p) {
  Matrix c = a_part(p.A());
  add_b_part(c, p.B());
  add_c_part(c, p.C());
  return {p.d(), p.d(), std::move(c)};
}

DUChannelVerdict du_channel_validate(const DUChannelParams& p, double tol) {
  DUChannelVerdict v;
  check_a_part(v, p.A(), tol);
  check_bbb(v, p.bbb(), tol);
  return v;
}

DUChannelVerdict conj_du_channel_validate(const ConjDUChannelParams& p, double tol) {
  DUChannelVerdict v;
  check_a_part(v, p.A(), tol);
  check_c(v, p.A(), p.C(), tol);
  return v;
}

DUChannelVerdict do_channel_validate(const DOChannelParams& p, double tol) {
  DUChannelVerdict v;
  check_a_part(v, p.A(), tol);
  check_bbb(v, p.bbb(), tol);
  check_c(v, p.A(), p.C(), tol);
  return v;
}

DUChannelParams du_channel_compose(const DUChannelParams& p, const DUChannelParams& q) {
  if (p.d() != q.d()) throw Error(ErrorCode::DimensionMismatch, "du_channel_compose: dimensions differ");
  return {p.A() * q.A(), p.B().cwiseProduct(q.B())};
}

}  // namespace superchan
