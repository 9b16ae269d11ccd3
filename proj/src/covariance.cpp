// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#include "superchan/covariance.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "superchan/error.hpp"

namespace superchan {

namespace {

using Idx = Eigen::Index;

Idx ix(std::size_t v) { return static_cast<Idx>(v); }

Matrix haar_unitary(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z(ix(d), ix(d));
  for (Idx c = 0; c < z.cols(); ++c)
    for (Idx r = 0; r < z.rows(); ++r) z(r, c) = Complex(gauss(rng), gauss(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity of QR so the distribution is Haar.
  for (Idx k = 0; k < q.cols(); ++k) {
    const Complex rkk = r(k, k);
    const double mag = std::abs(rkk);
    if (mag > 0.0) q.col(k) *= rkk / mag;
  }
  return q;
}

}  // namespace

const char* group_kind_name(GroupKind kind) noexcept {
  switch (kind) {
    case GroupKind::DiagonalUnitary: return "diagonal-unitary";
    case GroupKind::DiagonalOrthogonal: return "diagonal-orthogonal";
    case GroupKind::HaarUnitary: return "haar-unitary";
  }
  return "unknown";
}

GroupSampler::GroupSampler(GroupKind kind, std::size_t d, std::uint64_t seed)
    : kind_(kind), d_(d), seed_(seed), rng_(seed) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "sampler dimension must be positive");
}

Matrix GroupSampler::next() {
  switch (kind_) {
    case GroupKind::DiagonalUnitary: {
      std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
      Matrix u = Matrix::Zero(ix(d_), ix(d_));
      for (Idx k = 0; k < ix(d_); ++k) u(k, k) = std::polar(1.0, phase(rng_));
      return u;
    }
    case GroupKind::DiagonalOrthogonal: {
      std::bernoulli_distribution flip(0.5);
      Matrix u = Matrix::Zero(ix(d_), ix(d_));
      for (Idx k = 0; k < ix(d_); ++k) u(k, k) = flip(rng_) ? -1.0 : 1.0;
      return u;
    }
    case GroupKind::HaarUnitary:
      return haar_unitary(d_, rng_);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown group kind");
}

Matrix linked(const Matrix& u, Link link) { return link == Link::Same ? u : Matrix(u.conjugate()); }

Report CovarianceVerdict::to_report() const {
  Report r("covariance");
  r.add("samples", static_cast<std::int64_t>(samples))
      .add("max_deviation", max_deviation)
      .add("worst_sample", static_cast<std::int64_t>(worst_sample))
      .add("covariant", passed);
  if (!passed) r.add_violation("max_deviation", max_deviation);
  return r;
}

CovarianceVerdict channel_covariance_check(const ChoiChannel& ch, GroupSampler& u, Link output,
                                           std::size_t n, double tol) {
  if (u.d() != ch.d_in() || u.d() != ch.d_out())
    throw Error(ErrorCode::DimensionMismatch, "sampler dimension does not match the channel");
  CovarianceVerdict v;
  v.samples = n;
  for (std::size_t s = 0; s < n; ++s) {
    const Matrix g = u.next();
    const Matrix h = linked(g, output);
    const Matrix w = kron(Matrix(g.conjugate()), h);
    const double dev = max_abs_diff(w * ch.matrix() * w.adjoint(), ch.matrix());
    if (s == 0 || dev > v.max_deviation) {
      v.max_deviation = dev;
      v.worst_sample = s;
      v.worst_u = g;
      v.worst_v = h;
    }
  }
  v.passed = v.max_deviation <= tol;
  return v;
}

CovarianceVerdict superchannel_covariance_check(const SuperChoi& s, GroupSampler& g, GroupSampler& h,
                                                Link u_prime, Link v_prime, std::size_t n, double tol) {
  const SuperDims& d = s.dims();
  if (g.d() != d.a0 || h.d() != d.a1 || d.b0 != d.a0 || d.b1 != d.a1)
    throw Error(ErrorCode::DimensionMismatch, "sampler dimensions do not match (A0, A1, B0, B1)");
  CovarianceVerdict v;
  v.samples = n;
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix u = g.next();
    const Matrix vv = h.next();
    const Matrix up = linked(u, u_prime);
    const Matrix vp = linked(vv, v_prime);
    const Matrix w = kron(kron(u, Matrix(vv.conjugate())), kron(Matrix(up.conjugate()), vp));
    const double dev = max_abs_diff(w * s.matrix() * w.adjoint(), s.matrix());
    if (k == 0 || dev > v.max_deviation) {
      v.max_deviation = dev;
      v.worst_sample = k;
      v.worst_u = u;
      v.worst_v = vv;
    }
  }
  v.passed = v.max_deviation <= tol;
  return v;
}

CovarianceVerdict superchannel_covariance_check(const SuperChoi& s, const CovarianceGroup& group,
                                                std::size_t n, std::uint64_t seed, double tol) {
  GroupSampler g(group.kind, s.dims().a0, seed);
  GroupSampler h(group.kind, s.dims().a1, seed + 1);
  return superchannel_covariance_check(s, g, h, group.u_prime, group.v_prime, n, tol);
}

const char* uu_variant_name(UUVariant v) noexcept {
  switch (v) {
    case UUVariant::Covariant: return "covariant";
    case UUVariant::Conjugate: return "conjugate";
    case UUVariant::Mixed: return "mixed";
  }
  return "unknown";
}

UUFamilyParams::UUFamilyParams(UUVariant variant, const std::array<double, 4>& p, std::size_t d)
    : variant_(variant), p_(p), d_(d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "family needs d >= 2");
  double sum = 0.0;
  for (double x : p) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite family coefficient");
    sum += x;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw Error(ErrorCode::InvalidArgument, "coefficients sum to " + format_double(sum) + ", expected 1");
}

namespace {

// Per-variant tensor factors (first on A0 -> B0, second on A1 -> B1).
std::array<std::array<ChoiChannel, 2>, 4> factors(const UUFamilyParams& params) {
  const std::size_t d = params.d();
  const ChoiChannel id = channels::identity(d);
  const ChoiChannel dep = channels::depolarizing(d);
  const ChoiChannel t = channels::transpose_map(d);
  switch (params.variant()) {
    case UUVariant::Covariant:
      return {{{id, id}, {id, dep}, {dep, id}, {dep, dep}}};
    case UUVariant::Conjugate:
      return {{{t, t}, {t, dep}, {dep, t}, {dep, dep}}};
    case UUVariant::Mixed:
      return {{{id, t}, {id, dep}, {dep, t}, {dep, dep}}};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown variant");
}

}  // namespace

SuperChoi uu_superchannel(const UUFamilyParams& params) {
  const auto fs = factors(params);
  const std::size_t d = params.d();
  Matrix acc = Matrix::Zero(ix(d * d * d * d), ix(d * d * d * d));
  for (std::size_t k = 0; k < 4; ++k)
    if (params.p()[k] != 0.0) acc += params.p()[k] * tensor_map(fs[k][0], fs[k][1]).matrix();
  return {SuperDims{d, d, d, d}, std::move(acc)};
}

bool uu_cp_closed_form(const UUFamilyParams& params, double tol) {
  const auto [p0, p1, p2, p3] = params.p();
  const double d = static_cast<double>(params.d());
  const double d2 = d * d;
  auto ge = [tol](double lhs, double rhs) { return lhs >= rhs - tol; };
  switch (params.variant()) {
    case UUVariant::Covariant:
      return ge(p3, 0.0) && ge(p1 + p3 / d2, 0.0) && ge(p2 + p3 / d2, 0.0) &&
             ge(p0 * d2 + p1 + p2 + p3 / d2, 0.0);
    case UUVariant::Conjugate:
      return ge(p3 / d2 + p0, std::fabs(p1 + p2) / d) && ge(p3 / d2 - p0, std::fabs(p1 - p2) / d);
    case UUVariant::Mixed:
      return ge(p3, d * std::fabs(p2)) && ge(d * p1 + p3 / d, std::fabs(d2 * p0 + p2));
  }
  return false;
}

ChoiChannel uu_closed_form_action(const UUFamilyParams& params, const ChoiChannel& ch) {
  const std::size_t d = params.d();
  if (ch.d_in() != d || ch.d_out() != d)
    throw Error(ErrorCode::DimensionMismatch, "channel dimensions must equal the family dimension");
  const ChoiChannel dep = channels::depolarizing(d);
  const ChoiChannel t = channels::transpose_map(d);
  auto c = [](const ChoiChannel& f, const ChoiChannel& g) { return compose_channels(f, g); };
  const ChoiChannel ddd = c(c(dep, ch), dep);
  std::array<ChoiChannel, 4> terms = [&]() -> std::array<ChoiChannel, 4> {
    switch (params.variant()) {
      case UUVariant::Covariant:
        return {ch, c(dep, ch), c(ch, dep), ddd};
      case UUVariant::Conjugate:
        return {c(c(t, ch), t), c(c(dep, ch), t), c(c(t, ch), dep), ddd};
      case UUVariant::Mixed:
        return {c(t, ch), c(dep, ch), c(c(t, ch), dep), ddd};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown variant");
  }();
  return combine(params.p(), terms);
}

ChoiChannel uu_induced_marginal(const UUFamilyParams& params) {
  const std::size_t d = params.d();
  const auto& p = params.p();
  const double w[] = {p[0] + p[1], p[2] + p[3]};
  const ChoiChannel first =
      params.variant() == UUVariant::Conjugate ? channels::transpose_map(d) : channels::identity(d);
  const ChoiChannel maps[] = {first, channels::depolarizing(d)};
  return combine(w, maps);
}

CovarianceGroup defining_group(UUVariant v) noexcept {
  switch (v) {
    case UUVariant::Covariant: return groups::haar;
    case UUVariant::Conjugate: return groups::conj_haar;
    case UUVariant::Mixed: return groups::mixed;
  }
  return groups::haar;
}

UUFamilyParams holevo_werner_params(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "Holevo-Werner superchannel needs d >= 2");
  const double d2 = static_cast<double>(d * d);
  return {UUVariant::Conjugate, {-1.0 / (d2 - 1.0), 0.0, 0.0, d2 / (d2 - 1.0)}, d};
}

SuperChoi holevo_werner_superchannel(std::size_t d) { return uu_superchannel(holevo_werner_params(d)); }

}  // namespace superchan
