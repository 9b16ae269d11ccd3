// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#include "superchan/superchannel.hpp"

#include <algorithm>
#include <string>

#include "superchan/error.hpp"

namespace superchan {

namespace {

using Idx = Eigen::Index;

Idx ix(std::size_t v) { return static_cast<Idx>(v); }

SuperDims dims_from(const MultipartiteOperator& m) {
  if (m.num_subsystems() != 4)
    throw Error(ErrorCode::DimensionMismatch, "superchannel Choi must carry dims (A0, A1, B0, B1)");
  return {m.dims()[0], m.dims()[1], m.dims()[2], m.dims()[3]};
}

}  // namespace

SuperChoi::SuperChoi(SuperDims dims, Matrix choi)
    : dims_(dims), choi_(Dims{dims.a0, dims.a1, dims.b0, dims.b1}, std::move(choi)) {}

SuperChoi::SuperChoi(MultipartiteOperator choi) : dims_(dims_from(choi)), choi_(std::move(choi)) {}

std::size_t SuperChoi::square_dim() const {
  if (dims_.a0 != dims_.a1 || dims_.a0 != dims_.b0 || dims_.a0 != dims_.b1)
    throw Error(ErrorCode::DimensionMismatch, "expected equal dimensions on A0, A1, B0, B1");
  return dims_.a0;
}

SuperChoi identity_superchannel(std::size_t d_a0, std::size_t d_a1) {
  const ChoiChannel id = channels::identity(d_a0 * d_a1);
  return {SuperDims{d_a0, d_a1, d_a0, d_a1}, id.matrix()};
}

Matrix representing_apply(const SuperChoi& s, const Matrix& x) {
  return choi_apply(s.matrix(), s.dims().in(), s.dims().out(), x);
}

MultipartiteOperator representing_apply(const SuperChoi& s, const MultipartiteOperator& x) {
  return {Dims{s.dims().b0, s.dims().b1}, representing_apply(s, x.matrix())};
}

ChoiChannel apply_superchannel(const SuperChoi& s, const ChoiChannel& phi) {
  if (phi.d_in() != s.dims().a0 || phi.d_out() != s.dims().a1)
    throw Error(ErrorCode::DimensionMismatch,
                "channel is " + std::to_string(phi.d_in()) + "->" + std::to_string(phi.d_out()) +
                    " but the superchannel expects " + std::to_string(s.dims().a0) + "->" +
                    std::to_string(s.dims().a1));
  return {s.dims().b0, s.dims().b1, representing_apply(s, phi.matrix())};
}

Report SuperchannelVerdict::to_report() const {
  Report r("superchannel");
  r.add("hermitian", hermitian)
      .add("is_cp", is_cp)
      .add("factorizes", factorizes)
      .add("marginal_ok", marginal_ok)
      .add("min_eig", min_eigenvalue)
      .add("factorization_deviation", factorization_deviation)
      .add("marginal_deviation", marginal_deviation);
  if (!hermitian) r.add_violation("hermiticity", 1.0);
  if (hermitian && !is_cp) r.add_violation("min_eig", min_eigenvalue);
  if (!factorizes) r.add_violation("factorization_deviation", factorization_deviation);
  if (!marginal_ok) r.add_violation("marginal_deviation", marginal_deviation);
  return r;
}

SuperchannelVerdict validate_superchannel(const SuperChoi& s, double tol) {
  SuperchannelVerdict v;
  const PsdReport psd = psd_report(s.matrix(), tol);
  v.hermitian = psd.hermitian;
  v.is_cp = psd.psd;
  v.min_eigenvalue = psd.min_eigenvalue;

  const SuperDims& d = s.dims();
  const MultipartiteOperator x = partial_trace(s.choi(), {3});  // (A0, A1, B0)
  const Matrix c0 = partial_trace(x, {1}).matrix() / static_cast<double>(d.a1);
  const MultipartiteOperator prod(Dims{d.a0, d.b0, d.a1}, kron(c0, Matrix::Identity(ix(d.a1), ix(d.a1))));
  const MultipartiteOperator expect = permute_subsystems(prod, {0, 2, 1});
  v.factorization_deviation = max_abs_diff(x.matrix(), expect.matrix());
  v.factorizes = v.factorization_deviation <= tol;

  const Matrix marg = partial_trace(MultipartiteOperator(Dims{d.a0, d.b0}, c0), {0}).matrix();
  v.marginal_deviation = max_abs_diff(marg, Matrix::Identity(ix(d.b0), ix(d.b0)));
  v.marginal_ok = v.marginal_deviation <= tol;
  return v;
}

Report TPCheck::to_report() const {
  Report r("tp-preservation");
  r.add("off_diagonal_vanishes", off_diagonal_vanishes)
      .add("a_independent", a_independent)
      .add("unital", unital)
      .add("off_diagonal_deviation", off_diagonal_deviation)
      .add("a_dependence", a_dependence)
      .add("unital_deviation", unital_deviation);
  if (!off_diagonal_vanishes) r.add_violation("off_diagonal_deviation", off_diagonal_deviation);
  if (!a_independent) r.add_violation("a_dependence", a_dependence);
  if (!unital) r.add_violation("unital_deviation", unital_deviation);
  return r;
}

TPCheck tp_preserving_check(const SuperChoi& s, double tol) {
  const SuperDims& d = s.dims();
  const Idx out = ix(d.out());
  const Matrix& c = s.matrix();

  // L(e_ij (x) e_ab) = Tr_B1 of the Choi block at rows (i,a), cols (j,b).
  auto lmap = [&](std::size_t i, std::size_t a, std::size_t j, std::size_t b) {
    const MultipartiteOperator blk(Dims{d.b0, d.b1},
                                   c.block(ix(i * d.a1 + a) * out, ix(j * d.a1 + b) * out, out, out));
    return partial_trace(blk, {1}).matrix();
  };

  const Idx nb0 = ix(d.b0);
  Matrix induced = Matrix::Zero(ix(d.a0) * nb0, ix(d.a0) * nb0);
  double off = 0.0, dep = 0.0;
  for (std::size_t i = 0; i < d.a0; ++i)
    for (std::size_t j = 0; j < d.a0; ++j) {
      std::vector<Matrix> diag;
      for (std::size_t a = 0; a < d.a1; ++a)
        for (std::size_t b = 0; b < d.a1; ++b) {
          Matrix l = lmap(i, a, j, b);
          if (a == b) {
            diag.push_back(std::move(l));
          } else {
            off = std::max(off, max_abs(l));
          }
        }
      Matrix mean = Matrix::Zero(nb0, nb0);
      for (const Matrix& l : diag) mean += l;
      mean /= static_cast<double>(diag.size());
      for (const Matrix& l : diag) dep = std::max(dep, max_abs_diff(l, mean));
      induced.block(ix(i) * nb0, ix(j) * nb0, nb0, nb0) = mean;
    }

  TPCheck r{.induced = ChoiChannel(d.a0, d.b0, induced)};
  r.off_diagonal_deviation = off;
  r.a_dependence = dep;
  r.off_diagonal_vanishes = off <= tol;
  r.a_independent = dep <= tol;
  const Matrix unit = apply_channel(r.induced, Matrix(Matrix::Identity(ix(d.a0), ix(d.a0))));
  r.unital_deviation = max_abs_diff(unit, Matrix::Identity(nb0, nb0));
  r.unital = r.unital_deviation <= tol;
  return r;
}

SuperChoi tensor_map(const ChoiChannel& f, const ChoiChannel& g) {
  const MultipartiteOperator k(Dims{f.d_in(), f.d_out(), g.d_in(), g.d_out()}, kron(f.matrix(), g.matrix()));
  return SuperChoi(permute_subsystems(k, {0, 2, 1, 3}));
}

SuperChoi sandwich_superchannel(const ChoiChannel& n0, const ChoiChannel& n1) {
  // Choi of T o n0 o T is the full transpose of the Choi of n0.
  const ChoiChannel tn0(n0.d_in(), n0.d_out(), n0.matrix().transpose());
  return tensor_map(tn0, n1);
}

SuperChoi compose_superchannels(const SuperChoi& s2, const SuperChoi& s1) {
  const SuperDims& d1 = s1.dims();
  const SuperDims& d2 = s2.dims();
  if (d1.b0 != d2.a0 || d1.b1 != d2.a1)
    throw Error(ErrorCode::DimensionMismatch, "compose_superchannels: output of the first does not match input of the second");
  return {SuperDims{d1.a0, d1.a1, d2.b0, d2.b1},
          choi_compose(s2.matrix(), d2.out(), s1.matrix(), d1.in(), d1.out())};
}

RealMatrix ClassicalSuperchannel::act(const RealMatrix& pi) const {
  if (static_cast<std::size_t>(pi.rows()) != a1 || static_cast<std::size_t>(pi.cols()) != a0)
    throw Error(ErrorCode::DimensionMismatch, "classical channel must be |A1| x |A0|");
  RealMatrix out = RealMatrix::Zero(ix(b1), ix(b0));
  for (std::size_t j = 0; j < b0; ++j)
    for (std::size_t b = 0; b < b1; ++b) {
      double acc = 0.0;
      for (std::size_t i = 0; i < a0; ++i)
        for (std::size_t a = 0; a < a1; ++a) acc += T(ix(j * b1 + b), ix(i * a1 + a)) * pi(ix(a), ix(i));
      out(ix(b), ix(j)) = acc;
    }
  return out;
}

ClassicalSuperchannel classical_superchannel_extract(const SuperChoi& s) {
  const SuperDims& d = s.dims();
  ClassicalSuperchannel cs;
  cs.a0 = d.a0;
  cs.a1 = d.a1;
  cs.b0 = d.b0;
  cs.b1 = d.b1;
  cs.T = RealMatrix::Zero(ix(d.out()), ix(d.in()));
  const std::size_t out = d.out();
  for (std::size_t i = 0; i < d.a0; ++i)
    for (std::size_t a = 0; a < d.a1; ++a)
      for (std::size_t j = 0; j < d.b0; ++j)
        for (std::size_t b = 0; b < d.b1; ++b) {
          const std::size_t idx = (i * d.a1 + a) * out + j * d.b1 + b;
          cs.T(ix(j * d.b1 + b), ix(i * d.a1 + a)) = s.matrix()(ix(idx), ix(idx)).real();
        }
  cs.min_entry = cs.T.minCoeff();
  cs.t = RealMatrix::Zero(ix(d.b0), ix(d.a0));
  double marg = 0.0;
  for (std::size_t j = 0; j < d.b0; ++j)
    for (std::size_t i = 0; i < d.a0; ++i)
      for (std::size_t a = 0; a < d.a1; ++a) {
        double sum = 0.0;
        for (std::size_t b = 0; b < d.b1; ++b) sum += cs.T(ix(j * d.b1 + b), ix(i * d.a1 + a));
        if (a == 0) cs.t(ix(j), ix(i)) = sum;
        else marg = std::max(marg, std::abs(sum - cs.t(ix(j), ix(i))));
      }
  cs.marginal_deviation = marg;
  double norm = 0.0;
  for (std::size_t j = 0; j < d.b0; ++j) norm = std::max(norm, std::abs(cs.t.row(ix(j)).sum() - 1.0));
  cs.normalization_deviation = norm;
  return cs;
}

}  // namespace superchan
