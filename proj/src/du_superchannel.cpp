// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#include "superchan/du_superchannel.hpp"

#include <algorithm>
#include <string>

#include "superchan/error.hpp"

namespace superchan {

namespace {

using Idx = Eigen::Index;

Idx ix(std::size_t v) { return static_cast<Idx>(v); }

// Flat index of the basis vector (A0, A1, B0, B1) = (p, q, r, s) for square dims d.
Idx choi_index(std::size_t d, std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  return ix(((p * d + q) * d + r) * d + s);
}

const char* table_name(DUTable t) {
  switch (t) {
    case DUTable::A: return "A";
    case DUTable::B: return "B";
    case DUTable::C: return "C";
    case DUTable::D: return "D";
  }
  return "?";
}

template <class M>
void check_table(DUTable t, std::size_t d, const M& m) {
  const Idx n = ix(d * d);
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, std::string("table ") + table_name(t) + " must be d^2 x d^2");
  if (!m.allFinite()) throw Error(ErrorCode::InvalidArgument, std::string("table ") + table_name(t) + " has non-finite entries");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t b = 0; b < d; ++b)
          if (!du_in_support(t, i, a, j, b) &&
              m(ix(pair_index(i, a, d)), ix(pair_index(j, b, d))) != typename M::Scalar(0))
            throw Error(ErrorCode::InvalidArgument,
                        std::string("table ") + table_name(t) + " has a nonzero entry outside its support at (" +
                            std::to_string(i) + std::to_string(a) + "," + std::to_string(j) +
                            std::to_string(b) + ")");
}

// Max over the table of |X_{ia,jb} - conj X_{partner}|.
template <class F>
double hermiticity_gap(std::size_t d, const Matrix& m, F partner) {
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t b = 0; b < d; ++b) {
          const auto [r, c] = partner(i, a, j, b);
          worst = std::max(worst, std::abs(m(ix(pair_index(i, a, d)), ix(pair_index(j, b, d))) -
                                           std::conj(m(ix(r), ix(c)))));
        }
  return worst;
}

}  // namespace

bool du_in_support(DUTable t, std::size_t i, std::size_t a, std::size_t j, std::size_t b) noexcept {
  switch (t) {
    case DUTable::A: return true;
    case DUTable::B: return a != b;
    case DUTable::C: return i != j;
    case DUTable::D: return i != j && a != b;
  }
  return false;
}

Matrix du_mask(DUTable t, std::size_t d, const Matrix& m) {
  Matrix out = m;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t b = 0; b < d; ++b)
          if (!du_in_support(t, i, a, j, b)) out(ix(pair_index(i, a, d)), ix(pair_index(j, b, d))) = 0.0;
  return out;
}

DUSuperParams::DUSuperParams(std::size_t d, RealMatrix a, Matrix b, Matrix c, Matrix dd)
    : d_(d), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_tab_(std::move(dd)) {
  if (d_ < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  check_table(DUTable::A, d_, a_);
  check_table(DUTable::B, d_, b_);
  check_table(DUTable::C, d_, c_);
  check_table(DUTable::D, d_, d_tab_);
  const std::size_t n = d_;
  auto pi = [n](std::size_t i, std::size_t a) { return pair_index(i, a, n); };
  const double gb = hermiticity_gap(n, b_, [&](auto i, auto a, auto j, auto b) { return std::pair{pi(i, b), pi(j, a)}; });
  const double gc = hermiticity_gap(n, c_, [&](auto i, auto a, auto j, auto b) { return std::pair{pi(j, a), pi(i, b)}; });
  const double gd = hermiticity_gap(n, d_tab_, [&](auto i, auto a, auto j, auto b) { return std::pair{pi(j, b), pi(i, a)}; });
  const double scale = std::max({1.0, max_abs(b_), max_abs(c_), max_abs(d_tab_)});
  if (std::max({gb, gc, gd}) > 1e-10 * scale)
    throw Error(ErrorCode::InvalidArgument, "tables violate the Hermiticity relations (gap " +
                                                format_double(std::max({gb, gc, gd})) + ")");
}

DUSuperParams du_identity(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "du_identity needs d >= 2");
  const Idx n = ix(d * d);
  RealMatrix a = RealMatrix::Identity(n, n);
  Matrix b = Matrix::Zero(n, n), c = Matrix::Zero(n, n), dd = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a1 = 0; a1 < d; ++a1)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t b1 = 0; b1 < d; ++b1) {
          const Idx r = ix(pair_index(i, a1, d)), col = ix(pair_index(j, b1, d));
          if (i == j && a1 != b1) b(r, col) = 1.0;
          if (i != j && a1 == b1) c(r, col) = 1.0;
          if (i != j && a1 != b1) dd(r, col) = 1.0;
        }
  return {d, std::move(a), std::move(b), std::move(c), std::move(dd)};
}

SuperChoi build_choi(const DUSuperParams& p) {
  const std::size_t d = p.d();
  const Idx n = ix(d * d * d * d);
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t b = 0; b < d; ++b) {
          // A: e_jj (x) e_bb (x) e_ii (x) e_aa
          m(choi_index(d, j, b, i, a), choi_index(d, j, b, i, a)) += p.A(i, a, j, b);
          // B: e_jj (x) e_ab (x) e_ii (x) e_ab
          if (a != b) m(choi_index(d, j, a, i, a), choi_index(d, j, b, i, b)) += p.B(i, a, j, b);
          // C: e_ij (x) e_bb (x) e_ij (x) e_aa
          if (i != j) m(choi_index(d, i, b, i, a), choi_index(d, j, b, j, a)) += p.C(i, a, j, b);
          // D: e_ij (x) e_ab (x) e_ij (x) e_ab
          if (i != j && a != b) m(choi_index(d, i, a, i, a), choi_index(d, j, b, j, b)) += p.D(i, a, j, b);
        }
  return {SuperDims{d, d, d, d}, std::move(m)};
}

DUSuperParams du_from_choi(const SuperChoi& s, double tol) {
  const std::size_t d = s.square_dim();
  const Matrix& m = s.matrix();
  const Idx n = ix(d * d);
  RealMatrix a = RealMatrix::Zero(n, n);
  Matrix b = Matrix::Zero(n, n), c = Matrix::Zero(n, n), dd = Matrix::Zero(n, n);
  double imag_a = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a1 = 0; a1 < d; ++a1)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t b1 = 0; b1 < d; ++b1) {
          const Idx r = ix(pair_index(i, a1, d)), col = ix(pair_index(j, b1, d));
          const Complex va = m(choi_index(d, j, b1, i, a1), choi_index(d, j, b1, i, a1));
          a(r, col) = va.real();
          imag_a = std::max(imag_a, std::abs(va.imag()));
          if (a1 != b1) b(r, col) = m(choi_index(d, j, a1, i, a1), choi_index(d, j, b1, i, b1));
          if (i != j) c(r, col) = m(choi_index(d, i, b1, i, a1), choi_index(d, j, b1, j, a1));
          if (i != j && a1 != b1) dd(r, col) = m(choi_index(d, i, a1, i, a1), choi_index(d, j, b1, j, b1));
        }
  // Residual: everything outside the four position sets plus any imaginary part on A.
  Matrix rest = m;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a1 = 0; a1 < d; ++a1)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t b1 = 0; b1 < d; ++b1) {
          rest(choi_index(d, j, b1, i, a1), choi_index(d, j, b1, i, a1)) = 0.0;
          if (a1 != b1) rest(choi_index(d, j, a1, i, a1), choi_index(d, j, b1, i, b1)) = 0.0;
          if (i != j) rest(choi_index(d, i, b1, i, a1), choi_index(d, j, b1, j, a1)) = 0.0;
          if (i != j && a1 != b1) rest(choi_index(d, i, a1, i, a1), choi_index(d, j, b1, j, b1)) = 0.0;
        }
  const double residual = std::max(max_abs(rest), imag_a);
  if (residual > tol)
    throw NotCovariantError(ErrorCode::NotDUCovariant,
                            "Choi matrix is not diagonal-unitary covariant (residual " + format_double(residual) + ")",
                            residual);
  return {d, std::move(a), std::move(b), std::move(c), std::move(dd)};
}

Report DUTPVerdict::to_report() const {
  Report r("du-tp");
  r.add("alpha_b_independent", alpha_b_independent)
      .add("gamma_b_independent", gamma_b_independent)
      .add("rows_stochastic", rows_stochastic)
      .add("alpha_b_dependence", alpha_b_dependence)
      .add("gamma_b_dependence", gamma_b_dependence)
      .add("row_sum_deviation", row_sum_deviation);
  if (!alpha_b_independent || !gamma_b_independent) {
    r.add("witness", "i=" + std::to_string(witness_i) + " j=" + std::to_string(witness_j) +
                         " b=" + std::to_string(witness_b) + " b'=" + std::to_string(witness_b2));
  }
  if (!alpha_b_independent) r.add_violation("alpha_b_dependence", alpha_b_dependence);
  if (!gamma_b_independent) r.add_violation("gamma_b_dependence", gamma_b_dependence);
  if (!rows_stochastic) r.add_violation("row_sum_deviation", row_sum_deviation);
  return r;
}

DUTPVerdict du_tp_check(const DUSuperParams& p, double tol) {
  const std::size_t d = p.d();
  DUTPVerdict v;
  v.witness.alpha = RealMatrix::Zero(ix(d), ix(d));
  v.witness.gamma = Matrix::Zero(ix(d), ix(d));
  double worst = -1.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t b = 0; b < d; ++b) {
        double sa = 0.0;
        Complex sc = 0.0;
        for (std::size_t a = 0; a < d; ++a) {
          sa += p.A(i, a, j, b);
          if (i != j) sc += p.C(i, a, j, b);
        }
        if (b == 0) {
          v.witness.alpha(ix(i), ix(j)) = sa;
          v.witness.gamma(ix(i), ix(j)) = sc;
          continue;
        }
        const double da = std::abs(sa - v.witness.alpha(ix(i), ix(j)));
        const double dc = std::abs(sc - v.witness.gamma(ix(i), ix(j)));
        v.alpha_b_dependence = std::max(v.alpha_b_dependence, da);
        v.gamma_b_dependence = std::max(v.gamma_b_dependence, dc);
        if (std::max(da, dc) > worst) {
          worst = std::max(da, dc);
          v.witness_i = i;
          v.witness_j = j;
          v.witness_b = 0;
          v.witness_b2 = b;
        }
      }
  for (std::size_t i = 0; i < d; ++i)
    v.row_sum_deviation = std::max(v.row_sum_deviation, std::abs(v.witness.alpha.row(ix(i)).sum() - 1.0));
  v.alpha_b_independent = v.alpha_b_dependence <= tol;
  v.gamma_b_independent = v.gamma_b_dependence <= tol;
  v.rows_stochastic = v.row_sum_deviation <= tol;
  return v;
}

Matrix du_m_block(const DUSuperParams& p, std::size_t a, std::size_t b) {
  const std::size_t d = p.d();
  Matrix m = Matrix::Zero(ix(d * d), ix(d * d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      m(ix(j * d + i), ix(j * d + i)) += p.A(i, a, j, b);
      if (i != j) m(ix(i * d + i), ix(j * d + j)) += p.C(i, a, j, b);
    }
  return m;
}

Matrix du_n_block(const DUSuperParams& p, std::size_t a, std::size_t b) {
  const std::size_t d = p.d();
  Matrix m = Matrix::Zero(ix(d * d), ix(d * d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      m(ix(j * d + i), ix(j * d + i)) += p.B(i, a, j, b);
      if (i != j) m(ix(i * d + i), ix(j * d + j)) += p.D(i, a, j, b);
    }
  return m;
}

Matrix du_cp_block_matrix(const DUSuperParams& p) {
  const std::size_t d = p.d();
  const Idx s = ix(d * d);
  Matrix big = Matrix::Zero(ix(d) * s, ix(d) * s);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      big.block(ix(a) * s, ix(b) * s, s, s) = a == b ? du_m_block(p, a, a) : du_n_block(p, a, b);
  return big;
}

Report DUCPVerdict::to_report() const {
  Report r("du-cp");
  r.add("off_diagonal_m_psd", off_diagonal_m_psd)
      .add("block_psd", block_psd)
      .add("min_eig_off_diagonal_m", min_eig_off_diagonal_m)
      .add("min_eig_block", min_eig_block)
      .add("closed_form", closed_form());
  if (oracle_ran) {
    r.add("oracle_psd", oracle_psd).add("oracle_min_eig", oracle_min_eig).add("oracle_agrees", agrees());
  }
  if (!off_diagonal_m_psd) r.add_violation("min_eig_off_diagonal_m", min_eig_off_diagonal_m);
  if (!block_psd) r.add_violation("min_eig_block", min_eig_block);
  if (!agrees()) r.add_violation("oracle_disagreement", std::abs(oracle_min_eig));
  return r;
}

DUCPVerdict du_cp_check(const DUSuperParams& p, double tol, CpCheckMode mode) {
  const std::size_t d = p.d();
  DUCPVerdict v;
  v.off_diagonal_m_psd = true;
  bool first = true;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (a == b) continue;
      const PsdReport r = psd_report(du_m_block(p, a, b), tol);
      if (!r.hermitian) throw Error(ErrorCode::NotHermitian, "M_ab is not Hermitian");
      if (first || r.min_eigenvalue < v.min_eig_off_diagonal_m) v.min_eig_off_diagonal_m = r.min_eigenvalue;
      first = false;
      v.off_diagonal_m_psd = v.off_diagonal_m_psd && r.psd;
    }
  const PsdReport blk = psd_report(du_cp_block_matrix(p), tol);
  if (!blk.hermitian) throw Error(ErrorCode::NotHermitian, "Prop-7 block matrix is not Hermitian");
  v.block_psd = blk.psd;
  v.min_eig_block = blk.min_eigenvalue;
  if (mode == CpCheckMode::WithOracle) {
    const PsdReport o = psd_report(build_choi(p).matrix(), tol);
    v.oracle_ran = true;
    v.oracle_psd = o.psd;
    v.oracle_min_eig = o.min_eigenvalue;
  }
  return v;
}

DUSuperParams du_compose(const DUSuperParams& p, const DUSuperParams& q) {
  if (p.d() != q.d()) throw Error(ErrorCode::DimensionMismatch, "du_compose: dimensions differ");
  const std::size_t d = p.d();
  const Idx n = ix(d * d);
  RealMatrix a = p.A() * q.A();
  Matrix b = Matrix::Zero(n, n), c = Matrix::Zero(n, n);
  Matrix dd = p.D().cwiseProduct(q.D());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t y = 0; y < d; ++y) {
          Complex sb = 0.0, sc = 0.0;
          for (std::size_t k = 0; k < d; ++k) {
            // B~_{ix,jy} = sum_k B_{ix,ky} B'_{kx,jy}
            sb += p.B(i, x, k, y) * q.B(k, x, j, y);
            // C~_{ix,jy} = sum_b C_{ix,jb} C'_{ib,jy}
            sc += p.C(i, x, j, k) * q.C(i, k, j, y);
          }
          b(ix(pair_index(i, x, d)), ix(pair_index(j, y, d))) = sb;
          c(ix(pair_index(i, x, d)), ix(pair_index(j, y, d))) = sc;
        }
  return {d, std::move(a), du_mask(DUTable::B, d, b), du_mask(DUTable::C, d, c), du_mask(DUTable::D, d, dd)};
}

Matrix du_block_action(const DUSuperParams& p, const Matrix& x) {
  const std::size_t d = p.d();
  if (static_cast<std::size_t>(x.rows()) != d * d || x.rows() != x.cols())
    throw Error(ErrorCode::DimensionMismatch, "du_block_action: input side must be d^2");
  auto X = [&](std::size_t i, std::size_t a, std::size_t j, std::size_t b) {
    return x(ix(i * d + a), ix(j * d + b));
  };
  Matrix y = Matrix::Zero(ix(d * d), ix(d * d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          Complex acc = 0.0;
          if (i == j && a == b) {
            for (std::size_t k = 0; k < d; ++k)
              for (std::size_t c = 0; c < d; ++c) acc += p.A(i, a, k, c) * X(k, c, k, c);
          } else if (i == j) {
            for (std::size_t k = 0; k < d; ++k) acc += p.B(i, a, k, b) * X(k, a, k, b);
          } else if (a == b) {
            for (std::size_t c = 0; c < d; ++c) acc += p.C(i, a, j, c) * X(i, c, j, c);
          } else {
            acc = p.D(i, a, j, b) * X(i, a, j, b);
          }
          y(ix(i * d + a), ix(j * d + b)) = acc;
        }
  return y;
}

MultipartiteOperator du_block_action(const DUSuperParams& p, const MultipartiteOperator& x) {
  return {Dims{p.d(), p.d()}, du_block_action(p, x.matrix())};
}

DUIdentityAction du_action_on_identity(const DUSuperParams& p) {
  const std::size_t d = p.d();
  RealMatrix s = RealMatrix::Zero(ix(d), ix(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) s(ix(i), ix(j)) += p.A(j, i, k, k);
  Matrix b = Matrix::Zero(ix(d), ix(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) b(ix(i), ix(j)) = p.D(i, i, j, j);
  // Assembled directly from the displayed Choi.
  Matrix c = Matrix::Zero(ix(d * d), ix(d * d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      c(ix(j * d + i), ix(j * d + i)) += s(ix(i), ix(j));
      if (i != j) c(ix(i * d + i), ix(j * d + j)) += b(ix(i), ix(j));
    }
  return {ChoiChannel(d, d, std::move(c)), s, DUChannelParams(s, b)};
}

Report PreservationVerdict::to_report() const {
  Report r("du-preserves-do");
  r.add("samples", static_cast<std::int64_t>(samples))
      .add("max_off_pattern", max_off_pattern)
      .add("max_coefficient_error", max_coefficient_error)
      .add("preserved", passed);
  if (!passed) r.add_violation("max_off_pattern", std::max(max_off_pattern, max_coefficient_error));
  return r;
}

Matrix random_do_invariant_choi(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix x = Matrix::Zero(ix(d * d), ix(d * d));
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) x(ix(m * d + n), ix(m * d + n)) = std::abs(g(rng));
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = m + 1; n < d; ++n) {
      const Complex q(g(rng), g(rng)), r(g(rng), g(rng));
      // X2: Q_mn e_mn (x) e_mn ; X3: R_mn e_mn (x) e_nm
      x(ix(m * d + m), ix(n * d + n)) = q;
      x(ix(n * d + n), ix(m * d + m)) = std::conj(q);
      x(ix(m * d + n), ix(n * d + m)) = r;
      x(ix(n * d + m), ix(m * d + n)) = std::conj(r);
    }
  return x;
}

PreservationVerdict du_preserves_do_on(const DUSuperParams& p, const Matrix& x, double tol) {
  const std::size_t d = p.d();
  const Matrix y = representing_apply(build_choi(p), x);
  PreservationVerdict v;
  v.samples = 1;
  Matrix expect = Matrix::Zero(ix(d * d), ix(d * d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t b = 0; b < d; ++b) acc += p.A(i, a, j, b) * x(ix(j * d + b), ix(j * d + b));
      expect(ix(i * d + a), ix(i * d + a)) = acc;
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      expect(ix(i * d + i), ix(j * d + j)) = p.D(i, i, j, j) * x(ix(i * d + i), ix(j * d + j));
      expect(ix(i * d + j), ix(j * d + i)) = p.D(i, j, j, i) * x(ix(i * d + j), ix(j * d + i));
    }
  double off = 0.0, coef = 0.0;
  for (Idx c = 0; c < y.cols(); ++c)
    for (Idx r = 0; r < y.rows(); ++r) {
      const std::size_t i = static_cast<std::size_t>(r) / d, a = static_cast<std::size_t>(r) % d;
      const std::size_t j = static_cast<std::size_t>(c) / d, b = static_cast<std::size_t>(c) % d;
      const bool on = (i == j && a == b) || (i != j && a == i && b == j) || (i != j && a == j && b == i);
      if (on) coef = std::max(coef, std::abs(y(r, c) - expect(r, c)));
      else off = std::max(off, std::abs(y(r, c)));
    }
  v.max_off_pattern = off;
  v.max_coefficient_error = coef;
  v.passed = off <= tol && coef <= tol * std::max(1.0, max_abs(y));
  return v;
}

PreservationVerdict du_preserves_do_check(const DUSuperParams& p, std::size_t n, double tol,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PreservationVerdict v;
  v.passed = true;
  for (std::size_t k = 0; k < n; ++k) {
    const PreservationVerdict one = du_preserves_do_on(p, random_do_invariant_choi(p.d(), rng), tol);
    v.max_off_pattern = std::max(v.max_off_pattern, one.max_off_pattern);
    v.max_coefficient_error = std::max(v.max_coefficient_error, one.max_coefficient_error);
    v.passed = v.passed && one.passed;
  }
  v.samples = n;
  return v;
}

}  // namespace superchan
