// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#include "superchan/do_superchannel.hpp"

#include <string>

#include "superchan/error.hpp"

namespace superchan {

namespace {

using Idx = Eigen::Index;

Idx ix(std::size_t v) { return static_cast<Idx>(v); }

struct Position {
  Idx row, col;
};

Idx choi_index(std::size_t d, std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  return ix(((p * d + q) * d + r) * d + s);
}

// Choi position of table entry (ia, jb); the entry must be in support.
Position position(DOTable t, std::size_t d, std::size_t i, std::size_t a, std::size_t j, std::size_t b) {
  auto at = [d](std::size_t p, std::size_t q, std::size_t r, std::size_t s,
                std::size_t p2, std::size_t q2, std::size_t r2, std::size_t s2) {
    return Position{choi_index(d, p, q, r, s), choi_index(d, p2, q2, r2, s2)};
  };
  switch (t) {
    case DOTable::A: return at(j, b, i, a, j, b, i, a);  // e_jj (x) e_bb (x) e_ii (x) e_aa
    case DOTable::B: return at(j, a, i, a, j, b, i, b);  // e_jj (x) e_ab (x) e_ii (x) e_ab
    case DOTable::C: return at(i, b, i, a, j, b, j, a);  // e_ij (x) e_bb (x) e_ij (x) e_aa
    case DOTable::D: return at(i, a, i, a, j, b, j, b);  // e_ij (x) e_ab (x) e_ij (x) e_ab
    case DOTable::E: return at(i, a, j, b, j, a, i, b);  // e_ij (x) e_aa (x) e_ji (x) e_bb
    case DOTable::P: return at(i, a, j, a, j, b, i, b);  // e_ij (x) e_ab (x) e_ji (x) e_ab
    case DOTable::Q: return at(i, a, j, b, j, b, i, a);  // e_ij (x) e_ab (x) e_ji (x) e_ba
    case DOTable::R: return at(i, a, j, b, i, b, j, a);  // e_ii (x) e_ab (x) e_jj (x) e_ba
    case DOTable::S: return at(i, a, i, b, j, b, j, a);  // e_ij (x) e_ab (x) e_ij (x) e_ba
  }
  throw Error(ErrorCode::InvalidArgument, "unknown table");
}

template <class F>
void for_each_entry(std::size_t d, F f) {
  for (DOTable t : kDOTables)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t b = 0; b < d; ++b)
            if (do_in_support(t, i, a, j, b)) f(t, i, a, j, b, position(t, d, i, a, j, b));
}

}  // namespace

const char* do_table_name(DOTable t) noexcept {
  static constexpr const char* names[] = {"A", "B", "C", "D", "E", "P", "Q", "R", "S"};
  return names[static_cast<std::size_t>(t)];
}

bool do_in_support(DOTable t, std::size_t i, std::size_t a, std::size_t j, std::size_t b) noexcept {
  switch (t) {
    case DOTable::A: return true;
    case DOTable::B: return a != b;
    case DOTable::C: return i != j;
    case DOTable::D: return i != j && a != b;
    case DOTable::E: return i != j;
    case DOTable::P: return i != j && a != b;
    case DOTable::Q: return i != j && a != b;
    case DOTable::R: return a != b;
    case DOTable::S: return i != j && a != b;
  }
  return false;
}

DOSuperParams::DOSuperParams(std::size_t d, std::array<Matrix, 9> tables) : d_(d), tables_(std::move(tables)) {
  if (d_ < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  const Idx n = ix(d_ * d_);
  for (DOTable t : kDOTables) {
    const Matrix& m = table(t);
    if (m.rows() != n || m.cols() != n)
      throw Error(ErrorCode::DimensionMismatch, std::string("table ") + do_table_name(t) + " must be d^2 x d^2");
    if (!all_finite(m)) throw Error(ErrorCode::InvalidArgument, std::string("table ") + do_table_name(t) + " has non-finite entries");
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t a = 0; a < d_; ++a)
        for (std::size_t j = 0; j < d_; ++j)
          for (std::size_t b = 0; b < d_; ++b)
            if (!do_in_support(t, i, a, j, b) && m(ix(pair_index(i, a, d_)), ix(pair_index(j, b, d_))) != Complex(0.0))
              throw Error(ErrorCode::InvalidArgument,
                          std::string("table ") + do_table_name(t) + " has a nonzero entry outside its support");
  }
}

DOSuperParams do_embed_du(const DUSuperParams& p) {
  const Idx n = ix(p.d() * p.d());
  std::array<Matrix, 9> t;
  t[0] = p.A().cast<Complex>();
  t[1] = p.B();
  t[2] = p.C();
  t[3] = p.D();
  for (std::size_t k = 4; k < 9; ++k) t[k] = Matrix::Zero(n, n);
  return {p.d(), std::move(t)};
}

SuperChoi do_build_choi(const DOSuperParams& p) {
  const std::size_t d = p.d();
  const Idx n = ix(d * d * d * d);
  Matrix m = Matrix::Zero(n, n);
  for_each_entry(d, [&](DOTable t, std::size_t i, std::size_t a, std::size_t j, std::size_t b, Position pos) {
    m(pos.row, pos.col) += p.at(t, i, a, j, b);
  });
  return {SuperDims{d, d, d, d}, std::move(m)};
}

DOSuperParams do_from_choi(const SuperChoi& s, double tol) {
  const std::size_t d = s.square_dim();
  const Idx n = ix(d * d);
  std::array<Matrix, 9> t;
  for (auto& m : t) m = Matrix::Zero(n, n);
  Matrix rest = s.matrix();
  for_each_entry(d, [&](DOTable tab, std::size_t i, std::size_t a, std::size_t j, std::size_t b, Position pos) {
    t[static_cast<std::size_t>(tab)](ix(pair_index(i, a, d)), ix(pair_index(j, b, d))) = s.matrix()(pos.row, pos.col);
    rest(pos.row, pos.col) = 0.0;
  });
  const double residual = max_abs(rest);
  if (residual > tol)
    throw NotCovariantError(ErrorCode::NotDOCovariant,
                            "Choi matrix is not diagonal-orthogonal covariant (residual " + format_double(residual) + ")",
                            residual);
  return {d, std::move(t)};
}

Report DOVerdict::to_report() const {
  Report r("do-superchannel");
  r.merge(generic.to_report(), "");
  r.merge(tp.to_report(), "tp.");
  r.add("valid", valid());
  return r;
}

DOVerdict do_validate(const DOSuperParams& p, double tol) {
  const SuperChoi s = do_build_choi(p);
  return {validate_superchannel(s, tol), tp_preserving_check(s, tol)};
}

}  // namespace superchan
