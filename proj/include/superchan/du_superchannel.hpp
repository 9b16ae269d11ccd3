// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "superchan/channel.hpp"
#include "superchan/superchannel.hpp"

namespace superchan {

// Pair flattening used by every d^2 x d^2 parameter table: (i, a) -> i*d + a,
// i on A0/B0 and a on A1/B1.
inline std::size_t pair_index(std::size_t i, std::size_t a, std::size_t d) noexcept { return i * d + a; }

enum class DUTable { A, B, C, D };

// Support of each table: A everywhere, B a != b, C i != j, D i != j and a != b.
bool du_in_support(DUTable t, std::size_t i, std::size_t a, std::size_t j, std::size_t b) noexcept;

// Parameters of a diagonal-unitary covariant supermap on M_d -> M_d.
// Construction checks the support masks (entries outside must be exactly
// zero) and the Hermiticity relations
//   B_{ia,jb} = conj B_{ib,ja},  C_{ia,jb} = conj C_{ja,ib},  D_{ia,jb} = conj D_{jb,ia}.
class DUSuperParams {
 public:
  DUSuperParams(std::size_t d, RealMatrix a, Matrix b, Matrix c, Matrix dd);

  std::size_t d() const noexcept { return d_; }
  const RealMatrix& A() const noexcept { return a_; }
  const Matrix& B() const noexcept { return b_; }
  const Matrix& C() const noexcept { return c_; }
  const Matrix& D() const noexcept { return d_tab_; }

  double A(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const noexcept {
    return a_(idx(i, a), idx(j, b));
  }
  Complex B(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const noexcept {
    return b_(idx(i, a), idx(j, b));
  }
  Complex C(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const noexcept {
    return c_(idx(i, a), idx(j, b));
  }
  Complex D(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const noexcept {
    return d_tab_(idx(i, a), idx(j, b));
  }

 private:
  Eigen::Index idx(std::size_t i, std::size_t a) const noexcept {
    return static_cast<Eigen::Index>(pair_index(i, a, d_));
  }

  std::size_t d_;
  RealMatrix a_;
  Matrix b_, c_, d_tab_;
};

// Zeroes every entry outside the table's support.
Matrix du_mask(DUTable t, std::size_t d, const Matrix& m);

DUSuperParams du_identity(std::size_t d);

SuperChoi build_choi(const DUSuperParams& p);

// Throws NotCovariantError(NotDUCovariant) when the reconstruction residual exceeds tol.
DUSuperParams du_from_choi(const SuperChoi& s, double tol = kDefaultTol);

struct DUTPWitness {
  RealMatrix alpha;  // alpha_{ij} = sum_a A_{ia,jb} at b = 0
  Matrix gamma;      // gamma_{ij} = sum_a C_{ia,jb} at b = 0, i != j
};

struct DUTPVerdict {
  bool alpha_b_independent = false;
  bool gamma_b_independent = false;
  bool rows_stochastic = false;
  double alpha_b_dependence = 0.0;
  double gamma_b_dependence = 0.0;
  double row_sum_deviation = 0.0;
  // Worst b-dependence location (i, j, b, b') over both sums.
  std::size_t witness_i = 0, witness_j = 0, witness_b = 0, witness_b2 = 0;
  DUTPWitness witness;

  bool passed() const noexcept { return alpha_b_independent && gamma_b_independent && rows_stochastic; }
  Report to_report() const;
};

DUTPVerdict du_tp_check(const DUSuperParams& p, double tol = kDefaultTol);

// M_ab = sum_ij A_{ia,jb} e_jj (x) e_ii + sum_{i!=j} C_{ia,jb} e_ij (x) e_ij on (A0, B0).
Matrix du_m_block(const DUSuperParams& p, std::size_t a, std::size_t b);
// Same shape with B and D.
Matrix du_n_block(const DUSuperParams& p, std::size_t a, std::size_t b);
// sum_a e_aa (x) M_aa + sum_{a!=b} e_ab (x) N_ab
Matrix du_cp_block_matrix(const DUSuperParams& p);

enum class CpCheckMode { ClosedFormOnly, WithOracle };

struct DUCPVerdict {
  bool off_diagonal_m_psd = false;
  bool block_psd = false;
  double min_eig_off_diagonal_m = 0.0;
  double min_eig_block = 0.0;
  bool oracle_ran = false;
  bool oracle_psd = false;
  double oracle_min_eig = 0.0;

  bool closed_form() const noexcept { return off_diagonal_m_psd && block_psd; }
  bool agrees() const noexcept { return !oracle_ran || oracle_psd == closed_form(); }
  // Closed form accepted and, if the oracle ran, both paths agree.
  bool passed() const noexcept { return closed_form() && agrees(); }
  Report to_report() const;
};

DUCPVerdict du_cp_check(const DUSuperParams& p, double tol = kDefaultTol,
                        CpCheckMode mode = CpCheckMode::WithOracle);

// Parameters of the composition p o q.
DUSuperParams du_compose(const DUSuperParams& p, const DUSuperParams& q);

// Block formulas for the output of the representing map.
Matrix du_block_action(const DUSuperParams& p, const Matrix& x);
MultipartiteOperator du_block_action(const DUSuperParams& p, const MultipartiteOperator& x);

struct DUIdentityAction {
  ChoiChannel channel;
  RealMatrix S;         // S_{ij} = sum_k A_{ji,kk}
  DUChannelParams params;  // A = S, B_{ij} = D_{ii,jj}
};

DUIdentityAction du_action_on_identity(const DUSuperParams& p);

struct PreservationVerdict {
  bool passed = false;
  std::size_t samples = 0;
  double max_off_pattern = 0.0;
  double max_coefficient_error = 0.0;

  Report to_report() const;
};

// Choi of a random diagonal-orthogonal covariant channel on M_d.
Matrix random_do_invariant_choi(std::size_t d, std::mt19937_64& rng);

PreservationVerdict du_preserves_do_check(const DUSuperParams& p, std::size_t n, double tol = 1e-12,
                                          std::uint64_t seed = 0);
// Same check on a single input Choi.
PreservationVerdict du_preserves_do_on(const DUSuperParams& p, const Matrix& x, double tol = 1e-12);

}  // namespace superchan
