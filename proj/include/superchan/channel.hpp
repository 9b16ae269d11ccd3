// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "superchan/operator.hpp"
#include "superchan/report.hpp"

namespace superchan {

// Choi-level linear-map kernels shared by channels and superchannels.
// A Choi matrix of a map M_{d_in} -> M_{d_out} has the block (i,j) equal
// to the image of the matrix unit e_ij.
Matrix choi_apply(const Matrix& choi, std::size_t d_in, std::size_t d_out, const Matrix& x);
// Choi of f o g, where g: M_{g_in} -> M_{mid} and f: M_{mid} -> M_{f_out}.
Matrix choi_compose(const Matrix& f, std::size_t f_out, const Matrix& g, std::size_t g_in,
                    std::size_t mid);

class ChoiChannel {
 public:
  ChoiChannel(std::size_t d_in, std::size_t d_out, Matrix choi);
  explicit ChoiChannel(MultipartiteOperator choi);

  std::size_t d_in() const noexcept { return d_in_; }
  std::size_t d_out() const noexcept { return d_out_; }
  const MultipartiteOperator& choi() const noexcept { return choi_; }
  const Matrix& matrix() const noexcept { return choi_.matrix(); }

 private:
  std::size_t d_in_;
  std::size_t d_out_;
  MultipartiteOperator choi_;
};

ChoiChannel choi_from_kraus(std::span<const Matrix> kraus);

MultipartiteOperator apply_channel(const ChoiChannel& ch, const MultipartiteOperator& rho);
Matrix apply_channel(const ChoiChannel& ch, const Matrix& rho);

struct ChannelVerdict {
  bool hermitian = false;
  bool is_cp = false;
  bool is_tp = false;
  double min_eigenvalue = 0.0;
  double marginal_deviation = 0.0;

  bool valid() const noexcept { return is_cp && is_tp; }
  Report to_report() const;
};

ChannelVerdict validate_channel(const ChoiChannel& ch, double tol = kDefaultTol);

// f o g
ChoiChannel compose_channels(const ChoiChannel& f, const ChoiChannel& g);

// Linear combination of maps with equal shapes.
ChoiChannel combine(std::span<const double> weights, std::span<const ChoiChannel> maps);

// S_{ai} = <i a| C |i a>, rows indexed by output a.
RealMatrix classical_channel_extract(const ChoiChannel& ch);

namespace channels {

ChoiChannel identity(std::size_t d);
ChoiChannel depolarizing(std::size_t d);
ChoiChannel transpose_map(std::size_t d);
ChoiChannel unitary_conjugation(const Matrix& u);
ChoiChannel amplitude_damping(double gamma);
ChoiChannel bit_flip(double p);
ChoiChannel pauli_channel(const std::array<double, 4>& p);
// Phi(X) = M o X for a correlation matrix M (PSD with unit diagonal).
ChoiChannel dephasing_channel(const Matrix& m, double tol = kDefaultTol);

ChoiChannel unitary_covariant(double lambda, std::size_t d);
ChoiChannel conjugate_covariant(double mu, std::size_t d);
ChoiChannel holevo_werner(std::size_t d);
ChoiChannel orthogonal_covariant(double alpha, double beta, std::size_t d);

}  // namespace channels

// --- diagonal-unitary covariant channels -----------------------------------

// Phi(X) = sum_ij A_ij e_ij X e_ij^dag + sum_{i!=j} B_ij e_ii X e_jj
class DUChannelParams {
 public:
  DUChannelParams(RealMatrix a, Matrix b);

  std::size_t d() const noexcept { return static_cast<std::size_t>(a_.rows()); }
  const RealMatrix& A() const noexcept { return a_; }
  const Matrix& B() const noexcept { return b_; }
  // B with its diagonal replaced by the diagonal of A.
  Matrix bbb() const;

 private:
  RealMatrix a_;
  Matrix b_;
};

// Phi(X) = sum_ij A_ij e_ij X e_ij^dag + sum_{i!=j} C_ij e_ii X^T e_jj
class ConjDUChannelParams {
 public:
  ConjDUChannelParams(RealMatrix a, Matrix c);

  std::size_t d() const noexcept { return static_cast<std::size_t>(a_.rows()); }
  const RealMatrix& A() const noexcept { return a_; }
  const Matrix& C() const noexcept { return c_; }

 private:
  RealMatrix a_;
  Matrix c_;
};

// Union of the two forms above.
class DOChannelParams {
 public:
  DOChannelParams(RealMatrix a, Matrix b, Matrix c);

  std::size_t d() const noexcept { return static_cast<std::size_t>(a_.rows()); }
  const RealMatrix& A() const noexcept { return a_; }
  const Matrix& B() const noexcept { return b_; }
  const Matrix& C() const noexcept { return c_; }
  Matrix bbb() const;

 private:
  RealMatrix a_;
  Matrix b_;
  Matrix c_;
};

struct DUChannelVerdict {
  bool a_nonnegative = false;
  bool bbb_psd = true;
  bool c_bounded = true;
  bool column_stochastic = false;
  double min_a = 0.0;
  double min_eig_bbb = 0.0;
  double c_violation = 0.0;
  double stochastic_deviation = 0.0;

  bool is_cp() const noexcept { return a_nonnegative && bbb_psd && c_bounded; }
  bool valid() const noexcept { return is_cp() && column_stochastic; }
  Report to_report() const;
};

ChoiChannel du_channel(const DUChannelParams& p);
ChoiChannel conj_du_channel(const ConjDUChannelParams& p);
ChoiChannel do_channel(const DOChannelParams& p);

DUChannelVerdict du_channel_validate(const DUChannelParams& p, double tol = kDefaultTol);
DUChannelVerdict conj_du_channel_validate(const ConjDUChannelParams& p, double tol = kDefaultTol);
DUChannelVerdict do_channel_validate(const DOChannelParams& p, double tol = kDefaultTol);

// Parameters of p o q.
DUChannelParams du_channel_compose(const DUChannelParams& p, const DUChannelParams& q);

}  // namespace superchan
