// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "superchan/channel.hpp"
#include "superchan/operator.hpp"
#include "superchan/report.hpp"

namespace superchan {

struct SuperDims {
  std::size_t a0 = 0, a1 = 0, b0 = 0, b1 = 0;

  std::size_t in() const noexcept { return a0 * a1; }
  std::size_t out() const noexcept { return b0 * b1; }
  bool operator==(const SuperDims&) const = default;
};

// Choi matrix of the representing map A0 (x) A1 -> B0 (x) B1, stored on
// subsystems (A0, A1, B0, B1).
class SuperChoi {
 public:
  SuperChoi(SuperDims dims, Matrix choi);
  explicit SuperChoi(MultipartiteOperator choi);

  const SuperDims& dims() const noexcept { return dims_; }
  const MultipartiteOperator& choi() const noexcept { return choi_; }
  const Matrix& matrix() const noexcept { return choi_.matrix(); }

  // Dimensions shared by all four subsystems; throws if they differ.
  std::size_t square_dim() const;

 private:
  SuperDims dims_;
  MultipartiteOperator choi_;
};

SuperChoi identity_superchannel(std::size_t d_a0, std::size_t d_a1);

// Input and output tagged (dA0, dA1) and (dB0, dB1).
MultipartiteOperator representing_apply(const SuperChoi& s, const MultipartiteOperator& x);
Matrix representing_apply(const SuperChoi& s, const Matrix& x);
// Theta[Phi] for a channel Phi: A0 -> A1.
ChoiChannel apply_superchannel(const SuperChoi& s, const ChoiChannel& phi);

struct SuperchannelVerdict {
  bool hermitian = false;
  bool is_cp = false;
  bool factorizes = false;
  bool marginal_ok = false;
  double min_eigenvalue = 0.0;
  double factorization_deviation = 0.0;
  double marginal_deviation = 0.0;

  bool valid() const noexcept { return is_cp && factorizes && marginal_ok; }
  Report to_report() const;
};

SuperchannelVerdict validate_superchannel(const SuperChoi& s, double tol = kDefaultTol);

struct TPCheck {
  bool off_diagonal_vanishes = false;
  bool a_independent = false;
  bool unital = false;
  double off_diagonal_deviation = 0.0;
  double a_dependence = 0.0;
  double unital_deviation = 0.0;
  // Induced map M_{A0} -> M_{B0}.
  ChoiChannel induced;

  bool passed() const noexcept { return off_diagonal_vanishes && a_independent && unital; }
  Report to_report() const;
};

TPCheck tp_preserving_check(const SuperChoi& s, double tol = kDefaultTol);

// Theta[Phi] = n1 o Phi o n0^*, with n0: A0 -> B0 and n1: A1 -> B1.
SuperChoi sandwich_superchannel(const ChoiChannel& n0, const ChoiChannel& n1);

// Choi of f (x) g with f: A0 -> B0 and g: A1 -> B1.
SuperChoi tensor_map(const ChoiChannel& f, const ChoiChannel& g);

// Theta2 o Theta1
SuperChoi compose_superchannels(const SuperChoi& s2, const SuperChoi& s1);

struct ClassicalSuperchannel {
  std::size_t a0 = 0, a1 = 0, b0 = 0, b1 = 0;
  // Rows (j,b) -> j*b1 + b over B0 x B1, columns (i,a) -> i*a1 + a over A0 x A1.
  RealMatrix T;
  // t_{ji} = sum_b T_{jb,ia}, taken at a = 0.
  RealMatrix t;
  double min_entry = 0.0;
  // max over (j,i,a) of |sum_b T_{jb,ia} - t_{ji}|
  double marginal_deviation = 0.0;
  // max over j of |sum_i t_{ji} - 1|
  double normalization_deviation = 0.0;

  bool satisfies(double tol) const noexcept {
    return min_entry >= -tol && marginal_deviation <= tol && normalization_deviation <= tol;
  }
  // pi'_{bj} = sum_{ia} T_{jb,ia} pi_{ai}; pi is |A1| x |A0|.
  RealMatrix act(const RealMatrix& pi) const;
};

ClassicalSuperchannel classical_superchannel_extract(const SuperChoi& s);

}  // namespace superchan
