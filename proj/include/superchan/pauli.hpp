// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "superchan/channel.hpp"
#include "superchan/superchannel.hpp"

namespace superchan {

using Prob4 = std::array<double, 4>;

// sigma_0 = I, sigma_1 = x, sigma_2 = y, sigma_3 = z.
const std::array<Matrix, 4>& pauli_matrices();

// Unnormalized Bell vector (I (x) sigma_alpha) sum_i |ii>.
Vector bell_vector(int alpha);

// Two-qubit label product: sigma_mu sigma_nu is proportional to sigma_{mu ^ nu}.
inline constexpr int pauli_xor(int mu, int nu) noexcept { return mu ^ nu; }

class PauliSuperParams {
 public:
  // Entries >= -1e-12 and total within 1e-12 of 1.
  explicit PauliSuperParams(const Eigen::Matrix4d& pi);

  const Eigen::Matrix4d& pi() const noexcept { return pi_; }
  double pi(int mu, int nu) const noexcept { return pi_(mu, nu); }

 private:
  Eigen::Matrix4d pi_;
};

// Delta(X) = sum pi_{mu nu} (s_mu (x) s_nu) X (s_mu (x) s_nu)
SuperChoi pauli_super_choi(const PauliSuperParams& p);

// pi_{mu nu} = <<s_mu (x) s_nu| C |s_mu (x) s_nu>> / 16. Throws
// InvalidArgument when s is not a Pauli superchannel within tol.
PauliSuperParams pauli_from_choi(const SuperChoi& s, double tol = kDefaultTol);

struct PauliDUVerdict {
  bool equalities_hold = false;
  double max_violation = 0.0;
  bool extraction_succeeds = false;
  double extraction_residual = 0.0;

  bool du_covariant() const noexcept { return equalities_hold; }
  bool agrees() const noexcept { return equalities_hold == extraction_succeeds; }
  Report to_report() const;
};

// pi_{a1} = pi_{a2} and pi_{1a} = pi_{2a}, cross-checked by DU read-off.
PauliDUVerdict pauli_du_check(const PauliSuperParams& p, double tol = kDefaultTol);

// M_{ab} = sum over mu ^ nu = a ^ b of pi_{mu nu}
Eigen::Matrix4d pauli_induced_bistochastic(const PauliSuperParams& p);

Prob4 pauli_apply(const PauliSuperParams& p, const Prob4& q_in);

// p_alpha = <B_alpha| C |B_alpha> / 4 for a qubit channel Choi C.
Prob4 bell_diagonal_readoff(const ChoiChannel& ch);

ChoiChannel pauli_marginal_channel(const PauliSuperParams& p);

PauliSuperParams pauli_compose(const PauliSuperParams& p2, const PauliSuperParams& p1);

}  // namespace superchan
