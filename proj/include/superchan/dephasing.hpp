// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>

#include "superchan/channel.hpp"
#include "superchan/du_superchannel.hpp"
#include "superchan/superchannel.hpp"

namespace superchan {

// Representing map C -> M_big o C, with M_big in the (ia),(jb) flattening.
class DephasingSuperParams {
 public:
  DephasingSuperParams(std::size_t d, Matrix m_big);

  std::size_t d() const noexcept { return d_; }
  const Matrix& M_big() const noexcept { return m_; }
  Complex M_big(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const noexcept {
    return m_(static_cast<Eigen::Index>(pair_index(i, a, d_)), static_cast<Eigen::Index>(pair_index(j, b, d_)));
  }
  // Channel-level covariance matrix M_ij = M_big_{i0,j0}.
  Matrix channel_matrix() const;

 private:
  std::size_t d_;
  Matrix m_;
};

ChoiChannel dephasing_super_apply(const DephasingSuperParams& p, const ChoiChannel& c);
SuperChoi dephasing_super_choi(const DephasingSuperParams& p);

struct DephasingVerdict {
  bool psd = false;
  bool fiber_consistent = false;
  bool unit_diagonal = false;
  double min_eigenvalue = 0.0;
  double fiber_deviation = 0.0;
  double diagonal_deviation = 0.0;
  // Worst fiber location: |M_{ia,ja} - M_{ia',ja'}| largest at (i, j, a, a').
  std::size_t witness_i = 0, witness_j = 0, witness_a = 0, witness_a2 = 0;
  // validate_superchannel and tp_preserving_check on the induced Choi.
  bool generic_valid = false;

  bool valid() const noexcept { return psd && fiber_consistent && unit_diagonal; }
  bool agrees() const noexcept { return valid() == generic_valid; }
  Report to_report() const;
};

DephasingVerdict dephasing_validate(const DephasingSuperParams& p, double tol = kDefaultTol);

// M_big_{ia,jb} = <psi| U_j^dag V_b^dag V_a U_i |psi>.
DephasingSuperParams dephasing_from_realization(std::span<const Matrix> u, std::span<const Matrix> v,
                                                const Vector& psi);

// M~_ij = M_big_{ii,jj} M_ij.
Matrix dephasing_on_dephasing(const DephasingSuperParams& p, const Matrix& m_chan, double tol = kDefaultTol);

DUSuperParams dephasing_embed_du(const DephasingSuperParams& p);
// Inverse of the embedding; throws InvalidArgument if p has entries the
// embedding never produces beyond tol.
DephasingSuperParams dephasing_from_du(const DUSuperParams& p, double tol = kDefaultTol);

DephasingSuperParams dephasing_compose(const DephasingSuperParams& p, const DephasingSuperParams& q);

}  // namespace superchan
