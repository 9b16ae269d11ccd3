// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>

#include "superchan/du_superchannel.hpp"
#include "superchan/superchannel.hpp"

namespace superchan {

enum class DOTable { A, B, C, D, E, P, Q, R, S };

inline constexpr std::array<DOTable, 9> kDOTables{DOTable::A, DOTable::B, DOTable::C, DOTable::D, DOTable::E,
                                                  DOTable::P, DOTable::Q, DOTable::R, DOTable::S};

const char* do_table_name(DOTable t) noexcept;
bool do_in_support(DOTable t, std::size_t i, std::size_t a, std::size_t j, std::size_t b) noexcept;

// Nine complex d^2 x d^2 tables of a diagonal-orthogonal covariant supermap.
// A..D sit where the diagonal-unitary tables sit; E..S fill the extra
// positions allowed by sign-matrix covariance.
class DOSuperParams {
 public:
  DOSuperParams(std::size_t d, std::array<Matrix, 9> tables);

  std::size_t d() const noexcept { return d_; }
  const Matrix& table(DOTable t) const noexcept { return tables_[static_cast<std::size_t>(t)]; }
  Complex at(DOTable t, std::size_t i, std::size_t a, std::size_t j, std::size_t b) const noexcept {
    return table(t)(static_cast<Eigen::Index>(pair_index(i, a, d_)), static_cast<Eigen::Index>(pair_index(j, b, d_)));
  }
  const std::array<Matrix, 9>& tables() const noexcept { return tables_; }

 private:
  std::size_t d_;
  std::array<Matrix, 9> tables_;
};

DOSuperParams do_embed_du(const DUSuperParams& p);

SuperChoi do_build_choi(const DOSuperParams& p);

// Throws NotCovariantError(NotDOCovariant) when the reconstruction residual exceeds tol.
DOSuperParams do_from_choi(const SuperChoi& s, double tol = kDefaultTol);

struct DOVerdict {
  SuperchannelVerdict generic;
  TPCheck tp;

  bool valid() const noexcept { return generic.valid() && tp.passed(); }
  Report to_report() const;
};

DOVerdict do_validate(const DOSuperParams& p, double tol = kDefaultTol);

}  // namespace superchan
