// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>

#include "superchan/channel.hpp"
#include "superchan/superchannel.hpp"

namespace superchan {

enum class GroupKind { DiagonalUnitary, DiagonalOrthogonal, HaarUnitary };

const char* group_kind_name(GroupKind kind) noexcept;

// Seeded source of group elements. Not thread-safe: use one per thread.
class GroupSampler {
 public:
  GroupSampler(GroupKind kind, std::size_t d, std::uint64_t seed);

  Matrix next();

  GroupKind kind() const noexcept { return kind_; }
  std::size_t d() const noexcept { return d_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  GroupKind kind_;
  std::size_t d_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

// How a derived representation is obtained from a sampled element.
enum class Link { Same, Conjugate };

Matrix linked(const Matrix& u, Link link);

struct CovarianceVerdict {
  bool passed = false;
  double max_deviation = 0.0;
  std::size_t worst_sample = 0;
  std::size_t samples = 0;
  Matrix worst_u;
  Matrix worst_v;

  Report to_report() const;
};

// Conjugates the Choi by conj(U) (x) V with U from the sampler and V = U
// or conj(U) according to `output`.
CovarianceVerdict channel_covariance_check(const ChoiChannel& ch, GroupSampler& u, Link output,
                                           std::size_t n, double tol = kDefaultTol);

// Conjugation by U (x) conj(V) (x) conj(U') (x) V', U from g on A0, V from h
// on A1, with U' and V' linked to U and V.
CovarianceVerdict superchannel_covariance_check(const SuperChoi& s, GroupSampler& g, GroupSampler& h,
                                                Link u_prime, Link v_prime, std::size_t n,
                                                double tol = kDefaultTol);

struct CovarianceGroup {
  GroupKind kind;
  Link u_prime;
  Link v_prime;
};

namespace groups {
inline constexpr CovarianceGroup du{GroupKind::DiagonalUnitary, Link::Same, Link::Same};
inline constexpr CovarianceGroup dO{GroupKind::DiagonalOrthogonal, Link::Same, Link::Same};
inline constexpr CovarianceGroup haar{GroupKind::HaarUnitary, Link::Same, Link::Same};
inline constexpr CovarianceGroup conj_haar{GroupKind::HaarUnitary, Link::Conjugate, Link::Conjugate};
inline constexpr CovarianceGroup mixed{GroupKind::HaarUnitary, Link::Same, Link::Conjugate};
}  // namespace groups

// Square superchannels only; g and h are seeded from seed and seed + 1.
CovarianceVerdict superchannel_covariance_check(const SuperChoi& s, const CovarianceGroup& group,
                                                std::size_t n, std::uint64_t seed,
                                                double tol = kDefaultTol);

// --- unitary-covariant superchannel families --------------------------------

enum class UUVariant { Covariant, Conjugate, Mixed };

const char* uu_variant_name(UUVariant v) noexcept;

class UUFamilyParams {
 public:
  // Requires p0 + p1 + p2 + p3 = 1 within 1e-12.
  UUFamilyParams(UUVariant variant, const std::array<double, 4>& p, std::size_t d);

  UUVariant variant() const noexcept { return variant_; }
  const std::array<double, 4>& p() const noexcept { return p_; }
  std::size_t d() const noexcept { return d_; }

 private:
  UUVariant variant_;
  std::array<double, 4> p_;
  std::size_t d_;
};

SuperChoi uu_superchannel(const UUFamilyParams& params);
bool uu_cp_closed_form(const UUFamilyParams& params, double tol = 1e-12);
ChoiChannel uu_closed_form_action(const UUFamilyParams& params, const ChoiChannel& ch);
// (p0+p1) X + (p2+p3) D, with X = id, T, id for the three variants.
ChoiChannel uu_induced_marginal(const UUFamilyParams& params);
CovarianceGroup defining_group(UUVariant v) noexcept;

UUFamilyParams holevo_werner_params(std::size_t d);
SuperChoi holevo_werner_superchannel(std::size_t d);

}  // namespace superchan
