// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

// Random instance generators and independent reference computations shared
// by the unit and acceptance tests.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "superchan/channel.hpp"
#include "superchan/dephasing.hpp"
#include "superchan/do_superchannel.hpp"
#include "superchan/du_superchannel.hpp"
#include "superchan/operator.hpp"
#include "superchan/pauli.hpp"
#include "superchan/superchannel.hpp"

namespace sctest {

using namespace superchan;
using Rng = std::mt19937_64;

inline Eigen::Index ix(std::size_t k) { return static_cast<Eigen::Index>(k); }

inline Matrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(ix(rows), ix(cols));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = Complex(g(rng), g(rng));
  return m;
}

inline Matrix random_hermitian(std::size_t n, Rng& rng) {
  const Matrix g = ginibre(n, n, rng);
  return (g + g.adjoint()) / 2.0;
}

inline Matrix random_psd(std::size_t n, std::size_t rank, Rng& rng) {
  const Matrix g = ginibre(n, rank, rng);
  return g * g.adjoint();
}

// QR of a Ginibre matrix with the phases of R's diagonal divided out.
inline Matrix haar_unitary(std::size_t d, Rng& rng) {
  Eigen::HouseholderQR<Matrix> qr(ginibre(d, d, rng));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex z = r(k, k);
    const double n = std::abs(z);
    if (n > 0) q.col(k) *= z / n;
  }
  return q;
}

inline Vector random_unit_vector(std::size_t d, Rng& rng) {
  Vector v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

// Kraus operators cut from a random isometry d_in -> d_out * rank.
inline ChoiChannel random_channel(std::size_t d_in, std::size_t d_out, Rng& rng, std::size_t rank = 0) {
  if (rank == 0) rank = d_in * d_out;
  Eigen::HouseholderQR<Matrix> qr(ginibre(d_out * rank, d_in, rng));
  const Matrix iso = Matrix(qr.householderQ()).leftCols(ix(d_in));
  std::vector<Matrix> kraus;
  for (std::size_t k = 0; k < rank; ++k) kraus.push_back(iso.middleRows(ix(k * d_out), ix(d_out)));
  return choi_from_kraus(kraus);
}

inline Matrix random_density(std::size_t d, Rng& rng) {
  Matrix p = random_psd(d, d, rng);
  return p / p.trace().real();
}

// Generic valid superchannel Theta[Phi] = post o (Phi (x) id_E) o pre, with
// pre: B0 -> A0 (x) E and post: A1 (x) E -> B1 random channels.
inline SuperChoi random_superchannel(const SuperDims& dims, Rng& rng, std::size_t env = 2) {
  const ChoiChannel pre = random_channel(dims.b0, dims.a0 * env, rng);
  const ChoiChannel post = random_channel(dims.a1 * env, dims.b1, rng);
  const std::size_t din = dims.in(), dout = dims.out();
  Matrix choi = Matrix::Zero(ix(din * dout), ix(din * dout));
  for (std::size_t r = 0; r < din; ++r)
    for (std::size_t c = 0; c < din; ++c) {
      const ChoiChannel phi(dims.a0, dims.a1, matrix_unit(din, r, c));
      const Matrix phi_env = tensor_map(phi, channels::identity(env)).matrix();
      const Matrix mid = choi_compose(phi_env, dims.a1 * env, pre.matrix(), dims.b0, dims.a0 * env);
      const Matrix out = choi_compose(post.matrix(), dims.b1, mid, dims.b0, dims.a1 * env);
      choi.block(ix(r * dout), ix(c * dout), ix(dout), ix(dout)) = out;
    }
  return SuperChoi(dims, choi);
}

// Invariance rules derived directly from the four-fold conjugation: an
// entry at row (i0,a0,j0,b0), col (i1,a1,j1,b1) survives twirling over
// independent diagonal phases u on A0/B0 and v on A1/B1 iff the u and v
// exponents cancel.
inline bool du_invariant_position(std::size_t d, std::size_t row, std::size_t col) {
  const Dims dims{d, d, d, d};
  const auto r = unflatten(dims, row), c = unflatten(dims, col);
  for (std::size_t k = 0; k < d; ++k) {
    const int u = int(r[0] == k) - int(r[2] == k) - int(c[0] == k) + int(c[2] == k);
    const int v = -int(r[1] == k) + int(r[3] == k) + int(c[1] == k) - int(c[3] == k);
    if (u != 0 || v != 0) return false;
  }
  return true;
}

// Same with signs: every label must occur an even number of times.
inline bool do_invariant_position(std::size_t d, std::size_t row, std::size_t col) {
  const Dims dims{d, d, d, d};
  const auto r = unflatten(dims, row), c = unflatten(dims, col);
  for (std::size_t k = 0; k < d; ++k) {
    const int u = int(r[0] == k) + int(r[2] == k) + int(c[0] == k) + int(c[2] == k);
    const int v = int(r[1] == k) + int(r[3] == k) + int(c[1] == k) + int(c[3] == k);
    if (u % 2 != 0 || v % 2 != 0) return false;
  }
  return true;
}

template <class Pred>
SuperChoi mask_superchannel(const SuperChoi& s, Pred keep) {
  const std::size_t d = s.square_dim();
  Matrix m = s.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!keep(d, static_cast<std::size_t>(r), static_cast<std::size_t>(c))) m(r, c) = 0.0;
  return SuperChoi(s.dims(), m);
}

// Twirling a valid superchannel over the diagonal group keeps it valid; the
// twirl is exactly the projection onto invariant positions.
inline DUSuperParams random_valid_du(std::size_t d, Rng& rng) {
  const SuperChoi s = random_superchannel({d, d, d, d}, rng);
  return du_from_choi(mask_superchannel(s, du_invariant_position), 1e-12);
}

inline DOSuperParams random_valid_do(std::size_t d, Rng& rng) {
  const SuperChoi s = random_superchannel({d, d, d, d}, rng);
  return do_from_choi(mask_superchannel(s, do_invariant_position), 1e-12);
}

// Hermitian, pattern-respecting but otherwise unconstrained tables.
inline DUSuperParams random_hermitian_du(std::size_t d, Rng& rng) {
  const std::size_t n = d * d * d * d;
  const SuperChoi s({d, d, d, d}, random_hermitian(n, rng));
  return du_from_choi(mask_superchannel(s, du_invariant_position), 1e-12);
}

inline DUSuperParams scaled_sum(const DUSuperParams& p, double wp, const DUSuperParams& q, double wq) {
  return DUSuperParams(p.d(), wp * p.A() + wq * q.A(), wp * p.B() + wq * q.B(), wp * p.C() + wq * q.C(),
                       wp * p.D() + wq * q.D());
}

// Random DU channel: projection of a random channel onto invariant positions.
inline ChoiChannel random_du_channel(std::size_t d, Rng& rng) {
  Matrix m = random_channel(d, d, rng).matrix();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t b = 0; b < d; ++b) {
          const bool keep = (i == a && j == b) || (i == j && a == b);
          if (!keep) m(ix(i * d + a), ix(j * d + b)) = 0.0;
        }
  return ChoiChannel(d, d, m);
}

inline Prob4 random_prob4(Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  Prob4 p{};
  double s = 0;
  for (auto& x : p) s += (x = e(rng));
  for (auto& x : p) x /= s;
  return p;
}

inline Eigen::Matrix4d random_pi(Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  Eigen::Matrix4d pi;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) pi(r, c) = e(rng);
  return pi / pi.sum();
}

// Enforces pi_{a1} = pi_{a2} and pi_{1a} = pi_{2a} by averaging.
inline Eigen::Matrix4d symmetrize_pi(Eigen::Matrix4d pi) {
  for (int r = 0; r < 4; ++r) pi(r, 1) = pi(r, 2) = (pi(r, 1) + pi(r, 2)) / 2;
  for (int c = 0; c < 4; ++c) pi(1, c) = pi(2, c) = (pi(1, c) + pi(2, c)) / 2;
  return pi;
}

struct RandomRealization {
  std::vector<Matrix> u, v;
  Vector psi;
};

inline RandomRealization random_realization(std::size_t d, std::size_t e, Rng& rng) {
  RandomRealization r;
  for (std::size_t k = 0; k < d; ++k) {
    r.u.push_back(haar_unitary(e, rng));
    r.v.push_back(haar_unitary(e, rng));
  }
  r.psi = random_unit_vector(e, rng);
  return r;
}

// Channel-level evaluation Phi(rho) = sum_ij rho_ij Phi(e_ij) read directly
// from Choi blocks; independent of apply_channel's trace formula.
inline Matrix evaluate_by_blocks(const ChoiChannel& ch, const Matrix& rho) {
  const std::size_t di = ch.d_in(), dout = ch.d_out();
  Matrix out = Matrix::Zero(ix(dout), ix(dout));
  for (std::size_t i = 0; i < di; ++i)
    for (std::size_t j = 0; j < di; ++j)
      out += rho(ix(i), ix(j)) * ch.matrix().block(ix(i * dout), ix(j * dout), ix(dout), ix(dout));
  return out;
}

inline ChoiChannel choi_of_map(std::size_t d_in, std::size_t d_out, const auto& f) {
  Matrix c = Matrix::Zero(ix(d_in * d_out), ix(d_in * d_out));
  for (std::size_t i = 0; i < d_in; ++i)
    for (std::size_t j = 0; j < d_in; ++j)
      c.block(ix(i * d_out), ix(j * d_out), ix(d_out), ix(d_out)) = f(matrix_unit(d_in, i, j));
  return ChoiChannel(d_in, d_out, c);
}

}  // namespace sctest
