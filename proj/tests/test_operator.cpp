// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "superchan/channel.hpp"
#include "superchan/error.hpp"
#include "superchan/operator.hpp"
#include "support/test_support.hpp"

using namespace superchan;
using sctest::ix;

namespace {

Matrix sigma_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

Matrix p_plus(std::size_t d) {
  Vector v = Vector::Zero(ix(d * d));
  for (std::size_t i = 0; i < d; ++i) v(ix(i * d + i)) = 1.0;
  return v * v.adjoint();
}

}  // namespace

TEST_CASE("flatten and unflatten are inverse up to (4,4,4,4)") {
  const Dims dims{4, 3, 4, 2};
  for (std::size_t k = 0; k < dims_product(dims); ++k) CHECK(flatten(dims, unflatten(dims, k)) == k);
  const std::vector<std::size_t> digits{1, 2, 3, 1};
  CHECK(flatten(dims, digits) == ((1 * 3 + 2) * 4 + 3) * 2 + 1);
  const Dims big{4, 4, 4, 4};
  for (std::size_t k = 0; k < 256; ++k) CHECK(flatten(big, unflatten(big, k)) == k);
}

TEST_CASE("constructor rejects wrong side and non-finite entries") {
  CHECK_THROWS_AS(MultipartiteOperator({2, 2}, Matrix::Zero(3, 3)), Error);
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(MultipartiteOperator({2}, m), Error);
}

TEST_CASE("kron follows the big-endian convention") {
  const Matrix e01 = matrix_unit(2, 0, 1);
  const Matrix k = kron(e01, Matrix::Identity(2, 2));
  Matrix expect = Matrix::Zero(4, 4);
  expect(0, 2) = expect(1, 3) = 1.0;
  CHECK(max_abs_diff(k, expect) == 0.0);

  const auto i6 = kron(MultipartiteOperator::identity({2}), MultipartiteOperator::identity({3}));
  CHECK(i6.dims() == Dims{2, 3});
  CHECK(max_abs_diff(i6.matrix(), Matrix::Identity(6, 6)) == 0.0);

  const Matrix xx = kron(sigma_x(), sigma_x());
  Vector e0 = Vector::Zero(4);
  e0(0) = 1.0;
  const Vector out = xx * e0;
  CHECK(std::abs(out(3) - Complex(1.0)) == 0.0);
  CHECK(out.norm() == doctest::Approx(1.0));
}

TEST_CASE("partial trace of products and of P+") {
  sctest::Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const Matrix a = sctest::ginibre(2, 2, rng), b = sctest::ginibre(3, 3, rng);
    const MultipartiteOperator ab({2, 3}, kron(a, b));
    CHECK(max_abs_diff(partial_trace(ab, {1}).matrix(), b.trace() * a) < 1e-12);
    CHECK(max_abs_diff(partial_trace(ab, {0}).matrix(), a.trace() * b) < 1e-12);
  }
  for (std::size_t d : {2, 3, 4}) {
    const MultipartiteOperator pp({d, d}, p_plus(d));
    const auto r = partial_trace(pp, {1});
    CHECK(r.dims() == Dims{d});
    CHECK(max_abs_diff(r.matrix(), Matrix::Identity(ix(d), ix(d))) == 0.0);
  }
  const MultipartiteOperator x({2, 3}, sctest::ginibre(6, 6, rng));
  const auto full = partial_trace(x, {0, 1});
  CHECK(full.side() == 1);
  CHECK(std::abs(full(0, 0) - x.matrix().trace()) < 1e-12);
  CHECK_THROWS_AS(partial_trace(x, {2}), Error);
}

TEST_CASE("partial transpose") {
  sctest::Rng rng(5);
  const Matrix a = sctest::ginibre(2, 2, rng), b = sctest::ginibre(2, 2, rng);
  const MultipartiteOperator ab({2, 2}, kron(a, b));
  CHECK(max_abs_diff(partial_transpose(ab, 0).matrix(), kron(Matrix(a.transpose()), b)) == 0.0);

  const MultipartiteOperator x({2, 2}, sctest::ginibre(4, 4, rng));
  CHECK(max_abs_diff(partial_transpose(partial_transpose(x, 0), 0).matrix(), x.matrix()) == 0.0);
  CHECK(max_abs_diff(partial_transpose(partial_transpose(x, 0), 1).matrix(), Matrix(x.matrix().transpose())) == 0.0);

  // Gamma_2 of P+ = SWAP.
  Matrix swap = Matrix::Zero(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) swap(ix(i * 2 + j), ix(j * 2 + i)) = 1.0;
  CHECK(max_abs_diff(partial_transpose(MultipartiteOperator({2, 2}, p_plus(2)), 1).matrix(), swap) == 0.0);
  CHECK_THROWS_AS(partial_transpose(x, 2), Error);
}

TEST_CASE("permute subsystems") {
  sctest::Rng rng(7);
  const Matrix a = sctest::ginibre(2, 2, rng), b = sctest::ginibre(3, 3, rng);
  const MultipartiteOperator ab({2, 3}, kron(a, b));
  CHECK(max_abs_diff(permute_subsystems(ab, {0, 1}).matrix(), ab.matrix()) == 0.0);
  const auto ba = permute_subsystems(ab, {1, 0});
  CHECK(ba.dims() == Dims{3, 2});
  CHECK(max_abs_diff(ba.matrix(), kron(b, a)) == 0.0);

  // Spectrum kept; entries are a permutation of the originals.
  const MultipartiteOperator h({2, 2, 2, 2}, sctest::random_hermitian(16, rng));
  const auto p = permute_subsystems(h, {2, 0, 3, 1});
  const Eigen::VectorXd e1 = hermitian_eigenvalues(h.matrix()), e2 = hermitian_eigenvalues(p.matrix());
  CHECK((e1 - e2).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(p.matrix().trace() - h.matrix().trace()) < 1e-12);
  auto key = [](const Complex& z) { return std::make_pair(z.real(), z.imag()); };
  std::vector<std::pair<double, double>> v1, v2;
  for (Eigen::Index k = 0; k < 256; ++k) {
    v1.push_back(key(h.matrix().data()[k]));
    v2.push_back(key(p.matrix().data()[k]));
  }
  std::sort(v1.begin(), v1.end());
  std::sort(v2.begin(), v2.end());
  CHECK(v1 == v2);
  CHECK_THROWS_AS(permute_subsystems(h, {0, 0, 1, 2}), Error);
  CHECK_THROWS_AS(permute_subsystems(h, {0, 1, 2}), Error);
}

TEST_CASE("schur product") {
  sctest::Rng rng(9);
  const MultipartiteOperator x({3}, sctest::ginibre(3, 3, rng));
  const MultipartiteOperator ones({3}, Matrix::Ones(3, 3));
  CHECK(max_abs_diff(schur_product(ones, x).matrix(), x.matrix()) == 0.0);
  const auto diag = schur_product(MultipartiteOperator::identity({3}), x);
  CHECK(max_abs_diff(diag.matrix(), Matrix(x.matrix().diagonal().asDiagonal())) == 0.0);
  for (int t = 0; t < 20; ++t) {
    const Matrix p = sctest::random_psd(3, 2, rng), q = sctest::random_psd(3, 2, rng);
    CHECK(is_psd(schur_product(MultipartiteOperator({3}, p), MultipartiteOperator({3}, q))));
  }
  CHECK_THROWS_AS(schur_product(x, MultipartiteOperator::identity({2})), Error);
}

TEST_CASE("psd tests") {
  CHECK(is_psd(Matrix(Matrix::Identity(4, 4))));
  Matrix m(2, 2);
  m << 1.0, 2.0, 2.0, 1.0;
  CHECK_FALSE(is_psd(m));
  const auto r = psd_report(m);
  CHECK(r.min_eigenvalue == doctest::Approx(-1.0));
  CHECK(r.max_abs_eigenvalue == doctest::Approx(3.0));
  CHECK(is_psd(channels::amplitude_damping(0.3).matrix()));

  Matrix nh = Matrix::Identity(2, 2);
  nh(0, 1) = 0.5;
  CHECK_FALSE(is_hermitian(nh));
  CHECK_THROWS_AS(is_psd(nh), Error);
  const auto bad = psd_report(nh);
  CHECK_FALSE(bad.hermitian);
  CHECK_FALSE(bad.psd);
}

TEST_CASE("psd test agrees with the 2x2 trace/determinant rule") {
  sctest::Rng rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int accepted = 0;
  for (int t = 0; t < 1000; ++t) {
    const double a = u(rng), c = u(rng) + 0.5;
    const Complex b(u(rng), u(rng));
    Matrix m(2, 2);
    m << a, b, std::conj(b), c;
    const double det = a * c - std::norm(b);
    const bool closed = a + c >= 0 && det >= 0;
    CHECK(is_psd(m, 1e-13) == closed);
    accepted += closed;
  }
  CHECK(accepted > 50);
  CHECK(accepted < 950);
}
