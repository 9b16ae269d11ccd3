// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace superchan {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using Dims = std::vector<std::size_t>;

inline constexpr double kDefaultTol = 1e-10;

std::size_t dims_product(std::span<const std::size_t> dims);

// Big-endian composite index: digits[0] is the most significant.
std::size_t flatten(std::span<const std::size_t> dims,
                    std::span<const std::size_t> digits);
std::vector<std::size_t> unflatten(std::span<const std::size_t> dims,
                                   std::size_t index);

// A square complex matrix acting on a tensor product of subsystems.
class MultipartiteOperator {
 public:
  MultipartiteOperator(Dims dims, Matrix entries);

  static MultipartiteOperator zeros(Dims dims);
  static MultipartiteOperator identity(Dims dims);

  const Dims& dims() const noexcept { return dims_; }
  const Matrix& matrix() const noexcept { return m_; }
  std::size_t side() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  std::size_t num_subsystems() const noexcept { return dims_.size(); }

  Complex operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

 private:
  Dims dims_;
  Matrix m_;
};

MultipartiteOperator kron(const MultipartiteOperator& a, const MultipartiteOperator& b);
Matrix kron(const Matrix& a, const Matrix& b);

MultipartiteOperator partial_trace(const MultipartiteOperator& x,
                                   std::span<const std::size_t> subsystems);
MultipartiteOperator partial_trace(const MultipartiteOperator& x,
                                   std::initializer_list<std::size_t> subsystems);

MultipartiteOperator partial_transpose(const MultipartiteOperator& x, std::size_t subsystem);

// Full transpose; keeps the subsystem tags.
MultipartiteOperator transpose(const MultipartiteOperator& x);

// perm[k] names the old subsystem placed at new position k.
MultipartiteOperator permute_subsystems(const MultipartiteOperator& x,
                                        std::span<const std::size_t> perm);
MultipartiteOperator permute_subsystems(const MultipartiteOperator& x,
                                        std::initializer_list<std::size_t> perm);

MultipartiteOperator schur_product(const MultipartiteOperator& a,
                                   const MultipartiteOperator& b);

// Entrywise max norm.
double max_abs(const Matrix& x);
double max_abs_diff(const Matrix& a, const Matrix& b);

double hermiticity_deviation(const Matrix& x);
bool is_hermitian(const Matrix& x, double tol = kDefaultTol);
bool is_hermitian(const MultipartiteOperator& x, double tol = kDefaultTol);

struct PsdReport {
  bool hermitian = false;
  bool psd = false;
  double min_eigenvalue = 0.0;
  double max_abs_eigenvalue = 0.0;
  double hermiticity_deviation = 0.0;
};

// Non-throwing diagnostic form. A non-Hermitian input yields hermitian=false,
// psd=false and leaves the eigenvalue fields at zero.
PsdReport psd_report(const Matrix& x, double tol = kDefaultTol);

// Throws NotHermitian for inputs beyond the symmetrization threshold and
// EigensolverFailure if the eigensolver does not converge.
bool is_psd(const Matrix& x, double tol = kDefaultTol);
bool is_psd(const MultipartiteOperator& x, double tol = kDefaultTol);

// Eigenvalues of (x + x^dag)/2 in ascending order.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& x);

// Matrix unit e_ij of size d.
Matrix matrix_unit(std::size_t d, std::size_t i, std::size_t j);

bool all_finite(const Matrix& x);

}  // namespace superchan
