// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#include "superchan/operator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "superchan/error.hpp"

namespace superchan {

namespace {

std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

// Offsets into the full index of every multi-index over the listed subsystems.
std::vector<std::size_t> offsets_over(const Dims& dims, const std::vector<std::size_t>& strides,
                                      const std::vector<std::size_t>& which) {
  std::vector<std::size_t> out{0};
  for (std::size_t k : which) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * dims[k]);
    for (std::size_t base : out)
      for (std::size_t v = 0; v < dims[k]; ++v) next.push_back(base + v * strides[k]);
    out = std::move(next);
  }
  return out;
}

void check_subsystem(const MultipartiteOperator& x, std::size_t s) {
  if (s >= x.num_subsystems())
    throw Error(ErrorCode::InvalidArgument,
                "subsystem index " + std::to_string(s) + " out of range for " +
                    std::to_string(x.num_subsystems()) + " subsystems");
}

}  // namespace

std::size_t dims_product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::size_t flatten(std::span<const std::size_t> dims, std::span<const std::size_t> digits) {
  if (dims.size() != digits.size())
    throw Error(ErrorCode::DimensionMismatch, "flatten: digit count does not match dims");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (digits[k] >= dims[k]) throw Error(ErrorCode::InvalidArgument, "flatten: digit out of range");
    idx = idx * dims[k] + digits[k];
  }
  return idx;
}

std::vector<std::size_t> unflatten(std::span<const std::size_t> dims, std::size_t index) {
  if (index >= dims_product(dims)) throw Error(ErrorCode::InvalidArgument, "unflatten: index out of range");
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
  return digits;
}

bool all_finite(const Matrix& x) {
  for (Eigen::Index c = 0; c < x.cols(); ++c)
    for (Eigen::Index r = 0; r < x.rows(); ++r)
      if (!std::isfinite(x(r, c).real()) || !std::isfinite(x(r, c).imag())) return false;
  return true;
}

MultipartiteOperator::MultipartiteOperator(Dims dims, Matrix entries)
    : dims_(std::move(dims)), m_(std::move(entries)) {
  if (dims_.empty()) throw Error(ErrorCode::InvalidArgument, "operator needs at least one subsystem");
  for (std::size_t d : dims_)
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "subsystem dimensions must be positive");
  const auto n = static_cast<Eigen::Index>(dims_product(dims_));
  if (m_.rows() != n || m_.cols() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "matrix is " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) +
                    " but dims require side " + std::to_string(n));
  if (!all_finite(m_)) throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
}

MultipartiteOperator MultipartiteOperator::zeros(Dims dims) {
  const auto n = static_cast<Eigen::Index>(dims_product(dims));
  return {std::move(dims), Matrix::Zero(n, n)};
}

MultipartiteOperator MultipartiteOperator::identity(Dims dims) {
  const auto n = static_cast<Eigen::Index>(dims_product(dims));
  return {std::move(dims), Matrix::Identity(n, n)};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

MultipartiteOperator kron(const MultipartiteOperator& a, const MultipartiteOperator& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return {std::move(dims), kron(a.matrix(), b.matrix())};
}

MultipartiteOperator partial_trace(const MultipartiteOperator& x,
                                   std::span<const std::size_t> subsystems) {
  const Dims& dims = x.dims();
  std::vector<bool> traced(dims.size(), false);
  for (std::size_t s : subsystems) {
    check_subsystem(x, s);
    if (traced[s]) throw Error(ErrorCode::InvalidArgument, "subsystem listed twice in partial trace");
    traced[s] = true;
  }
  std::vector<std::size_t> kept_list, traced_list;
  Dims kept_dims;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (traced[k]) {
      traced_list.push_back(k);
    } else {
      kept_list.push_back(k);
      kept_dims.push_back(dims[k]);
    }
  }
  if (kept_dims.empty()) kept_dims.push_back(1);

  const auto strides = strides_of(dims);
  const auto off_k = offsets_over(dims, strides, kept_list);
  const auto off_t = offsets_over(dims, strides, traced_list);
  const auto n = static_cast<Eigen::Index>(off_k.size());
  Matrix out = Matrix::Zero(n, n);
  const Matrix& m = x.matrix();
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r) {
      Complex acc = 0.0;
      for (std::size_t t : off_t) acc += m(off_k[r] + t, off_k[c] + t);
      out(r, c) = acc;
    }
  return {std::move(kept_dims), std::move(out)};
}

MultipartiteOperator partial_trace(const MultipartiteOperator& x,
                                   std::initializer_list<std::size_t> subsystems) {
  return partial_trace(x, std::span<const std::size_t>(subsystems.begin(), subsystems.size()));
}

MultipartiteOperator partial_transpose(const MultipartiteOperator& x, std::size_t subsystem) {
  check_subsystem(x, subsystem);
  const auto strides = strides_of(x.dims());
  const std::size_t stride = strides[subsystem];
  const std::size_t d = x.dims()[subsystem];
  const auto n = static_cast<Eigen::Index>(x.side());
  const Matrix& m = x.matrix();
  Matrix out(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const std::size_t dc = (static_cast<std::size_t>(c) / stride) % d;
    for (Eigen::Index r = 0; r < n; ++r) {
      const std::size_t dr = (static_cast<std::size_t>(r) / stride) % d;
      const std::size_t r2 = static_cast<std::size_t>(r) - dr * stride + dc * stride;
      const std::size_t c2 = static_cast<std::size_t>(c) - dc * stride + dr * stride;
      out(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2)) = m(r, c);
    }
  }
  return {x.dims(), std::move(out)};
}

MultipartiteOperator transpose(const MultipartiteOperator& x) {
  return {x.dims(), x.matrix().transpose()};
}

MultipartiteOperator permute_subsystems(const MultipartiteOperator& x,
                                        std::span<const std::size_t> perm) {
  const Dims& dims = x.dims();
  if (perm.size() != dims.size())
    throw Error(ErrorCode::InvalidArgument, "permutation length does not match subsystem count");
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t p : perm) {
    if (p >= dims.size() || seen[p]) throw Error(ErrorCode::InvalidArgument, "malformed permutation");
    seen[p] = true;
  }
  Dims new_dims(dims.size());
  for (std::size_t k = 0; k < perm.size(); ++k) new_dims[k] = dims[perm[k]];
  const auto new_strides = strides_of(new_dims);
  // Old subsystem perm[k] contributes its digit with the stride of new slot k.
  std::vector<std::size_t> stride_for_old(dims.size());
  for (std::size_t k = 0; k < perm.size(); ++k) stride_for_old[perm[k]] = new_strides[k];

  const std::size_t n = x.side();
  std::vector<std::size_t> map(n);
  std::vector<std::size_t> digits(dims.size(), 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t v = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) v += digits[k] * stride_for_old[k];
    map[idx] = v;
    for (std::size_t k = dims.size(); k-- > 0;) {
      if (++digits[k] < dims[k]) break;
      digits[k] = 0;
    }
  }
  const Matrix& m = x.matrix();
  const auto ni = static_cast<Eigen::Index>(n);
  Matrix out(ni, ni);
  for (Eigen::Index c = 0; c < ni; ++c)
    for (Eigen::Index r = 0; r < ni; ++r)
      out(static_cast<Eigen::Index>(map[r]), static_cast<Eigen::Index>(map[c])) = m(r, c);
  return {std::move(new_dims), std::move(out)};
}

MultipartiteOperator permute_subsystems(const MultipartiteOperator& x,
                                        std::initializer_list<std::size_t> perm) {
  return permute_subsystems(x, std::span<const std::size_t>(perm.begin(), perm.size()));
}

MultipartiteOperator schur_product(const MultipartiteOperator& a, const MultipartiteOperator& b) {
  if (a.dims() != b.dims()) throw Error(ErrorCode::DimensionMismatch, "schur product needs identical dims");
  return {a.dims(), a.matrix().cwiseProduct(b.matrix())};
}

double max_abs(const Matrix& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "max_abs_diff: shape mismatch");
  return max_abs(a - b);
}

double hermiticity_deviation(const Matrix& x) {
  if (x.rows() != x.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  return max_abs(x - x.adjoint());
}

bool is_hermitian(const Matrix& x, double tol) {
  return hermiticity_deviation(x) <= tol * std::max(1.0, max_abs(x));
}

bool is_hermitian(const MultipartiteOperator& x, double tol) { return is_hermitian(x.matrix(), tol); }

Eigen::VectorXd hermitian_eigenvalues(const Matrix& x) {
  const Matrix h = (x + x.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::EigensolverFailure, "Hermitian eigensolver did not converge");
  return es.eigenvalues();
}

PsdReport psd_report(const Matrix& x, double tol) {
  PsdReport rep;
  rep.hermiticity_deviation = hermiticity_deviation(x);
  rep.hermitian = rep.hermiticity_deviation <= tol * std::max(1.0, max_abs(x));
  if (!rep.hermitian) return rep;
  const Eigen::VectorXd ev = hermitian_eigenvalues(x);
  rep.min_eigenvalue = ev.minCoeff();
  rep.max_abs_eigenvalue = ev.cwiseAbs().maxCoeff();
  rep.psd = rep.min_eigenvalue >= -tol * std::max(1.0, rep.max_abs_eigenvalue);
  return rep;
}

bool is_psd(const Matrix& x, double tol) {
  const PsdReport rep = psd_report(x, tol);
  if (!rep.hermitian)
    throw Error(ErrorCode::NotHermitian,
                "is_psd: input deviates from Hermitian by " + std::to_string(rep.hermiticity_deviation));
  return rep.psd;
}

bool is_psd(const MultipartiteOperator& x, double tol) { return is_psd(x.matrix(), tol); }

Matrix matrix_unit(std::size_t d, std::size_t i, std::size_t j) {
  Matrix e = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return e;
}

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::NotHermitian: return "not-hermitian";
    case ErrorCode::EigensolverFailure: return "eigensolver-failure";
    case ErrorCode::NotDUCovariant: return "not-du-covariant";
    case ErrorCode::NotDOCovariant: return "not-do-covariant";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::Io: return "io-error";
  }
  return "unknown";
}

}  // namespace superchan
