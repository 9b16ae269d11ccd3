// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace superchan {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  OutOfRange,
  NotHermitian,
  EigensolverFailure,
  NotDUCovariant,
  NotDOCovariant,
  Parse,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the covariant read-off routines when a Choi matrix does not
// lie in the requested family. residual() is the max-norm distance between
// the input and the reconstruction from the extracted tables.
class NotCovariantError : public Error {
 public:
  NotCovariantError(ErrorCode code, const std::string& message, double residual)
      : Error(code, message), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace superchan
