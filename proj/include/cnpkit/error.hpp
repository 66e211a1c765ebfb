// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cnpkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: bad dimensions, points outside a kernel's domain,
/// duplicate sample points, unparsable files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver failure, singular pivot blocks, and other floating-point
/// breakdowns.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A Gram entry that should be nonzero is numerically zero. The kernel is
/// reducible on the sample; split it with irreducible_partition first.
class ReducibleError : public Error {
 public:
  ReducibleError(std::ptrdiff_t row, std::ptrdiff_t col, const std::string& what)
      : Error(what), row_(row), col_(col) {}

  std::ptrdiff_t row() const noexcept { return row_; }
  std::ptrdiff_t col() const noexcept { return col_; }

 private:
  std::ptrdiff_t row_;
  std::ptrdiff_t col_;
};

/// A matrix required to be positive semi-definite is not.
class NotPsdError : public Error {
 public:
  NotPsdError(double min_eigenvalue, const std::string& what)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// No value at the new point keeps the extended Pick matrix positive. On a
/// complete Nevanlinna-Pick kernel this cannot happen, so the error doubles
/// as a witness against the kernel.
class InfeasibleError : public Error {
 public:
  InfeasibleError(double deficit, const std::string& what)
      : Error(what), deficit_(deficit) {}

  /// How far the best candidate falls short (negative Schur complement
  /// eigenvalue or residual norm).
  double deficit() const noexcept { return deficit_; }

 private:
  double deficit_;
};

}  // namespace cnpkit
