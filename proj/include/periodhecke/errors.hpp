#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace periodhecke {

/// Machine-readable failure categories. Each maps to a distinct name used by
/// the CLI's structured error output.
enum class ErrorCode {
  precondition_violation,
  invalid_argument,
  unsupported_parity,
  unsupported,
  unsupported_level,
  dimension_zero,
  singular_matrix,
  basis_deficient,
  precision_too_low,
  inconsistent_system,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message) : Error(ErrorCode::precondition_violation, message) {}
};

class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& message) : Error(ErrorCode::invalid_argument, message) {}
};

class UnsupportedError : public Error {
 public:
  UnsupportedError(ErrorCode code, const std::string& message) : Error(code, message) {}
  explicit UnsupportedError(const std::string& message) : Error(ErrorCode::unsupported, message) {}
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(std::size_t rank, std::size_t dimension);
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

class BasisDeficientError : public Error {
 public:
  BasisDeficientError(std::size_t rank, std::size_t dimension, const std::string& detail);
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

class PrecisionTooLowError : public Error {
 public:
  PrecisionTooLowError(long required, long available);
  long required() const noexcept { return required_; }

 private:
  long required_;
};

}  // namespace periodhecke
