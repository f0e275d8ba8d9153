#include "periodhecke/errors.hpp"

namespace periodhecke {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::precondition_violation: return "PreconditionViolation";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::unsupported_parity: return "UnsupportedParity";
    case ErrorCode::unsupported: return "Unsupported";
    case ErrorCode::unsupported_level: return "UnsupportedLevel";
    case ErrorCode::dimension_zero: return "DimensionZero";
    case ErrorCode::singular_matrix: return "SingularMatrix";
    case ErrorCode::basis_deficient: return "BasisDeficient";
    case ErrorCode::precision_too_low: return "PrecisionTooLow";
    case ErrorCode::inconsistent_system: return "InconsistentSystem";
  }
  return "Unknown";
}

SingularMatrixError::SingularMatrixError(std::size_t rank, std::size_t dimension)
    : Error(ErrorCode::singular_matrix,
            "singular matrix: rank " + std::to_string(rank) + " of " + std::to_string(dimension)),
      rank_(rank) {}

BasisDeficientError::BasisDeficientError(std::size_t rank, std::size_t dimension, const std::string& detail)
    : Error(ErrorCode::basis_deficient, "period basis deficient (rank " + std::to_string(rank) + " of " +
                                            std::to_string(dimension) + "): " + detail),
      rank_(rank) {}

PrecisionTooLowError::PrecisionTooLowError(long required, long available)
    : Error(ErrorCode::precision_too_low, "q-expansion precision too low: need " + std::to_string(required) +
                                              " coefficients, have " + std::to_string(available)),
      required_(required) {}

}  // namespace periodhecke
