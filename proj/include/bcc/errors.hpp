#pragma once

#include <stdexcept>

namespace bcc {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegativeEntry : Error { using Error::Error; };
struct RowSumViolation : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct AxisCountMismatch : Error { using Error::Error; };
struct SizeExceeded : Error { using Error::Error; };
struct EmptySet : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };

}  // namespace bcc
