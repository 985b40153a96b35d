#pragma once

#include <stdexcept>
#include <string>

namespace hombracket {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct NotPureCovector : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct NotHomLie : Error { using Error::Error; };
struct NotRepresentation : Error { using Error::Error; };
struct AdAlphaViolation : Error { using Error::Error; };
struct NotNijenhuis : Error { using Error::Error; };
struct NotRightSymmetric : Error { using Error::Error; };
struct NotOOperator : Error { using Error::Error; };
struct NotAutomorphism : Error { using Error::Error; };
struct ConstructionFailure : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };

} // namespace hombracket
