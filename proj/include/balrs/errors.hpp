#ifndef BALRS_ERRORS_HPP
#define BALRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace balrs {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction
struct NotPrime : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct NotPrimitive : Error { using Error::Error; };

// element arithmetic
struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };

// polynomials
struct ZeroScale : Error { using Error::Error; };

// masks and parameters
struct BadRange : Error { using Error::Error; };
struct NonIntegralBalance : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// decoding
struct TooManyErasures : Error { using Error::Error; };
struct Inconsistent : Error { using Error::Error; };
struct DecodeFailure : Error { using Error::Error; };

// construction verification
struct DuplicateShift : Error { using Error::Error; };
struct VerificationFailure : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// serialization
struct FormatError : Error { using Error::Error; };

}  // namespace balrs

#endif
