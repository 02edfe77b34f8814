#pragma once

#include <stdexcept>
#include <string>

namespace htsasm {

// Base class for every library error so callers can catch one type.
struct HtsasmError : std::runtime_error {
    explicit HtsasmError(const std::string& msg) : std::runtime_error(msg) {}
};

// A candidate object has the wrong shape (rows/columns/length) for the
// declared parameters.
struct DimensionMismatch : HtsasmError {
    using HtsasmError::HtsasmError;
};

// A requested computation exceeds the configured size bounds.
struct SizeLimitExceeded : HtsasmError {
    using HtsasmError::HtsasmError;
};

// A tableau object violates its defining conditions.
struct InvalidTableau : HtsasmError {
    using HtsasmError::HtsasmError;
};

// A tableau was supplied with letters outside the expected alphabet
// (wrong n, or 0/0' entries in an even-alphabet context).
struct AlphabetMismatch : HtsasmError {
    using HtsasmError::HtsasmError;
};

// A weighting scheme was applied to a matrix kind it is not defined for.
struct SchemeKindMismatch : HtsasmError {
    using HtsasmError::HtsasmError;
};

// substitute() mapped a variable that occurs with a negative exponent to
// something that is not an invertible monomial.
struct NonInvertibleImage : HtsasmError {
    using HtsasmError::HtsasmError;
};

// evalRational() assigned 0 to a variable occurring with a negative exponent.
struct ZeroAssignment : HtsasmError {
    using HtsasmError::HtsasmError;
};

// Internal guard: exact polynomial division was requested but the divisor
// does not divide the dividend.
struct InexactDivision : HtsasmError {
    using HtsasmError::HtsasmError;
};

// Canonical-text or JSON input could not be parsed.
struct ParseError : HtsasmError {
    using HtsasmError::HtsasmError;
};

}  // namespace htsasm
