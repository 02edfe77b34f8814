#pragma once

#include <vector>

#include "htsasm/laurent.hpp"

namespace htsasm {

// A formal power series in one distinguished variable v, presented as
//
//     v^leadingPower * prod(numeratorFactors) / prod(denominatorFactors).
//
// Every denominator factor must have constant term 1 in v (shape 1 - c*v),
// which makes the geometric expansion well defined; numerator factors must
// be polynomial in v.  Coefficients of the factors may be arbitrary Laurent
// polynomials in the remaining variables.
struct RationalSeriesSpec {
    VarId seriesVar{};
    std::vector<LaurentPoly> numeratorFactors;
    std::vector<LaurentPoly> denominatorFactors;
    int leadingPower = 0;
};

// Coefficient of seriesVar^k in the expansion; the result is free of the
// series variable.  Throws HtsasmError when a denominator factor's constant
// term is not 1 or a factor has negative powers of the series variable.
LaurentPoly seriesCoeff(const RationalSeriesSpec& spec, int k);

// Product of two series in the same variable: factor lists concatenate and
// leading powers add.  Throws DimensionMismatch on mismatched variables.
RationalSeriesSpec mulSpecs(const RationalSeriesSpec& a, const RationalSeriesSpec& b);

}  // namespace htsasm
