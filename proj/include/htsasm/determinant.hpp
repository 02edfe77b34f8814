#pragma once

#include <vector>

#include "htsasm/laurent.hpp"

namespace htsasm {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Memoized Laplace expansion over column subsets; exponential in the side,
// meant for small matrices.
LaurentPoly detLaplace(const PolyMatrix& m);

// Fraction-free elimination (every division is exact); polynomial number of
// ring operations, the workhorse for larger matrices.
LaurentPoly detBareiss(const PolyMatrix& m);

// Dispatcher: Laplace up to 5x5, fraction-free elimination above.  Both
// routes compute the same exact determinant.
LaurentPoly detSymbolic(const PolyMatrix& m);

// Determinant over the coefficient field by Gaussian elimination.
GaussianRational detRational(std::vector<std::vector<GaussianRational>> m);

}  // namespace htsasm
