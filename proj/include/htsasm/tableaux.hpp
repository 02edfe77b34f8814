#pragma once

#include <string>
#include <vector>

#include "htsasm/asm.hpp"
#include "htsasm/laurent.hpp"

namespace htsasm {

// One box of a shifted tableau.  letter is 1..n, or 0 for the central symbol
// of the odd alphabet (never barred).  The alphabet order is
//   1' < 1 < 2' < 2 < ... < n' < n < 0' < 0 < nbar' < nbar < ... < 1bar' < 1bar
// for odd-sided objects; the even alphabet omits 0'/0.
struct TabEntry {
    int letter = 0;
    bool barred = false;
    bool primed = false;
    friend auto operator<=>(const TabEntry&, const TabEntry&) = default;
};

// Shifted tableau of strict shape lambda: row i (0-based) holds lambda[i]
// boxes and starts on the main diagonal, so the d-th box of every row lies on
// diagonal d and the box above (r,idx) in its ambient column is (r-1,idx+1).
// kind selects the alphabet (OddBPrime = with 0, EvenB = without).
struct ShiftedTableau {
    Kind kind{Kind::OddBPrime};
    int n = 0;
    StrictPartition lambda;
    std::vector<std::vector<TabEntry>> rows;
    friend auto operator<=>(const ShiftedTableau&, const ShiftedTableau&) = default;
};

// Position of e in the doubled alphabet order above (0-based).  Throws
// AlphabetMismatch when e does not belong to the alphabet of (kind, n).
int entryRank(const TabEntry& e, Kind kind, int n);

// "3", "3'", "-3", "-3'", "0", "0'".
std::string entryStr(const TabEntry& e);
TabEntry parseEntry(const std::string& text);

// Rows on separate lines, each shifted two spaces per row.
std::string displayTableau(const ShiftedTableau& t);

// Unprimed membership: weakly increasing rows and columns, strictly
// increasing diagonals, and a main diagonal carrying exactly one of {k,kbar}
// for every k = 1..n.  Throws DimensionMismatch on malformed shape.
ValidationReport validateUnprimed(const ShiftedTableau& t);

// Primed membership: weak rows/columns in the doubled order, no repeated
// primed entry in a row, no repeated unprimed entry in a column, no primes
// on the main diagonal, and the unprimed skeleton passes validateUnprimed.
ValidationReport validatePrimed(const ShiftedTableau& t);

// Bijection with half-turn matrices: diagonal j of the tableau reads off
// column j of the right-accumulated row-sum matrix B, the r-th 1 of the
// column (at matrix row i) placing that row's alphabet letter at depth r.
// Throws InvalidTableau when the accumulated sums do not fit shape lambda.
ShiftedTableau fromAsm(const HalfTurnAsm& a);

// Inverse of fromAsm; uses letters only (primes are ignored), so it also
// recovers the matrix underlying a primed tableau.  Throws InvalidTableau.
HalfTurnAsm toAsm(const ShiftedTableau& t);

// Exhaustive generation by backtracking on the membership rules; sorted and
// duplicate-free.  Guarded by the n <= 4 bound (SizeLimitExceeded).
std::vector<ShiftedTableau> enumerateUnprimed(Kind kind, int n, const StrictPartition& lambda);
std::vector<ShiftedTableau> enumeratePrimed(Kind kind, int n, const StrictPartition& lambda);

// All prime decorations of t = fromAsm(a): walking the strips of consecutive
// 1s in each row of B, a strip's first box is free to prime unless it starts
// on the main diagonal (these are exactly the NS-associated boxes), and each
// later box is forced unprimed under SW and primed under NW.  Exactly
// 2^{neg(a)} tableaux.  The two-argument form checks t == fromAsm(a)
// (InvalidTableau otherwise).
std::vector<ShiftedTableau> primings(const ShiftedTableau& t, const HalfTurnAsm& a);
std::vector<ShiftedTableau> primings(const HalfTurnAsm& a);

// Weight of a (primed or unprimed) tableau.  Odd alphabet: diagonal k maps to
// z0*x_k*prod_{j>k}(x_j/y_j), kbar to 1; off-diagonal k, k', kbar, kbar', 0,
// 0' map to x_k, y_k, 1/y_k, 1/x_k, z0, 1/z0.  Even alphabet: diagonal k maps
// to (-1)^{n-k+1}*x_k*prod_{j>k}(x_j/y_j), kbar to 1; off-diagonal k, k',
// kbar, kbar' map to i*x_k, -i*y_k, i/y_k, -i/x_k.  Throws AlphabetMismatch
// on an entry the tables do not cover (e.g. a primed or 0 diagonal box).
LaurentPoly tableauWeight(const ShiftedTableau& t);

}  // namespace htsasm
