#pragma once

#include <string>
#include <vector>

#include "htsasm/determinant.hpp"
#include "htsasm/series.hpp"
#include "htsasm/tableaux.hpp"

namespace htsasm {

// Grid levels, top to bottom: 0 is the start line of the spurs, 1..n carry
// the unbarred letters, n+1 carries 0, n+2..2n+1 carry nbar..1bar, and
// 2n+2 is the bottom line where every path terminates.
int heightLevel(const TabEntry& e, int n);  // AlphabetMismatch off the odd alphabet
int bottomLevel(int n);                     // 2n+2

enum class EdgeKind { Curve, Horizontal, Vertical, Diagonal };

struct PathEdge {
    EdgeKind kind{EdgeKind::Curve};
    int fromCol = 0, fromLevel = 0, toCol = 0, toLevel = 0;
    friend auto operator<=>(const PathEdge&, const PathEdge&) = default;
};

struct LatticePath {
    std::vector<PathEdge> edges;  // first edge is always the curve
    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
};

struct LatticePathConfig {
    int n = 0;
    StrictPartition lambda;
    std::vector<LatticePath> paths;
    friend auto operator<=>(const LatticePathConfig&, const LatticePathConfig&) = default;
};

// Path image of a decorated tableau row by row: a row whose first entry is
// the letter k or kbar becomes the path that starts with a curved edge from
// the spur (-n+k, 0) to column 1 at the height of that first entry, then
// for each later entry descends vertically in place and steps to
// the next column horizontally (unprimed entry) or diagonally downward
// (primed entry), finally dropping to the bottom line in column lambda_i.
// Requires the odd alphabet (SchemeKindMismatch otherwise) and rows that
// weakly increase without repeating a primed entry and open unprimed on a
// nonzero letter (InvalidTableau otherwise); column rules are NOT required,
// so the intersecting configurations of non-standard tableaux are
// representable.
LatticePathConfig toPaths(const ShiftedTableau& t);

// True iff no two paths share a lattice point (vertical runs cover every
// intermediate level they pass through).
bool isNonIntersecting(const LatticePathConfig& c);

// Product of the edge weights: verticals weigh 1; the curve weighs u_k into
// level k and 1 into a barred level; horizontals weigh x_k / z0 / 1/y_k at
// levels k / 0 / kbar; diagonals weigh y_k / 1/z0 / 1/x_k likewise.
LaurentPoly pathWeight(const LatticePathConfig& c);

// u_k = z0 * x_k * prod_{i>k} (x_i / y_i), the weight of a curve into level k.
LaurentPoly uWeight(int k, int n);

// Row generating functions in the column variable q:
//   f_k = u_k q (1+q/z0)/(1-z0 q) * prod_{i>=k} 1/(1-x_i q)
//         * prod_{i>k}(1+y_i q) * prod_i (1+q/x_i)/(1-q/y_i)
//   g_k = q * prod_{i<k}(1+q/x_i) * prod_{i<=k} 1/(1-q/y_i)
//   h_k = f_k + (-1)^{n-k} g_k   (one combined numerator over f's denominator)
RationalSeriesSpec genF(int k, int n, VarId q = vq(0));
RationalSeriesSpec genG(int k, int n, VarId q = vq(0));
RationalSeriesSpec genH(int k, int n, VarId q = vq(0));

// n x n matrix with entry (k,l) = [q^{lambda_l}] h_k, free of q.
PolyMatrix genFunMatrix(int n, const StrictPartition& lambda);

struct PdetReport {
    bool ok = false;
    LaurentPoly tableauSum;  // sum of tableauWeight over the decorated tableaux
    LaurentPoly detValue;    // det(genFunMatrix)
};

// Checks sum_{P} wgt(P) == [q^lambda] det(h_{k,l}(q_l)) exactly.
// Bounded to n <= 3 (SizeLimitExceeded).
PdetReport verifyPdet(int n, const StrictPartition& lambda);

// Static SVG drawing of a configuration (grid, labels, one colour per path).
std::string renderSvg(const LatticePathConfig& c);

}  // namespace htsasm
