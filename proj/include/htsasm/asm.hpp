#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "htsasm/errors.hpp"

namespace htsasm {

// Which family of half-turn symmetric matrices: even-sided (2n rows) or
// odd-sided (2n+1 rows, with a special central row).
enum class Kind { EvenB, OddBPrime };

std::string kindName(Kind k);               // "B" / "Bprime"
Kind parseKind(const std::string& name);    // throws ParseError

// Strictly decreasing positive parts.
using StrictPartition = std::vector<int>;

bool isStrictPartition(const StrictPartition& p);
int partitionWeight(const StrictPartition& p);

// The stored half (left λ₁ columns) of a half-turn symmetric alternating
// sign matrix.  N = 2n rows (EvenB) or 2n+1 rows (OddBPrime); m = λ₁ columns;
// λ has exactly n parts.
struct HalfTurnAsm {
    Kind kind{Kind::OddBPrime};
    int n = 0;
    StrictPartition lambda;
    std::vector<std::vector<int>> entries;

    int rows() const { return kind == Kind::EvenB ? 2 * n : 2 * n + 1; }
    int cols() const { return lambda.empty() ? 0 : lambda.front(); }

    friend auto operator<=>(const HalfTurnAsm&, const HalfTurnAsm&) = default;
};

enum class Compass { WE, NS, NE, SE, NW, SW };

std::string compassName(Compass c);
Compass parseCompass(const std::string& name);

struct CompassMatrix {
    std::vector<std::vector<Compass>> entries;
    friend bool operator==(const CompassMatrix&, const CompassMatrix&) = default;
};

// Column-1 statistics and per-row label counts.
//   L[k] (k = 0..N) is the number of rows among the first k whose column-1
//   compass label is WE, NW or SW; so L[0] = 0 and L[i-1] is the count
//   strictly above row i.  neg counts NS labels (equivalently -1 entries).
//   xyCounts[i][label] counts each compass label in row i+1.
struct AsmStats {
    std::vector<int> L;
    int neg = 0;
    std::vector<std::array<int, 6>> xyCounts;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks the defining conditions literally and reports every violation with
// coordinates.  Throws DimensionMismatch when the matrix is not N x m for
// the given kind/n/lambda (or lambda itself is malformed).
ValidationReport validate(const std::vector<std::vector<int>>& entries, Kind kind, int n,
                          const StrictPartition& lambda);
ValidationReport validate(const HalfTurnAsm& a);

// Exhaustive, duplicate-free, sorted enumeration by column-by-column
// backtracking on partial-sum states.  With maxCells == 0 the guard is the
// default bound n <= 4; a positive maxCells replaces it by the cell-count
// bound rows*cols <= maxCells.  Throws SizeLimitExceeded past the guard.
std::vector<HalfTurnAsm> enumerateAsms(Kind kind, int n, const StrictPartition& lambda,
                                       long maxCells = 0);

// Independent test oracle: filter every {-1,0,1} matrix through validate().
// Guarded to rows*cols <= 12 (SizeLimitExceeded above).
std::vector<HalfTurnAsm> enumerateAsmsNaive(Kind kind, int n, const StrictPartition& lambda);

// Compass classification of every cell.  An entry 1 maps to WE, -1 to NS and
// 0 is classified by the pair (b, c) with b = inclusive right-accumulated row
// sum and c = strict column sum above: (0,0) SE, (0,1) NE, (1,0) SW, (1,1) NW.
CompassMatrix toCompass(const HalfTurnAsm& a);

// Inverse on valid images: WE -> 1, NS -> -1, everything else 0.
HalfTurnAsm fromCompass(const CompassMatrix& c, Kind kind, int n, const StrictPartition& lambda);

AsmStats stats(const HalfTurnAsm& a);

// Odd-sided -> even-sided by deleting the central row; defined exactly when
// the central half-row is all zero (equivalently: carries no -1), otherwise
// nullopt.  embedCentral inserts the zero central row back; the two are
// mutually inverse bijections between the reducible odd matrices and all
// even ones.
std::optional<HalfTurnAsm> stripCentral(const HalfTurnAsm& a);
HalfTurnAsm embedCentral(const HalfTurnAsm& a);

}  // namespace htsasm
