#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "htsasm/asm.hpp"
#include "htsasm/determinant.hpp"
#include "htsasm/laurent.hpp"

namespace htsasm {

// Independent verification of the determinant evaluations used by the
// lattice-path route: the generating-function determinant has a closed
// product form (checkDeth), it reduces to a four-alphabet determinant with
// free parameters (checkDetm), and that reduction rests on a difference
// identity for complete symmetric functions (checkHr) plus an
// elementary-symmetric determinant evaluation (checkEdet).

// A polynomial kept as prefactor * product(factors).  Large instances are
// evaluated at rational points factor by factor without ever expanding;
// small instances expand for symbolic comparison.  Both views are exact.
struct FactoredPoly {
    LaurentPoly prefactor;
    std::vector<LaurentPoly> factors;

    LaurentPoly expand() const;
    // Every variable of every factor must be assigned (see evalRational).
    GaussianRational eval(const std::map<VarId, GaussianRational>& point) const;
};

enum class LemmaId { Deth, Detm, Hr, Edet };
enum class LemmaMode { Symbolic, RandomEval };

struct LemmaCheckConfig {
    LemmaId whichLemma = LemmaId::Deth;
    // Matrix size for Deth/Detm/Edet; the degree r for Hr.
    int n = 1;
    LemmaMode mode = LemmaMode::Symbolic;
    // RandomEval only: number of evaluation points (>= 1).
    int trials = 20;
    // RandomEval only: master seed, recorded in the report; per-trial
    // engines are seeded from a stream derived from it.
    std::uint64_t seed = 1;
    // Hr only: number of shared tail variables (0..4).
    int hrVars = 2;
};

struct LemmaReport {
    std::string lemma;  // "deth" | "detm" | "hr" | "edet"
    int n = 0;
    std::string mode;  // "symbolic" | "random"
    bool ok = false;
    std::optional<std::uint64_t> seed;  // present for random runs
    std::vector<std::string> failures;  // empty iff ok
};

// ---- building blocks of the generating-function determinant -------------
// All live in the level weights x_1..x_n, y_1..y_n, z0 and one column
// variable q.  Row index k runs 1..n.

// Common denominator of the row generating functions in q:
// (1 - z0 q) * prod_i (1 - x_i q)(1 - q/y_i).
FactoredPoly seriesDenominator(int n, VarId q = vq(0));

// The row generating functions of the paths module with seriesDenominator
// cleared, i.e. honest polynomials in q:
//   clearedF = u_k q (1 + q/z0) prod_i (1 + q/x_i)
//              * prod_{i>k} (1 + y_i q) * prod_{i<k} (1 - x_i q)
//   clearedG = q prod_{i<k} (1 + q/x_i)
//              * (1 - z0 q) prod_i (1 - x_i q) * prod_{i>k} (1 - q/y_i)
// so that clearedF / seriesDenominator expands to the same series as genF,
// and likewise for clearedG / genG.
FactoredPoly clearedF(int k, int n, VarId q = vq(0));
FactoredPoly clearedG(int k, int n, VarId q = vq(0));

// clearedF + (-1)^{n-k} clearedG, expanded.
LaurentPoly clearedH(int k, int n, VarId q = vq(0));

// n x n matrix with entry (k,l) = clearedH(k, n, q_l), columns in q_1..q_n.
PolyMatrix clearedHMatrix(int n);

// The closed product det(clearedHMatrix(n)) equals:
//   prod_i x_i^{-(n-i)} q_i (1 + z0 x_i) (1 + q_i^2)
//   * prod_{i<j} (1 + x_i x_j)(1 + x_i/y_j) (q_i - q_j)(1 + q_i q_j).
FactoredPoly hProductSide(int n);

// Half of the one-row reduction: clearedH(k, n, q) equals
//   uWeight(k, n) * q^{n+1} * (H(q) - H(-1/q))   with H = hHalfPoly(k, n, q)
//   = q^{-n} (1 + q/z0) prod_i (1 + q/x_i)
//     * prod_{i<k} (1 - x_i q) * prod_{i>k} (1 + y_i q).
FactoredPoly hHalfPoly(int k, int n, VarId q = vq(0));

// The same shape with all level structure abstracted into free parameter
// alphabets a_1..a_n, b_1..b_n, c_1..c_{n+1}:
//   q^{-n} prod_i (1 + c_i q) * prod_{i<k} (1 - b_i q) * prod_{i>k} (1 + a_i q).
// Substituting a_i -> y_i, b_i -> x_i, c_i -> 1/x_i, c_{n+1} -> 1/z0
// recovers hHalfPoly.
FactoredPoly mHalfPoly(int k, int n, VarId q = vq(0));

// mHalfPoly(q) - mHalfPoly(-1/q), expanded.
LaurentPoly mEntry(int k, int n, VarId q = vq(0));

// n x n matrix with entry (k,l) = mEntry(k, n, q_l).
PolyMatrix mMatrix(int n);

// The closed product det(mMatrix(n)) equals:
//   prod_{i<j<=n+1} (1 + c_i c_j) * prod_{i<j<=n} (b_i + a_j)
//   * prod_i q_i^{-n} (1 + q_i^2) * prod_{i<j} (q_i - q_j)(1 + q_i q_j).
FactoredPoly mProductSide(int n);

// n x n matrix with entry (k,l) = e_{k-l}(c) + (-1)^{l-1} e_{k+l}(c) over
// the alphabet c_1..c_{n+1}; its determinant is prod_{i<j} (1 + c_i c_j).
PolyMatrix edetMatrix(int n);

// Coefficient of prod_l q_l^{lambda_l} in
// hProductSide(n) / prod_l seriesDenominator(n, q_l) — the product-form
// route to the weighted path sum of verifyPdet.  lambda must be a strict
// partition with exactly n parts (DimensionMismatch); n <= 3
// (SizeLimitExceeded).
LaurentPoly productSideCoefficient(int n, const StrictPartition& lambda);

// ---- the checks ----------------------------------------------------------
// Symbolic mode compares expanded polynomials; bounds: n <= 3 for
// Deth/Detm, n <= 4 for Edet (SizeLimitExceeded beyond).  RandomEval mode
// (Deth/Detm only, n <= 8) evaluates both sides at `trials` rational points
// with coordinates drawn uniformly from the integers 2..97, rejecting
// points that annihilate a seriesDenominator factor (only q_l = y_i can,
// for such draws) and points with two equal column values, which would make
// both sides vanish trivially.
LemmaReport checkDeth(const LemmaCheckConfig& cfg);
LemmaReport checkDetm(const LemmaCheckConfig& cfg);

// h_r(p, -1/p, y) - h_r(q, -1/q, y) ==
//   (p - q)(1 + 1/(pq)) * h_{r-1}(p, -1/p, q, -1/q, y)
// with nVars shared tail variables y (0..4) and h_{-1} = 0.  Symbolic.
LemmaReport checkHr(int r, int nVars);

// det(edetMatrix(n)) == prod_{1<=i<j<=n+1} (1 + c_i c_j), n <= 4.  Symbolic.
LemmaReport checkEdet(int n);

// Dispatch on cfg.whichLemma; Hr uses cfg.n as r together with cfg.hrVars.
// Hr and Edet accept Symbolic mode only (HtsasmError otherwise).
LemmaReport runLemmaCheck(const LemmaCheckConfig& cfg);

}  // namespace htsasm
