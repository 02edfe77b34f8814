#pragma once

#include <map>
#include <string>
#include <vector>

#include "htsasm/asm.hpp"
#include "htsasm/laurent.hpp"
#include "htsasm/symfunc.hpp"

namespace htsasm {

// The published weighting schemes.  Generic is the two-parameter-per-row
// master scheme on odd-sided matrices; every other scheme is either its
// even-sided counterpart or a parameter specialization of it.
enum class WeightScheme {
    Generic,          // odd-sided, variables x_i, y_i, z0
    Result1,          // odd-sided, extra row parameters s_i, t_i
    Okada,            // even-sided, single deformation t
    Simpson,          // odd-sided, single deformation t
    Tabony,           // even-sided, per-row deformations t_i
    BnCorollary,      // even-sided, signed x/y table
    BrubakerSchultz,  // odd-sided, free-fermion a/b parameters
};

std::string schemeName(WeightScheme s);               // "generic", ..., "bs"
WeightScheme parseScheme(const std::string& name);    // throws ParseError
Kind schemeKind(WeightScheme s);

// Negative-control knob: multiplies every table entry of one class --
// identified by row band and compass label -- by (1 + eps).  Bands: 0 rows
// above the centre, 1 the central row (odd kinds only), 2 rows below.
struct TablePerturbation {
    int band = 0;
    Compass label = Compass::WE;
};

// Weight of one matrix under the scheme's published table (statistics
// prefactor times the product of per-cell compass weights).  Throws
// SchemeKindMismatch when the matrix kind is not the scheme's kind.
LaurentPoly wgtAsm(const HalfTurnAsm& a, WeightScheme scheme,
                   const TablePerturbation* perturb = nullptr);

// How many cells of the matrix the perturbation class touches.
int perturbationHits(const HalfTurnAsm& a, WeightScheme scheme, const TablePerturbation& p);

// Sum of wgtAsm over the full enumeration of the shape family.
LaurentPoly sumWgt(Kind kind, int n, const StrictPartition& lambda, WeightScheme scheme,
                   long maxCells = 0, const TablePerturbation* perturb = nullptr);

StrictPartition staircase(int n);                         // (n, n-1, ..., 1)
// mu + staircase; throws DimensionMismatch when l(mu) > n or mu is invalid.
StrictPartition shapeFromMu(const Partition& mu, int n);

// Closed-form product equal to the scheme's staircase-shape sum.
LaurentPoly deltaProduct(Kind kind, int n, WeightScheme scheme);

// The 2n+1 monomial components feeding the scheme's Schur-sum factor.
std::vector<LaurentPoly> schemeZ(WeightScheme s, int n);

// The Schur-sum factor of the scheme's factorization at shape mu+staircase,
// including any I^{|mu|} or column-count prefactor the scheme carries
// (m = first part of the shape; only some schemes use it).
LaurentPoly schemePhi(WeightScheme s, int n, const Partition& mu, int m);

// Substitution realizing the scheme's weights inside the Generic table.
std::map<VarId, LaurentPoly> specializeScheme(WeightScheme target, int n);

// Generic staircase product under x_i -> I x_i, z0 -> I, y_i -> -I x_i: the
// odd orthogonal Weyl denominator prod(1-x_i) prod(1-x_i x_j)(1-x_i/x_j).
LaurentPoly weylSpecialization(int n);

struct VerificationReport {
    WeightScheme scheme{WeightScheme::Generic};
    int n = 0;
    Partition mu;
    LaurentPoly lhs;       // sum over the mu+staircase family
    LaurentPoly rhsDelta;  // closed-form staircase product
    LaurentPoly rhsPhi;    // Schur-sum factor
    bool equal = false;
    LaurentPoly counterexampleDiff;  // lhs - rhsDelta*rhsPhi; zero when equal
};

// Checks lhs == rhsDelta * rhsPhi exactly.  The perturbation, when given,
// applies to the lhs table only (negative-control use).
VerificationReport verifyFactorization(Kind kind, int n, const Partition& mu,
                                       WeightScheme scheme, long maxCells = 0,
                                       const TablePerturbation* perturb = nullptr);

// Free-fermion sum check: verifyFactorization for the a/b-parameter scheme
// (mu empty checks the bare staircase product identity).
VerificationReport bsVerify(int n, const Partition& mu, long maxCells = 0);

}  // namespace htsasm
