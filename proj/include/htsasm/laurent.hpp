#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "htsasm/rational.hpp"
#include "htsasm/varid.hpp"

namespace htsasm {

// A Laurent monomial: sorted (VarId, exponent) pairs, no zero exponents.
// Negative exponents are first-class (z-bar = z^{-1} throughout).
using Monomial = std::vector<std::pair<VarId, int>>;

Monomial mulMono(const Monomial& a, const Monomial& b);
Monomial invMono(const Monomial& a);
Monomial powMono(const Monomial& a, int e);

// Total, multiplication-compatible order: walk the union of variables in
// VarId order; at the first variable whose exponents differ, the term with
// the LARGER exponent sorts first.  Hence x1^2 < x1 < 1 < x1^-1 in map order,
// constants sit between positive and negative powers, and leading terms
// multiply (lt(pq) = lt(p)lt(q)) — which exact division relies on.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate Laurent polynomial over the Gaussian rationals.
// Invariant: no zero coefficients stored.  All operations are pure.
class LaurentPoly {
  public:
    using TermMap = std::map<Monomial, GaussianRational, MonoLess>;

    LaurentPoly() = default;

    static LaurentPoly constant(const GaussianRational& c);
    static LaurentPoly constant(long c) { return constant(GaussianRational(c)); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly imagUnit() { return constant(GaussianRational::imagUnit()); }
    static LaurentPoly var(VarId v, int exp = 1);
    static LaurentPoly term(const GaussianRational& c, const Monomial& m);

    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    void addTerm(const Monomial& m, const GaussianRational& c);

    // p^e.  Negative e requires p to be a single invertible term.
    LaurentPoly pow(int e) const;

    // True when the polynomial is c * single monomial (and not zero).
    bool isMonomial() const { return terms_.size() == 1; }

    // Homomorphic substitution; unmapped variables stay put.  Throws
    // NonInvertibleImage when a negative power of a mapped variable needs an
    // inverse the image does not have (image not a nonzero monomial).
    LaurentPoly substitute(const std::map<VarId, LaurentPoly>& sigma) const;

    // Exact evaluation; every variable of the polynomial must be assigned.
    // Throws ZeroAssignment when a variable occurring with a negative
    // exponent is assigned 0.
    GaussianRational evalRational(const std::map<VarId, GaussianRational>& point) const;

    GaussianRational coeffOf(const Monomial& m) const;
    GaussianRational constantTerm() const { return coeffOf({}); }

    // The polynomial multiplying v^k, with v removed from the monomials.
    LaurentPoly coeffOfVarPower(VarId v, int k) const;
    // Lowest / highest exponent of v across terms (0 when v absent everywhere).
    int minExp(VarId v) const;
    int maxExp(VarId v) const;
    bool dependsOn(VarId v) const;

    std::set<VarId> vars() const;
    bool allCoeffsReal() const;
    // Drop every imaginary part (used to *report* near-real sums, never to fix them).
    LaurentPoly realPart() const;

    // Canonical text, bit-exact and parseable: terms in monomial order joined
    // by " + " / " - "; monomials as var^exp products with '*'; rational
    // coefficients bare, complex ones as "(a+b*i)"; "0" for the zero poly.
    std::string str() const;
    static LaurentPoly parse(const std::string& text);

  private:
    TermMap terms_;
};

// Exact division: returns q with num = q * den.  Throws InexactDivision when
// den does not divide num (guarded by an iteration cap, since a Laurent
// division that does not terminate walks down forever).
LaurentPoly divideExact(const LaurentPoly& num, const LaurentPoly& den);

std::string monoStr(const Monomial& m);

}  // namespace htsasm
