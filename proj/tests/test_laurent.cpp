#include <random>
#include <vector>

#include "doctest.h"
#include "htsasm/laurent.hpp"

using namespace htsasm;

namespace {

LaurentPoly X(int i, int e = 1) { return LaurentPoly::var(vx(i), e); }
LaurentPoly Y(int i, int e = 1) { return LaurentPoly::var(vy(i), e); }
LaurentPoly Z0(int e = 1) { return LaurentPoly::var(vz0(), e); }

LaurentPoly randomPoly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), coef(-5, 5), expo(-2, 2), pick(0, 2);
    LaurentPoly p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        if (int e = expo(rng); e != 0 && pick(rng) > 0) m.emplace_back(vx(1), e);
        if (int e = expo(rng); e != 0 && pick(rng) > 0) m.emplace_back(vy(2), e);
        p.addTerm(m, {mpq_class(coef(rng)), mpq_class(coef(rng))});
    }
    return p;
}

}  // namespace

TEST_CASE("variable names round-trip") {
    std::vector<VarId> ids = {vx(1),  vx(12), vy(3),  vz0(),   vq(2),  vs(1), vt(0),
                              vt(2),  va1(1), va2(3), vb1(2),  vb2(3), va0(), vb0(),
                              vc(4),  veps()};
    for (const auto& v : ids) CHECK(parseVarName(varName(v)) == v);
    CHECK(varName(vt(0)) == "t");
    CHECK(varName(vt(2)) == "t2");
    CHECK(varName(va1(2)) == "a1_2");
    CHECK(varName(vb2(3)) == "b2_3");
    CHECK_THROWS_AS(parseVarName("w1"), ParseError);
    CHECK_THROWS_AS(parseVarName("x1x"), ParseError);
    CHECK_THROWS_AS(parseVarName(""), ParseError);
}

TEST_CASE("monomial order is total and multiplicative") {
    MonoLess lt;
    Monomial one{};
    Monomial x{{vx(1), 1}};
    Monomial x2{{vx(1), 2}};
    Monomial xinv{{vx(1), -1}};
    Monomial y{{vy(1), 1}};
    // Documented chain: x1^2 < x1 < 1 < x1^-1.
    CHECK(lt(x2, x));
    CHECK(lt(x, one));
    CHECK(lt(one, xinv));
    CHECK_FALSE(lt(xinv, one));
    // Earlier family dominates: any x-power beats a pure y-monomial.
    CHECK(lt(x, y));
    CHECK(lt(y, xinv));

    // lt is multiplication-compatible: a<b implies am<bm for a few samples.
    std::vector<Monomial> ms = {one, x, x2, xinv, y, mulMono(x, y), mulMono(xinv, y)};
    for (const auto& a : ms)
        for (const auto& b : ms)
            for (const auto& m : ms) {
                if (lt(a, b)) CHECK(lt(mulMono(a, m), mulMono(b, m)));
            }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(20260816);
    for (int round = 0; round < 60; ++round) {
        LaurentPoly a = randomPoly(rng), b = randomPoly(rng), c = randomPoly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentPoly());
        CHECK(a * LaurentPoly::one() == a);
        CHECK(a + LaurentPoly() == a);
    }
}

TEST_CASE("inverse monomials and imaginary unit") {
    CHECK(X(1) * X(1, -1) == LaurentPoly::one());
    CHECK(LaurentPoly::imagUnit() * LaurentPoly::imagUnit() == -LaurentPoly::one());
    CHECK(X(1).pow(-3) * X(1).pow(3) == LaurentPoly::one());
    LaurentPoly m = LaurentPoly::term({mpq_class(2), mpq_class(0)}, {{vx(1), 1}, {vy(1), -1}});
    CHECK(m.pow(-1) * m == LaurentPoly::one());
    CHECK_THROWS_AS((X(1) + Y(1)).pow(-1), NonInvertibleImage);
}

TEST_CASE("worked product expansion") {
    // (1 + z0*x1) * (x1 + z0 + y1^-1)
    LaurentPoly lhs = (LaurentPoly::one() + Z0() * X(1)) * (X(1) + Z0() + Y(1, -1));
    LaurentPoly expect = X(1) + Z0() + Y(1, -1) + Z0() * X(1).pow(2) + Z0().pow(2) * X(1) +
                         Z0() * X(1) * Y(1, -1);
    CHECK(lhs == expect);
    CHECK(lhs.termCount() == 6);
    CHECK(lhs.str() ==
          "x1^2*z0 + x1*z0^2 + x1 + x1*y1^-1*z0 + z0 + y1^-1");
    CHECK(LaurentPoly::parse(lhs.str()) == lhs);
}

TEST_CASE("substitution") {
    LaurentPoly p = LaurentPoly::one() + Z0() * X(1);
    // x1 -> i*t*x1, z0 -> i*t  turns 1 + z0*x1 into 1 - t^2*x1.
    std::map<VarId, LaurentPoly> sigma;
    sigma[vx(1)] = LaurentPoly::imagUnit() * LaurentPoly::var(vt(0)) * X(1);
    sigma[vz0()] = LaurentPoly::imagUnit() * LaurentPoly::var(vt(0));
    LaurentPoly got = p.substitute(sigma);
    LaurentPoly expect = LaurentPoly::one() - LaurentPoly::var(vt(0), 2) * X(1);
    CHECK(got == expect);

    // Unmapped variables stay put.
    LaurentPoly q = X(1) + Y(7);
    std::map<VarId, LaurentPoly> onlyX{{vx(1), Y(1)}};
    CHECK(q.substitute(onlyX) == Y(1) + Y(7));

    // Negative powers demand invertible images.
    std::map<VarId, LaurentPoly> bad{{vy(1), X(1) + Y(1)}};
    CHECK_THROWS_AS(Y(1, -1).substitute(bad), NonInvertibleImage);
    // ... but a monomial image is fine.
    std::map<VarId, LaurentPoly> ok{{vy(1), LaurentPoly::term(2, {{vx(2), 1}})}};
    LaurentPoly inv = Y(1, -1).substitute(ok);
    CHECK(inv == LaurentPoly::term({mpq_class(1, 2), mpq_class(0)}, {{vx(2), -1}}));

    // Substitution composed with multiplication is a homomorphism.
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
        LaurentPoly a = randomPoly(rng), b = randomPoly(rng);
        std::map<VarId, LaurentPoly> s{{vx(1), Y(2) + LaurentPoly::one()}};
        bool aNeg = a.minExp(vx(1)) < 0, bNeg = b.minExp(vx(1)) < 0;
        if (aNeg || bNeg) continue;
        CHECK((a * b).substitute(s) == a.substitute(s) * b.substitute(s));
        CHECK((a + b).substitute(s) == a.substitute(s) + b.substitute(s));
    }
}

TEST_CASE("rational evaluation") {
    LaurentPoly p = X(1) * Y(1, -1) + Z0();
    std::map<VarId, GaussianRational> pt{{vx(1), GaussianRational(3)},
                                         {vy(1), GaussianRational(2)},
                                         {vz0(), GaussianRational(mpq_class(1, 2))}};
    CHECK(p.evalRational(pt) == GaussianRational(mpq_class(2)));

    std::map<VarId, GaussianRational> missing{{vx(1), GaussianRational(3)}};
    CHECK_THROWS_AS(p.evalRational(missing), HtsasmError);

    std::map<VarId, GaussianRational> zeroAtNeg{{vx(1), GaussianRational(1)},
                                                {vy(1), GaussianRational(0)},
                                                {vz0(), GaussianRational(1)}};
    CHECK_THROWS_AS(p.evalRational(zeroAtNeg), ZeroAssignment);

    // Complex point.
    LaurentPoly sq = X(1) * X(1);
    std::map<VarId, GaussianRational> ipt{{vx(1), GaussianRational::imagUnit()}};
    CHECK(sq.evalRational(ipt) == GaussianRational(-1));
}

TEST_CASE("printing and parsing") {
    CHECK(LaurentPoly().str() == "0");
    CHECK(LaurentPoly::parse("0") == LaurentPoly());
    CHECK(LaurentPoly::constant(-3).str() == "-3");
    CHECK((X(1) - Y(2)).str() == "x1 - y2");
    CHECK((-X(1)).str() == "-x1");
    CHECK((LaurentPoly::imagUnit() * X(1)).str() == "(0+1*i)*x1");
    // Sign convention: a term whose coefficient has negative real part (or
    // zero real and negative imaginary part) contributes the "-" join, and
    // the parenthesized coefficient shows the negated value.
    LaurentPoly cplx = LaurentPoly::constant(GaussianRational(mpq_class(-1), mpq_class(2))) * X(1);
    CHECK(cplx.str() == "-(1-2*i)*x1");
    CHECK(LaurentPoly::parse(cplx.str()) == cplx);

    // Half coefficient, negative exponent, bare t.
    LaurentPoly p = LaurentPoly::term({mpq_class(1, 2), mpq_class(0)}, {{vx(1), -2}, {vt(0), 1}});
    CHECK(p.str() == "1/2*x1^-2*t");
    CHECK(LaurentPoly::parse(p.str()) == p);

    // Unicode minus tolerated on input.
    CHECK(LaurentPoly::parse("x1 \xE2\x88\x92 y2") == X(1) - Y(2));
    CHECK(LaurentPoly::parse("\xE2\x88\x92" "3") == LaurentPoly::constant(-3));

    // Superset niceties: bare i, parenthesized rationals.
    CHECK(LaurentPoly::parse("i*x1") == LaurentPoly::imagUnit() * X(1));
    CHECK(LaurentPoly::parse("(1/2)*x1") ==
          LaurentPoly::term({mpq_class(1, 2), mpq_class(0)}, {{vx(1), 1}}));

    CHECK_THROWS_AS(LaurentPoly::parse(""), ParseError);
    CHECK_THROWS_AS(LaurentPoly::parse("x1 + + y1"), ParseError);

    // Round trip on a random corpus.
    std::mt19937_64 rng(99);
    for (int round = 0; round < 80; ++round) {
        LaurentPoly p2 = randomPoly(rng);
        CAPTURE(p2.str());
        CHECK(LaurentPoly::parse(p2.str()) == p2);
    }
}

TEST_CASE("coefficient extraction") {
    LaurentPoly p = (LaurentPoly::one() + Z0() * X(1)) * (X(1) + Z0() + Y(1, -1));
    CHECK(p.coeffOf({{vx(1), 1}}) == GaussianRational(1));
    CHECK(p.coeffOf({{vx(1), 1}, {vz0(), 2}}) == GaussianRational(1));
    CHECK(p.coeffOf({{vx(1), 5}}) == GaussianRational(0));
    CHECK(p.coeffOfVarPower(vz0(), 0) == X(1) + Y(1, -1));
    CHECK(p.coeffOfVarPower(vz0(), 1) ==
          X(1).pow(2) + X(1) * Y(1, -1) + LaurentPoly::one());
    CHECK(p.coeffOfVarPower(vz0(), 2) == X(1));
    CHECK(p.minExp(vy(1)) == -1);
    CHECK(p.maxExp(vx(1)) == 2);
    CHECK(p.minExp(vq(1)) == 0);
    CHECK(p.dependsOn(vz0()));
    CHECK_FALSE(p.dependsOn(vq(1)));
    CHECK(p.vars() == std::set<VarId>{vx(1), vy(1), vz0()});
    CHECK(p.allCoeffsReal());
    CHECK_FALSE((LaurentPoly::imagUnit() * X(1)).allCoeffsReal());
    CHECK((X(1) * LaurentPoly::constant(GaussianRational(mpq_class(2), mpq_class(3)))).realPart() ==
          X(1) * LaurentPoly::constant(2));
}

TEST_CASE("exact division") {
    LaurentPoly a = LaurentPoly::one() + Z0() * X(1);
    LaurentPoly b = X(1) + Z0() + Y(1, -1);
    CHECK(divideExact(a * b, a) == b);
    CHECK(divideExact(a * b, b) == a);

    // Dividend with negative powers.
    LaurentPoly c = X(1, -2) * (LaurentPoly::one() - Y(1));
    CHECK(divideExact(c * a, a) == c);

    CHECK(divideExact(LaurentPoly(), a) == LaurentPoly());
    CHECK_THROWS_AS(divideExact(a, LaurentPoly()), InexactDivision);
    CHECK_THROWS_AS(divideExact(X(1) + Y(1), X(1) + LaurentPoly::one()), InexactDivision);

    std::mt19937_64 rng(4242);
    for (int round = 0; round < 30; ++round) {
        LaurentPoly p = randomPoly(rng), q = randomPoly(rng);
        if (q.isZero()) continue;
        CHECK(divideExact(p * q, q) == p);
    }
}
