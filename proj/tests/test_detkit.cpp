#include <map>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "htsasm/detkit.hpp"
#include "htsasm/json_io.hpp"
#include "htsasm/paths.hpp"
#include "htsasm/series.hpp"
#include "htsasm/symfunc.hpp"

using namespace htsasm;

namespace {

LaurentPoly One() { return LaurentPoly::one(); }
LaurentPoly X(int i, int e = 1) { return LaurentPoly::var(vx(i), e); }
LaurentPoly Y(int i, int e = 1) { return LaurentPoly::var(vy(i), e); }
LaurentPoly Z0(int e = 1) { return LaurentPoly::var(vz0(), e); }
LaurentPoly Q(int i, int e = 1) { return LaurentPoly::var(vq(i), e); }
LaurentPoly C(int i) { return LaurentPoly::var(vc(i)); }

LaurentPoly flipped(const LaurentPoly& p, VarId q) {
    return p.substitute({{q, -LaurentPoly::var(q, -1)}});
}

// Numeric determinant of the cleared generating-function matrix at a point
// with prescribed column values, independent of the checkDeth plumbing.
GaussianRational clearedDetAt(int n, const std::vector<GaussianRational>& qs,
                              const std::map<VarId, GaussianRational>& zPoint) {
    std::vector<std::vector<GaussianRational>> m(static_cast<std::size_t>(n),
                                                 std::vector<GaussianRational>(static_cast<std::size_t>(n)));
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            auto pt = zPoint;
            pt[vq(0)] = qs[static_cast<std::size_t>(l - 1)];
            GaussianRational f = clearedF(k, n, vq(0)).eval(pt);
            GaussianRational g = clearedG(k, n, vq(0)).eval(pt);
            m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] =
                ((n - k) % 2 == 0) ? f + g : f - g;
        }
    return detRational(std::move(m));
}

std::map<VarId, GaussianRational> levelPoint(int n) {
    std::map<VarId, GaussianRational> pt;
    pt[vz0()] = GaussianRational(5);
    for (int i = 1; i <= n; ++i) {
        pt[vx(i)] = GaussianRational(2 + i);
        pt[vy(i)] = GaussianRational(11 + i);
    }
    return pt;
}

}  // namespace

TEST_CASE("cleared row polynomials reproduce the path generating functions") {
    for (int n = 1; n <= 2; ++n)
        for (int k = 1; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            auto den = seriesDenominator(n, vq(0)).factors;
            RationalSeriesSpec fSpec{vq(0), {clearedF(k, n, vq(0)).expand()}, den, 0};
            RationalSeriesSpec gSpec{vq(0), {clearedG(k, n, vq(0)).expand()}, den, 0};
            RationalSeriesSpec hSpec{vq(0), {clearedH(k, n, vq(0))}, den, 0};
            for (int r = 0; r <= 6; ++r) {
                CAPTURE(r);
                CHECK(seriesCoeff(fSpec, r) == seriesCoeff(genF(k, n), r));
                CHECK(seriesCoeff(gSpec, r) == seriesCoeff(genG(k, n), r));
                CHECK(seriesCoeff(hSpec, r) == seriesCoeff(genH(k, n), r));
            }
        }
}

TEST_CASE("cleared determinant equals its product form symbolically") {
    SUBCASE("n=1 in closed form") {
        LaurentPoly lhs = clearedH(1, 1, vq(1));
        CHECK(lhs == hProductSide(1).expand());
        CHECK(lhs.str() == "x1*z0*q1^3 + x1*z0*q1 + q1^3 + q1");
        CHECK(lhs == (One() + Z0() * X(1)) * (Q(1) + Q(1, 3)));
    }
    SUBCASE("n up to 3 via the checker") {
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(n);
            LemmaCheckConfig cfg;
            cfg.whichLemma = LemmaId::Deth;
            cfg.n = n;
            LemmaReport rep = checkDeth(cfg);
            CHECK(rep.ok);
            CHECK(rep.lemma == "deth");
            CHECK(rep.mode == "symbolic");
            CHECK(rep.n == n);
            CHECK(!rep.seed.has_value());
            CHECK(rep.failures.empty());
        }
    }
}

TEST_CASE("one-row reduction splits the cleared polynomial into flip halves") {
    // clearedH(k,n,q) == uWeight(k,n) q^{n+1} (H(q) - H(-1/q)).
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            LaurentPoly half = hHalfPoly(k, n, vq(0)).expand();
            LaurentPoly rhs =
                uWeight(k, n) * LaurentPoly::var(vq(0), n + 1) * (half - flipped(half, vq(0)));
            CHECK(clearedH(k, n, vq(0)) == rhs);
        }
    // The row prefactor uWeight(k,n) = z0 x_k prod_{i>k} x_i/y_i is also the
    // weight the paths module assigns to a curve edge into level k.
    CHECK(uWeight(1, 2).str() == "x1*x2*y2^-1*z0");
    CHECK(uWeight(2, 2).str() == "x2*z0");
}

TEST_CASE("determinant vanishes at coincident or inverse-negated columns") {
    for (int n = 2; n <= 3; ++n) {
        CAPTURE(n);
        auto zpt = levelPoint(n);
        GaussianRational a(7);
        std::vector<GaussianRational> qs(static_cast<std::size_t>(n));
        for (int l = 0; l < n; ++l) qs[static_cast<std::size_t>(l)] = GaussianRational(31 + 2 * l);
        auto generic = qs;
        CHECK(!clearedDetAt(n, generic, zpt).isZero());
        auto equal = qs;
        equal[0] = a;
        equal[1] = a;
        CHECK(clearedDetAt(n, equal, zpt).isZero());
        auto inverse = qs;
        inverse[0] = a;
        inverse[1] = -a.inverse();
        CHECK(clearedDetAt(n, inverse, zpt).isZero());
    }
}

TEST_CASE("four-alphabet determinant equals its product form") {
    SUBCASE("n=1 entry in closed form") {
        LaurentPoly m = mEntry(1, 1, vq(1));
        CHECK(m.str() == "q1*c1*c2 + q1 + q1^-1*c1*c2 + q1^-1");
        CHECK(m == (One() + C(1) * C(2)) * Q(1, -1) * (One() + Q(1) * Q(1)));
    }
    SUBCASE("n up to 3 via the checker") {
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(n);
            LemmaCheckConfig cfg;
            cfg.whichLemma = LemmaId::Detm;
            cfg.n = n;
            LemmaReport rep = checkDetm(cfg);
            CHECK(rep.ok);
            CHECK(rep.lemma == "detm");
            CHECK(rep.failures.empty());
        }
    }
}

TEST_CASE("free parameters specialize to the level-weight row polynomials") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        std::map<VarId, LaurentPoly> link;
        for (int i = 1; i <= n; ++i) {
            link[va1(i)] = Y(i);
            link[vb1(i)] = X(i);
            link[vc(i)] = X(i, -1);
        }
        link[vc(n + 1)] = Z0(-1);
        for (int k = 1; k <= n; ++k) {
            CAPTURE(k);
            CHECK(mHalfPoly(k, n, vq(0)).expand().substitute(link) ==
                  hHalfPoly(k, n, vq(0)).expand());
            // Hence the specialized four-alphabet entries rebuild clearedH
            // up to the row and column monomials of the one-row reduction.
            CHECK(uWeight(k, n) * LaurentPoly::var(vq(0), n + 1) *
                      mEntry(k, n, vq(0)).substitute(link) ==
                  clearedH(k, n, vq(0)));
        }
    }
}

TEST_CASE("difference identity for complete symmetric functions") {
    SUBCASE("degenerate and small cases in closed form") {
        // r=0: both sides vanish.
        CHECK(checkHr(0, 0).ok);
        // r=1 with no shared variables: p - 1/p - q + 1/q == (p-q)(1+1/(pq)).
        LaurentPoly lhs = Q(1) - Q(1, -1) - Q(2) + Q(2, -1);
        LaurentPoly rhs = (Q(1) - Q(2)) * (One() + Q(1, -1) * Q(2, -1));
        CHECK(lhs == rhs);
        CHECK(checkHr(1, 0).ok);
    }
    SUBCASE("degrees up to 6 with up to 3 shared variables") {
        for (int r = 0; r <= 6; ++r)
            for (int nv = 0; nv <= 3; ++nv) {
                CAPTURE(r);
                CAPTURE(nv);
                LemmaReport rep = checkHr(r, nv);
                CHECK(rep.ok);
                CHECK(rep.lemma == "hr");
                CHECK(rep.n == r);
            }
    }
    SUBCASE("closed form of the two-value complete function") {
        // (q + 1/q) h_r(q, -1/q) == q^{r+1} + (-1)^r q^{-r-1}.
        for (int r = 0; r <= 6; ++r) {
            CAPTURE(r);
            LaurentPoly lhs = (Q(1) + Q(1, -1)) * complete(r, {Q(1), -Q(1, -1)});
            LaurentPoly rhs = Q(1, r + 1) + LaurentPoly::constant(r % 2 == 0 ? 1 : -1) * Q(1, -r - 1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("elementary-symmetric determinant equals the pair product") {
    SUBCASE("smallest cases in closed form") {
        PolyMatrix m1 = edetMatrix(1);
        REQUIRE(m1.size() == 1);
        CHECK(m1[0][0] == One() + C(1) * C(2));
        LaurentPoly det2 = detSymbolic(edetMatrix(2));
        CHECK(det2 == (One() + C(1) * C(2)) * (One() + C(1) * C(3)) * (One() + C(2) * C(3)));
    }
    SUBCASE("n up to 4 via the checker") {
        for (int n = 1; n <= 4; ++n) {
            CAPTURE(n);
            LemmaReport rep = checkEdet(n);
            CHECK(rep.ok);
            CHECK(rep.lemma == "edet");
        }
    }
    SUBCASE("the determinant is the class-restricted schur sum") {
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(n);
            std::vector<LaurentPoly> cv;
            for (int i = 1; i <= n + 1; ++i) cv.push_back(C(i));
            auto lw = littlewoodProducts(cv, LittlewoodVariant::Strict);
            LaurentPoly det = detSymbolic(edetMatrix(n));
            CHECK(det == lw.product);
            CHECK(det == lw.schurSum);
        }
    }
}

TEST_CASE("product-form coefficients match the path determinant route") {
    std::vector<std::pair<int, StrictPartition>> shapes{
        {1, {1}}, {1, {2}}, {1, {3}}, {2, {2, 1}}, {2, {3, 1}}, {2, {3, 2}}};
    for (const auto& [n, lam] : shapes) {
        CAPTURE(n);
        CAPTURE(lam.front());
        LaurentPoly coeff = productSideCoefficient(n, lam);
        PdetReport rep = verifyPdet(n, lam);
        CHECK(rep.ok);
        CHECK(coeff == rep.tableauSum);
        CHECK(coeff == rep.detValue);
    }
    CHECK_THROWS_AS(productSideCoefficient(2, {1, 1}), DimensionMismatch);
    CHECK_THROWS_AS(productSideCoefficient(2, {2}), DimensionMismatch);
    CHECK_THROWS_AS(productSideCoefficient(4, {5, 3, 2, 1}), SizeLimitExceeded);
}

TEST_CASE("random-point campaigns are reproducible and record their seed") {
    LemmaCheckConfig cfg;
    cfg.mode = LemmaMode::RandomEval;
    cfg.trials = 20;
    cfg.seed = 424242;

    SUBCASE("cleared determinant at larger sizes") {
        for (int n : {4, 6}) {
            CAPTURE(n);
            cfg.whichLemma = LemmaId::Deth;
            cfg.n = n;
            LemmaReport rep = checkDeth(cfg);
            CHECK(rep.ok);
            CHECK(rep.mode == "random");
            REQUIRE(rep.seed.has_value());
            CHECK(*rep.seed == 424242);
            CHECK(rep.failures.empty());
        }
    }
    SUBCASE("four-alphabet determinant at larger sizes") {
        for (int n : {4, 6}) {
            CAPTURE(n);
            cfg.whichLemma = LemmaId::Detm;
            cfg.n = n;
            LemmaReport rep = checkDetm(cfg);
            CHECK(rep.ok);
            REQUIRE(rep.seed.has_value());
            CHECK(*rep.seed == 424242);
        }
    }
    SUBCASE("identical seeds give identical reports") {
        cfg.whichLemma = LemmaId::Deth;
        cfg.n = 3;
        cfg.trials = 5;
        LemmaReport a = checkDeth(cfg);
        LemmaReport b = checkDeth(cfg);
        CHECK(lemmaReportToJson(a).dump() == lemmaReportToJson(b).dump());
        cfg.seed = 7;
        LemmaReport c = checkDeth(cfg);
        CHECK(c.ok);
        CHECK(*c.seed == 7);
    }
}

TEST_CASE("lemma reports serialize to json") {
    LemmaReport sym = checkEdet(1);
    CHECK(lemmaReportToJson(sym).dump() ==
          R"({"lemma":"edet","n":1,"mode":"symbolic","ok":true,"failures":[]})");

    LemmaCheckConfig cfg;
    cfg.whichLemma = LemmaId::Detm;
    cfg.n = 2;
    cfg.mode = LemmaMode::RandomEval;
    cfg.trials = 3;
    cfg.seed = 7;
    LemmaReport rnd = checkDetm(cfg);
    CHECK(lemmaReportToJson(rnd).dump() ==
          R"({"lemma":"detm","n":2,"mode":"random","ok":true,"seed":7,"failures":[]})");
}

TEST_CASE("dispatcher and configuration bounds") {
    SUBCASE("dispatch reaches every check") {
        LemmaCheckConfig cfg;
        cfg.n = 1;
        cfg.whichLemma = LemmaId::Deth;
        CHECK(runLemmaCheck(cfg).lemma == "deth");
        cfg.whichLemma = LemmaId::Detm;
        CHECK(runLemmaCheck(cfg).lemma == "detm");
        cfg.whichLemma = LemmaId::Hr;
        cfg.n = 2;
        cfg.hrVars = 1;
        CHECK(runLemmaCheck(cfg).lemma == "hr");
        cfg.whichLemma = LemmaId::Edet;
        CHECK(runLemmaCheck(cfg).lemma == "edet");
    }
    SUBCASE("symbolic bounds") {
        LemmaCheckConfig cfg;
        cfg.n = 4;
        cfg.whichLemma = LemmaId::Deth;
        CHECK_THROWS_AS(checkDeth(cfg), SizeLimitExceeded);
        cfg.whichLemma = LemmaId::Detm;
        CHECK_THROWS_AS(checkDetm(cfg), SizeLimitExceeded);
        CHECK_THROWS_AS(checkEdet(5), SizeLimitExceeded);
        CHECK_THROWS_AS(checkHr(3, 5), SizeLimitExceeded);
        CHECK_THROWS_AS(checkHr(-1, 2), HtsasmError);
    }
    SUBCASE("random bounds") {
        LemmaCheckConfig cfg;
        cfg.mode = LemmaMode::RandomEval;
        cfg.whichLemma = LemmaId::Deth;
        cfg.n = 9;
        CHECK_THROWS_AS(checkDeth(cfg), SizeLimitExceeded);
        cfg.n = 2;
        cfg.trials = 0;
        CHECK_THROWS_AS(checkDeth(cfg), HtsasmError);
        cfg.trials = 1;
        cfg.whichLemma = LemmaId::Hr;
        CHECK_THROWS_AS(runLemmaCheck(cfg), HtsasmError);
        cfg.whichLemma = LemmaId::Edet;
        CHECK_THROWS_AS(runLemmaCheck(cfg), HtsasmError);
    }
}
