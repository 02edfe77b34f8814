#include <random>

#include "doctest.h"
#include "htsasm/determinant.hpp"
#include "htsasm/series.hpp"

using namespace htsasm;

namespace {

LaurentPoly X(int i, int e = 1) { return LaurentPoly::var(vx(i), e); }
LaurentPoly Y(int i, int e = 1) { return LaurentPoly::var(vy(i), e); }
LaurentPoly Z0(int e = 1) { return LaurentPoly::var(vz0(), e); }
LaurentPoly Q(int e = 1) { return LaurentPoly::var(vq(1), e); }
const LaurentPoly kOne = LaurentPoly::one();

LaurentPoly randomEntry(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    return LaurentPoly::constant(coef(rng)) + LaurentPoly::constant(coef(rng)) * X(1) +
           LaurentPoly::constant(coef(rng)) * Y(1);
}

}  // namespace

TEST_CASE("geometric series") {
    RationalSeriesSpec s;
    s.seriesVar = vq(1);
    s.denominatorFactors = {kOne - X(1) * Q()};
    CHECK(seriesCoeff(s, 0) == kOne);
    CHECK(seriesCoeff(s, 2) == X(1) * X(1));
    CHECK(seriesCoeff(s, 5) == X(1).pow(5));
    CHECK(seriesCoeff(s, -1) == LaurentPoly());
}

TEST_CASE("one numerator factor") {
    // (1 + y1*q) / (1 - x1*q): coefficient of q^1 is x1 + y1.
    RationalSeriesSpec s;
    s.seriesVar = vq(1);
    s.numeratorFactors = {kOne + Y(1) * Q()};
    s.denominatorFactors = {kOne - X(1) * Q()};
    CHECK(seriesCoeff(s, 1) == X(1) + Y(1));
    CHECK(seriesCoeff(s, 2) == X(1).pow(2) + X(1) * Y(1));
}

TEST_CASE("leading power and constant numerator") {
    // q*z0*x1/(1-x1*q) * (1+z0^-1*q)/(1-z0*q) * (1+x1^-1*q)/(1-y1^-1*q):
    // only the leading q term survives at k=1, giving z0*x1.
    RationalSeriesSpec s;
    s.seriesVar = vq(1);
    s.leadingPower = 1;
    s.numeratorFactors = {Z0() * X(1), kOne + Z0(-1) * Q(), kOne + X(1, -1) * Q()};
    s.denominatorFactors = {kOne - X(1) * Q(), kOne - Z0() * Q(), kOne - Y(1, -1) * Q()};
    CHECK(seriesCoeff(s, 0) == LaurentPoly());
    CHECK(seriesCoeff(s, 1) == Z0() * X(1));
}

TEST_CASE("series validation") {
    RationalSeriesSpec bad;
    bad.seriesVar = vq(1);
    bad.denominatorFactors = {LaurentPoly::constant(2) - Q()};
    CHECK_THROWS_AS(seriesCoeff(bad, 1), HtsasmError);

    RationalSeriesSpec negPow;
    negPow.seriesVar = vq(1);
    negPow.numeratorFactors = {Q(-1) + kOne};
    CHECK_THROWS_AS(seriesCoeff(negPow, 1), HtsasmError);
}

TEST_CASE("product of specs is coefficient convolution") {
    RationalSeriesSpec a;
    a.seriesVar = vq(1);
    a.leadingPower = 1;
    a.numeratorFactors = {kOne + Y(1) * Q()};
    a.denominatorFactors = {kOne - X(1) * Q()};

    RationalSeriesSpec b;
    b.seriesVar = vq(1);
    b.numeratorFactors = {Z0(), kOne + X(2) * Q()};
    b.denominatorFactors = {kOne - Y(2) * Q()};

    RationalSeriesSpec ab = mulSpecs(a, b);
    CHECK(ab.leadingPower == 1);
    for (int k = 0; k <= 5; ++k) {
        LaurentPoly conv;
        for (int j = 0; j <= k; ++j) conv += seriesCoeff(a, j) * seriesCoeff(b, k - j);
        CHECK(seriesCoeff(ab, k) == conv);
    }

    RationalSeriesSpec otherVar;
    otherVar.seriesVar = vq(2);
    CHECK_THROWS_AS(mulSpecs(a, otherVar), DimensionMismatch);
}

TEST_CASE("determinant basics") {
    PolyMatrix id2 = {{kOne, {}}, {{}, kOne}};
    CHECK(detSymbolic(id2) == kOne);
    CHECK(detSymbolic(PolyMatrix{}) == kOne);

    PolyMatrix vand = {{X(1), X(2)}, {kOne, kOne}};
    CHECK(detSymbolic(vand) == X(1) - X(2));

    PolyMatrix upper = {{kOne + LaurentPoly::imagUnit() * X(1), X(2)}, {{}, X(3)}};
    CHECK(detSymbolic(upper) == (kOne + LaurentPoly::imagUnit() * X(1)) * X(3));

    PolyMatrix nonsq = {{kOne, kOne}};
    CHECK_THROWS_AS(detSymbolic(nonsq), DimensionMismatch);

    PolyMatrix oneByOne = {{kOne + LaurentPoly::var(vc(1)) * LaurentPoly::var(vc(2))}};
    CHECK(detSymbolic(oneByOne) == kOne + LaurentPoly::var(vc(1)) * LaurentPoly::var(vc(2)));
}

TEST_CASE("Laplace and fraction-free elimination agree") {
    std::mt19937_64 rng(31337);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int round = 0; round < (n <= 4 ? 6 : 2); ++round) {
            PolyMatrix m(n, std::vector<LaurentPoly>(n));
            for (auto& row : m)
                for (auto& e : row) e = randomEntry(rng);
            // Sprinkle structural zeros to exercise the pivot search.
            if (round % 2 == 1) {
                m[0][0] = LaurentPoly();
                if (n > 2) m[1][1] = LaurentPoly();
            }
            CHECK(detLaplace(m) == detBareiss(m));
        }
    }

    // Singular matrix: duplicate rows.
    PolyMatrix sing = {{X(1), Y(1), kOne}, {X(1), Y(1), kOne}, {Z0(), kOne, X(2)}};
    CHECK(detLaplace(sing) == LaurentPoly());
    CHECK(detBareiss(sing) == LaurentPoly());
}

TEST_CASE("determinant multiplicativity") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (std::size_t n = 2; n <= 3; ++n) {
        for (int round = 0; round < 8; ++round) {
            PolyMatrix a(n, std::vector<LaurentPoly>(n)), b(n, std::vector<LaurentPoly>(n)),
                ab(n, std::vector<LaurentPoly>(n));
            std::vector<std::vector<GaussianRational>> ar(n, std::vector<GaussianRational>(n)),
                br(n, std::vector<GaussianRational>(n)), abr(n, std::vector<GaussianRational>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    ar[i][j] = GaussianRational(coef(rng));
                    br[i][j] = GaussianRational(coef(rng));
                    a[i][j] = LaurentPoly::constant(ar[i][j]);
                    b[i][j] = LaurentPoly::constant(br[i][j]);
                }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    GaussianRational acc(0);
                    for (std::size_t k = 0; k < n; ++k) acc += ar[i][k] * br[k][j];
                    abr[i][j] = acc;
                    ab[i][j] = LaurentPoly::constant(acc);
                }
            CHECK(detSymbolic(ab) == detSymbolic(a) * detSymbolic(b));
            CHECK(detRational(abr) == detRational(ar) * detRational(br));
            CHECK(detSymbolic(a) == LaurentPoly::constant(detRational(ar)));
        }
    }
}
