#include "htsasm/detkit.hpp"

#include <random>
#include <sstream>
#include <utility>

#include "htsasm/paths.hpp"
#include "htsasm/series.hpp"
#include "htsasm/symfunc.hpp"

namespace htsasm {

namespace {

LaurentPoly one() { return LaurentPoly::one(); }
LaurentPoly X(int i, int e = 1) { return LaurentPoly::var(vx(i), e); }
LaurentPoly Y(int i, int e = 1) { return LaurentPoly::var(vy(i), e); }
LaurentPoly Z0(int e = 1) { return LaurentPoly::var(vz0(), e); }
LaurentPoly A(int i) { return LaurentPoly::var(va1(i)); }
LaurentPoly B(int i) { return LaurentPoly::var(vb1(i)); }
LaurentPoly C(int i) { return LaurentPoly::var(vc(i)); }

// q -> -1/q, the column involution both determinant shapes are built from.
LaurentPoly flipColumnVar(const LaurentPoly& p, VarId q) {
    return p.substitute({{q, -LaurentPoly::var(q, -1)}});
}

std::string truncated(const std::string& s) {
    constexpr std::size_t kMax = 160;
    if (s.size() <= kMax) return s;
    return s.substr(0, kMax) + "...";
}

std::string pointStr(const std::map<VarId, GaussianRational>& pt) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, val] : pt) {
        if (!first) os << ' ';
        first = false;
        os << varName(v) << '=' << val.str();
    }
    return os.str();
}

void requireSize(bool ok, const std::string& what) {
    if (!ok) throw SizeLimitExceeded(what);
}

std::string modeName(LemmaMode m) {
    return m == LemmaMode::Symbolic ? "symbolic" : "random";
}

// One random-evaluation campaign: draw() fills a point (returning false to
// reject it), sides() returns the two values to compare.  Per-trial engines
// are seeded from a stream derived from the master seed, so the trials are
// independent of each other and of evaluation order.
template <typename Draw, typename Sides>
LemmaReport randomCampaign(LemmaReport rep, const LemmaCheckConfig& cfg, Draw draw, Sides sides) {
    if (cfg.trials < 1) throw HtsasmError("random evaluation needs at least one trial");
    rep.seed = cfg.seed;
    std::mt19937_64 master(cfg.seed);
    std::vector<std::uint64_t> trialSeeds(static_cast<std::size_t>(cfg.trials));
    for (auto& s : trialSeeds) s = master();
    rep.ok = true;
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 gen(trialSeeds[static_cast<std::size_t>(t)]);
        std::map<VarId, GaussianRational> pt;
        int guard = 0;
        while (!draw(gen, pt)) {
            pt.clear();
            if (++guard > 1000) throw HtsasmError("random point rejection did not terminate");
        }
        auto [lhs, rhs] = sides(pt);
        if (lhs != rhs) {
            rep.ok = false;
            rep.failures.push_back("trial " + std::to_string(t) + ": determinant " + lhs.str() +
                                   " != product " + rhs.str() + " at " + pointStr(pt));
        }
    }
    return rep;
}

int draw2to97(std::mt19937_64& gen) {
    std::uniform_int_distribution<int> dist(2, 97);
    return dist(gen);
}

}  // namespace

LaurentPoly FactoredPoly::expand() const {
    LaurentPoly r = prefactor;
    for (const auto& f : factors) r *= f;
    return r;
}

GaussianRational FactoredPoly::eval(const std::map<VarId, GaussianRational>& point) const {
    GaussianRational r = prefactor.evalRational(point);
    for (const auto& f : factors) r *= f.evalRational(point);
    return r;
}

FactoredPoly seriesDenominator(int n, VarId q) {
    FactoredPoly d;
    d.prefactor = one();
    LaurentPoly qv = LaurentPoly::var(q);
    d.factors.push_back(one() - Z0() * qv);
    for (int i = 1; i <= n; ++i) {
        d.factors.push_back(one() - X(i) * qv);
        d.factors.push_back(one() - Y(i, -1) * qv);
    }
    return d;
}

FactoredPoly clearedF(int k, int n, VarId q) {
    FactoredPoly f;
    LaurentPoly qv = LaurentPoly::var(q);
    f.prefactor = uWeight(k, n) * qv;
    f.factors.push_back(one() + Z0(-1) * qv);
    for (int i = 1; i <= n; ++i) f.factors.push_back(one() + X(i, -1) * qv);
    for (int i = k + 1; i <= n; ++i) f.factors.push_back(one() + Y(i) * qv);
    for (int i = 1; i < k; ++i) f.factors.push_back(one() - X(i) * qv);
    return f;
}

FactoredPoly clearedG(int k, int n, VarId q) {
    FactoredPoly g;
    LaurentPoly qv = LaurentPoly::var(q);
    g.prefactor = qv;
    for (int i = 1; i < k; ++i) g.factors.push_back(one() + X(i, -1) * qv);
    g.factors.push_back(one() - Z0() * qv);
    for (int i = 1; i <= n; ++i) g.factors.push_back(one() - X(i) * qv);
    for (int i = k + 1; i <= n; ++i) g.factors.push_back(one() - Y(i, -1) * qv);
    return g;
}

LaurentPoly clearedH(int k, int n, VarId q) {
    LaurentPoly f = clearedF(k, n, q).expand();
    LaurentPoly g = clearedG(k, n, q).expand();
    return ((n - k) % 2 == 0) ? f + g : f - g;
}

PolyMatrix clearedHMatrix(int n) {
    PolyMatrix m(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
            m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] =
                clearedH(k, n, vq(l));
    return m;
}

FactoredPoly hProductSide(int n) {
    FactoredPoly p;
    p.prefactor = one();
    for (int i = 1; i <= n; ++i)
        p.prefactor *= X(i, -(n - i)) * LaurentPoly::var(vq(i));
    for (int i = 1; i <= n; ++i) p.factors.push_back(one() + Z0() * X(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            p.factors.push_back(one() + X(i) * X(j));
            p.factors.push_back(one() + X(i) * Y(j, -1));
        }
    LaurentPoly qi;
    for (int i = 1; i <= n; ++i) {
        qi = LaurentPoly::var(vq(i));
        p.factors.push_back(one() + qi * qi);
        for (int j = i + 1; j <= n; ++j) {
            LaurentPoly qj = LaurentPoly::var(vq(j));
            p.factors.push_back(qi - qj);
            p.factors.push_back(one() + qi * qj);
        }
    }
    return p;
}

FactoredPoly hHalfPoly(int k, int n, VarId q) {
    FactoredPoly f;
    LaurentPoly qv = LaurentPoly::var(q);
    f.prefactor = LaurentPoly::var(q, -n);
    f.factors.push_back(one() + Z0(-1) * qv);
    for (int i = 1; i <= n; ++i) f.factors.push_back(one() + X(i, -1) * qv);
    for (int i = 1; i < k; ++i) f.factors.push_back(one() - X(i) * qv);
    for (int i = k + 1; i <= n; ++i) f.factors.push_back(one() + Y(i) * qv);
    return f;
}

FactoredPoly mHalfPoly(int k, int n, VarId q) {
    FactoredPoly g;
    LaurentPoly qv = LaurentPoly::var(q);
    g.prefactor = LaurentPoly::var(q, -n);
    for (int i = 1; i <= n + 1; ++i) g.factors.push_back(one() + C(i) * qv);
    for (int i = 1; i < k; ++i) g.factors.push_back(one() - B(i) * qv);
    for (int i = k + 1; i <= n; ++i) g.factors.push_back(one() + A(i) * qv);
    return g;
}

LaurentPoly mEntry(int k, int n, VarId q) {
    LaurentPoly e = mHalfPoly(k, n, q).expand();
    return e - flipColumnVar(e, q);
}

PolyMatrix mMatrix(int n) {
    PolyMatrix m(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
            m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] =
                mEntry(k, n, vq(l));
    return m;
}

FactoredPoly mProductSide(int n) {
    FactoredPoly p;
    p.prefactor = one();
    for (int i = 1; i <= n; ++i) p.prefactor *= LaurentPoly::var(vq(i), -n);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) p.factors.push_back(one() + C(i) * C(j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) p.factors.push_back(B(i) + A(j));
    for (int i = 1; i <= n; ++i) {
        LaurentPoly qi = LaurentPoly::var(vq(i));
        p.factors.push_back(one() + qi * qi);
        for (int j = i + 1; j <= n; ++j) {
            LaurentPoly qj = LaurentPoly::var(vq(j));
            p.factors.push_back(qi - qj);
            p.factors.push_back(one() + qi * qj);
        }
    }
    return p;
}

PolyMatrix edetMatrix(int n) {
    std::vector<LaurentPoly> cv;
    cv.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n + 1; ++i) cv.push_back(C(i));
    PolyMatrix m(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            LaurentPoly e = elementary(k - l, cv);
            LaurentPoly e2 = elementary(k + l, cv);
            m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] =
                (l % 2 == 1) ? e + e2 : e - e2;
        }
    return m;
}

LaurentPoly productSideCoefficient(int n, const StrictPartition& lambda) {
    requireSize(n >= 1 && n <= 3, "productSideCoefficient: n must be 1..3");
    if (static_cast<int>(lambda.size()) != n || !isStrictPartition(lambda))
        throw DimensionMismatch("productSideCoefficient: lambda must be strict with n parts");
    LaurentPoly p = hProductSide(n).expand();
    for (int l = 1; l <= n; ++l) {
        RationalSeriesSpec spec{vq(l), {p}, seriesDenominator(n, vq(l)).factors, 0};
        p = seriesCoeff(spec, lambda[static_cast<std::size_t>(l - 1)]);
    }
    return p;
}

LemmaReport checkDeth(const LemmaCheckConfig& cfg) {
    LemmaReport rep{"deth", cfg.n, modeName(cfg.mode), false, std::nullopt, {}};
    requireSize(cfg.n >= 1, "checkDeth: n must be positive");
    if (cfg.mode == LemmaMode::Symbolic) {
        requireSize(cfg.n <= 3, "checkDeth: symbolic mode is bounded to n <= 3");
        LaurentPoly det = detSymbolic(clearedHMatrix(cfg.n));
        LaurentPoly rhs = hProductSide(cfg.n).expand();
        rep.ok = det == rhs;
        if (!rep.ok)
            rep.failures.push_back("determinant differs from the product form by " +
                                   truncated((det - rhs).str()));
        return rep;
    }
    requireSize(cfg.n <= 8, "checkDeth: random mode is bounded to n <= 8");
    const int n = cfg.n;
    std::vector<FactoredPoly> nf;
    std::vector<FactoredPoly> ng;
    for (int k = 1; k <= n; ++k) {
        nf.push_back(clearedF(k, n, vq(0)));
        ng.push_back(clearedG(k, n, vq(0)));
    }
    FactoredPoly rhs = hProductSide(n);
    auto draw = [n](std::mt19937_64& gen, std::map<VarId, GaussianRational>& pt) {
        std::vector<int> qv(static_cast<std::size_t>(n));
        std::vector<int> yv(static_cast<std::size_t>(n));
        pt[vz0()] = GaussianRational(draw2to97(gen));
        for (int i = 1; i <= n; ++i) {
            pt[vx(i)] = GaussianRational(draw2to97(gen));
            yv[static_cast<std::size_t>(i - 1)] = draw2to97(gen);
            pt[vy(i)] = GaussianRational(yv[static_cast<std::size_t>(i - 1)]);
        }
        for (int i = 1; i <= n; ++i) {
            qv[static_cast<std::size_t>(i - 1)] = draw2to97(gen);
            pt[vq(i)] = GaussianRational(qv[static_cast<std::size_t>(i - 1)]);
        }
        // Integer draws >= 2 can only annihilate a denominator factor via
        // q_l = y_i; equal column values are rejected as trivial.
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i < j && qv[static_cast<std::size_t>(i)] == qv[static_cast<std::size_t>(j)])
                    return false;
                if (qv[static_cast<std::size_t>(i)] == yv[static_cast<std::size_t>(j)])
                    return false;
            }
        return true;
    };
    auto sides = [&](const std::map<VarId, GaussianRational>& pt) {
        std::vector<std::vector<GaussianRational>> m(
            static_cast<std::size_t>(n), std::vector<GaussianRational>(static_cast<std::size_t>(n)));
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
                auto colPt = pt;
                colPt[vq(0)] = pt.at(vq(l));
                GaussianRational f = nf[static_cast<std::size_t>(k - 1)].eval(colPt);
                GaussianRational g = ng[static_cast<std::size_t>(k - 1)].eval(colPt);
                m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] =
                    ((n - k) % 2 == 0) ? f + g : f - g;
            }
        return std::pair{detRational(std::move(m)), rhs.eval(pt)};
    };
    return randomCampaign(std::move(rep), cfg, draw, sides);
}

LemmaReport checkDetm(const LemmaCheckConfig& cfg) {
    LemmaReport rep{"detm", cfg.n, modeName(cfg.mode), false, std::nullopt, {}};
    requireSize(cfg.n >= 1, "checkDetm: n must be positive");
    if (cfg.mode == LemmaMode::Symbolic) {
        requireSize(cfg.n <= 3, "checkDetm: symbolic mode is bounded to n <= 3");
        LaurentPoly det = detSymbolic(mMatrix(cfg.n));
        LaurentPoly rhs = mProductSide(cfg.n).expand();
        rep.ok = det == rhs;
        if (!rep.ok)
            rep.failures.push_back("determinant differs from the product form by " +
                                   truncated((det - rhs).str()));
        return rep;
    }
    requireSize(cfg.n <= 8, "checkDetm: random mode is bounded to n <= 8");
    const int n = cfg.n;
    std::vector<FactoredPoly> half;
    for (int k = 1; k <= n; ++k) half.push_back(mHalfPoly(k, n, vq(0)));
    FactoredPoly rhs = mProductSide(n);
    auto draw = [n](std::mt19937_64& gen, std::map<VarId, GaussianRational>& pt) {
        std::vector<int> qv(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            pt[va1(i)] = GaussianRational(draw2to97(gen));
            pt[vb1(i)] = GaussianRational(draw2to97(gen));
        }
        for (int i = 1; i <= n + 1; ++i) pt[vc(i)] = GaussianRational(draw2to97(gen));
        for (int i = 1; i <= n; ++i) {
            qv[static_cast<std::size_t>(i - 1)] = draw2to97(gen);
            pt[vq(i)] = GaussianRational(qv[static_cast<std::size_t>(i - 1)]);
        }
        // No denominator factor can vanish on integer draws >= 2; equal
        // column values are rejected as trivial.
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (qv[static_cast<std::size_t>(i)] == qv[static_cast<std::size_t>(j)])
                    return false;
        return true;
    };
    auto sides = [&](const std::map<VarId, GaussianRational>& pt) {
        std::vector<std::vector<GaussianRational>> m(
            static_cast<std::size_t>(n), std::vector<GaussianRational>(static_cast<std::size_t>(n)));
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
                auto colPt = pt;
                colPt[vq(0)] = pt.at(vq(l));
                GaussianRational a = half[static_cast<std::size_t>(k - 1)].eval(colPt);
                colPt[vq(0)] = -pt.at(vq(l)).inverse();
                GaussianRational b = half[static_cast<std::size_t>(k - 1)].eval(colPt);
                m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] = a - b;
            }
        return std::pair{detRational(std::move(m)), rhs.eval(pt)};
    };
    return randomCampaign(std::move(rep), cfg, draw, sides);
}

LemmaReport checkHr(int r, int nVars) {
    if (r < 0) throw HtsasmError("checkHr: the degree must be nonnegative");
    requireSize(nVars >= 0 && nVars <= 4, "checkHr: at most 4 shared variables");
    LemmaReport rep{"hr", r, "symbolic", false, std::nullopt, {}};
    LaurentPoly p = LaurentPoly::var(vq(1));
    LaurentPoly pb = LaurentPoly::var(vq(1), -1);
    LaurentPoly q = LaurentPoly::var(vq(2));
    LaurentPoly qb = LaurentPoly::var(vq(2), -1);
    std::vector<LaurentPoly> left{p, -pb};
    std::vector<LaurentPoly> right{q, -qb};
    std::vector<LaurentPoly> both{p, -pb, q, -qb};
    for (int i = 1; i <= nVars; ++i) {
        left.push_back(Y(i));
        right.push_back(Y(i));
        both.push_back(Y(i));
    }
    LaurentPoly lhs = complete(r, left) - complete(r, right);
    LaurentPoly rhs = (p - q) * (one() + pb * qb) * complete(r - 1, both);
    rep.ok = lhs == rhs;
    if (!rep.ok)
        rep.failures.push_back("difference of the two sides is " + truncated((lhs - rhs).str()));
    return rep;
}

LemmaReport checkEdet(int n) {
    requireSize(n >= 1 && n <= 4, "checkEdet: n must be 1..4");
    LemmaReport rep{"edet", n, "symbolic", false, std::nullopt, {}};
    LaurentPoly det = detSymbolic(edetMatrix(n));
    LaurentPoly rhs = one();
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) rhs *= one() + C(i) * C(j);
    rep.ok = det == rhs;
    if (!rep.ok)
        rep.failures.push_back("determinant differs from the pair product by " +
                               truncated((det - rhs).str()));
    return rep;
}

LemmaReport runLemmaCheck(const LemmaCheckConfig& cfg) {
    switch (cfg.whichLemma) {
        case LemmaId::Deth:
            return checkDeth(cfg);
        case LemmaId::Detm:
            return checkDetm(cfg);
        case LemmaId::Hr:
            if (cfg.mode != LemmaMode::Symbolic)
                throw HtsasmError("random mode applies to the determinant checks only");
            return checkHr(cfg.n, cfg.hrVars);
        case LemmaId::Edet:
            if (cfg.mode != LemmaMode::Symbolic)
                throw HtsasmError("random mode applies to the determinant checks only");
            return checkEdet(cfg.n);
    }
    throw HtsasmError("runLemmaCheck: unknown lemma id");
}

}  // namespace htsasm
