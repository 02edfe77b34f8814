#include "htsasm/identities.hpp"

#include <algorithm>

#include "htsasm/errors.hpp"

namespace htsasm {

namespace {

LaurentPoly vX(int i, int e = 1) { return LaurentPoly::var(vx(i), e); }
LaurentPoly vY(int i, int e = 1) { return LaurentPoly::var(vy(i), e); }
LaurentPoly vZ0(int e = 1) { return LaurentPoly::var(vz0(), e); }
LaurentPoly vS(int i, int e = 1) { return LaurentPoly::var(vs(i), e); }
LaurentPoly vT(int i, int e = 1) { return LaurentPoly::var(vt(i), e); }
LaurentPoly vA1(int i, int e = 1) { return LaurentPoly::var(va1(i), e); }
LaurentPoly vA2(int i, int e = 1) { return LaurentPoly::var(va2(i), e); }
LaurentPoly vB1(int i, int e = 1) { return LaurentPoly::var(vb1(i), e); }
LaurentPoly vB2(int i, int e = 1) { return LaurentPoly::var(vb2(i), e); }
LaurentPoly vA0(int e = 1) { return LaurentPoly::var(va0(), e); }
LaurentPoly vB0(int e = 1) { return LaurentPoly::var(vb0(), e); }
const LaurentPoly kOne = LaurentPoly::one();
const LaurentPoly kI = LaurentPoly::imagUnit();

// Row band: 0 above the centre, 1 central (odd kinds), 2 below.
int rowBand(Kind kind, int n, int i) {
    if (kind == Kind::EvenB) return i <= n ? 0 : 2;
    if (i < n + 1) return 0;
    return i == n + 1 ? 1 : 2;
}

// Published per-cell weight of scheme `s` at row i (1-based), column j.
LaurentPoly cellWeight(WeightScheme s, int n, int i, int j, Compass c) {
    int band = rowBand(schemeKind(s), n, i);
    // Mirrored row index for the lower band.
    int ib = schemeKind(s) == Kind::EvenB ? 2 * n + 1 - i : 2 * n + 2 - i;
    switch (s) {
        case WeightScheme::Generic:
        case WeightScheme::Result1: {
            // Result1 is the Generic table with x_i -> s_i x_i and
            // y_i -> y_i / t_i; transcribed literally from its own table.
            bool r1 = s == WeightScheme::Result1;
            LaurentPoly xi = r1 ? vS(i) * vX(i) : vX(i);
            LaurentPoly yi = r1 ? vT(i, -1) * vY(i) : vY(i);
            LaurentPoly xbar = r1 ? vS(ib, -1) * vX(ib, -1) : vX(ib, -1);
            LaurentPoly ybar = r1 ? vT(ib) * vY(ib, -1) : vY(ib, -1);
            switch (c) {
                case Compass::WE:
                case Compass::NE:
                case Compass::SE:
                    return kOne;
                case Compass::NS:
                    if (band == 0) return xi + yi;
                    if (band == 1) return vZ0() + vZ0(-1);
                    return ybar + xbar;
                case Compass::NW:
                    if (band == 0) return yi;
                    if (band == 1) return vZ0(-1);
                    return xbar;
                case Compass::SW:
                    if (band == 0) return xi;
                    if (band == 1) return vZ0();
                    return ybar;
            }
            break;
        }
        case WeightScheme::Okada:
        case WeightScheme::Tabony: {
            // Okada is the Tabony table with every t_i set to the bare t.
            LaurentPoly tU = s == WeightScheme::Okada ? vT(0) : vT(i);
            LaurentPoly tL = s == WeightScheme::Okada ? vT(0) : vT(ib);
            switch (c) {
                case Compass::WE:
                    return band == 0 ? kI * vX(i) : vX(ib);
                case Compass::NS:
                    return band == 0 ? -kI * (kOne - tU * tU) : kOne - tL * tL;
                case Compass::NE:
                    return band == 0 ? kI * tU : kI * tL * vX(ib);
                case Compass::SE:
                    return band == 0 ? kOne : vX(ib);
                case Compass::NW:
                    return band == 0 ? vX(i) : kOne;
                case Compass::SW:
                    return band == 0 ? kI * tU * vX(i) : kI * tL;
            }
            break;
        }
        case WeightScheme::Simpson: {
            LaurentPoly t = vT(0);
            switch (c) {
                case Compass::WE:
                    if (band == 0) return j == 1 ? vX(i) : vT(0, -1) * vX(i);
                    return band == 1 ? kOne : vX(ib);
                case Compass::NS:
                    if (band == 0) return t * (kOne + t * t);
                    return kOne + t * t;
                case Compass::NE:
                    return band == 2 ? t * vX(ib) : t;
                case Compass::SE:
                    return band == 2 ? vX(ib) : kOne;
                case Compass::NW:
                    if (band == 0) return j == 1 ? t * vX(i) : vX(i);
                    return kOne;
                case Compass::SW:
                    if (band == 0) return j == 1 ? t * t * vX(i) : t * vX(i);
                    return t;
            }
            break;
        }
        case WeightScheme::BnCorollary: {
            switch (c) {
                case Compass::WE:
                case Compass::NE:
                case Compass::SE:
                    return kOne;
                case Compass::NS:
                    return band == 0 ? vX(i) - vY(i) : vY(ib, -1) - vX(ib, -1);
                case Compass::NW:
                    return band == 0 ? -vY(i) : -vX(ib, -1);
                case Compass::SW:
                    return band == 0 ? vX(i) : vY(ib, -1);
            }
            break;
        }
        case WeightScheme::BrubakerSchultz: {
            // Ratio table: every entry is a Laurent monomial in the a/b
            // parameters (or a sum of two for NS).
            LaurentPoly up = vB1(i) * vA2(i, -1);        // plays x_i
            LaurentPoly upInv = vA1(i) * vB2(i, -1);     // plays y_i
            LaurentPoly ctr = vB0() * vA0(-1);           // plays z0
            LaurentPoly ctrInv = vA0() * vB0(-1);
            LaurentPoly lo = vB2(ib) * vA1(ib, -1);      // plays ybar
            LaurentPoly loInv = vA2(ib) * vB1(ib, -1);   // plays xbar
            switch (c) {
                case Compass::WE:
                case Compass::NE:
                case Compass::SE:
                    return kOne;
                case Compass::NS:
                    if (band == 0) return up + upInv;
                    if (band == 1) return ctr + ctrInv;
                    return lo + loInv;
                case Compass::NW:
                    if (band == 0) return upInv;
                    if (band == 1) return ctrInv;
                    return loInv;
                case Compass::SW:
                    if (band == 0) return up;
                    if (band == 1) return ctr;
                    return lo;
            }
            break;
        }
    }
    throw HtsasmError("unhandled cell weight");
}

// Statistics prefactor of the scheme (everything outside the cell product).
LaurentPoly prefactor(WeightScheme s, const HalfTurnAsm& a, const AsmStats& st) {
    int n = a.n;
    int m = a.cols();
    // The published tables index L so that L_i counts the first-column
    // WE/NW/SW labels strictly above row i; that is st.L[i-1].
    auto L = [&](int i) { return st.L[i - 1]; };
    LaurentPoly p = kOne;
    switch (s) {
        case WeightScheme::Generic:
            for (int i = 1; i <= n; ++i)
                p *= vX(i).pow(n - i) * (vX(i) * vY(i, -1)).pow(L(i)) *
                     (vZ0() * vX(i)).pow(L(i + 1) - L(i));
            return p;
        case WeightScheme::Result1:
            for (int i = 1; i <= n; ++i)
                p *= (vS(i) * vX(i)).pow(n - i) *
                     (vS(i) * vX(i) * vT(i) * vY(i, -1)).pow(L(i)) *
                     (vZ0() * vS(i) * vX(i)).pow(L(i + 1) - L(i));
            return p;
        case WeightScheme::Okada:
        case WeightScheme::Simpson:
        case WeightScheme::Tabony:
            // Printed as prod x_i^{-i} for the staircase shape (m = n); the
            // m-dependent form below reduces to that and keeps the scheme a
            // parameter specialization of the master table at every shape.
            for (int i = 1; i <= n; ++i) p *= vX(i).pow(n - m - i);
            return p;
        case WeightScheme::BnCorollary: {
            GaussianRational sign(((n * (n - 1) / 2) % 2 == 1) ? -1 : 1);
            p = LaurentPoly::constant(sign);
            for (int i = 1; i <= n; ++i) {
                p *= vX(i).pow(n - i) * (vX(i) * vY(i, -1)).pow(L(i)) * vX(i).pow(L(i + 1) - L(i));
                if (L(i + 1) % 2 == 1) p = -p;
            }
            return p;
        }
        case WeightScheme::BrubakerSchultz: {
            LaurentPoly w0 = (vA0() * [&] {
                                 LaurentPoly q = kOne;
                                 for (int i = 1; i <= n; ++i) q *= vA1(i) * vA2(i);
                                 return q;
                             }())
                                 .pow(m - n);
            LaurentPoly w1 = vA0(n);
            for (int i = 1; i <= n; ++i) w1 *= vA1(i).pow(i - 1) * vA2(i).pow(2 * n - i);
            p = w0 * w1;
            for (int i = 1; i <= n; ++i)
                p *= (vB1(i) * vA2(i, -1)).pow(n - i) *
                     (vB0() * vB1(i) * (vA0() * vA2(i)).pow(-1)).pow(L(i + 1) - L(i)) *
                     (vB1(i) * vB2(i) * (vA2(i) * vA1(i)).pow(-1)).pow(L(i));
            return p;
        }
    }
    throw HtsasmError("unhandled prefactor");
}

}  // namespace

std::string schemeName(WeightScheme s) {
    switch (s) {
        case WeightScheme::Generic: return "generic";
        case WeightScheme::Result1: return "result1";
        case WeightScheme::Okada: return "okada";
        case WeightScheme::Simpson: return "simpson";
        case WeightScheme::Tabony: return "tabony";
        case WeightScheme::BnCorollary: return "bn";
        case WeightScheme::BrubakerSchultz: return "bs";
    }
    throw HtsasmError("unhandled scheme");
}

WeightScheme parseScheme(const std::string& name) {
    for (WeightScheme s :
         {WeightScheme::Generic, WeightScheme::Result1, WeightScheme::Okada,
          WeightScheme::Simpson, WeightScheme::Tabony, WeightScheme::BnCorollary,
          WeightScheme::BrubakerSchultz})
        if (schemeName(s) == name) return s;
    throw ParseError("unknown scheme name: " + name);
}

Kind schemeKind(WeightScheme s) {
    switch (s) {
        case WeightScheme::Okada:
        case WeightScheme::Tabony:
        case WeightScheme::BnCorollary:
            return Kind::EvenB;
        default:
            return Kind::OddBPrime;
    }
}

LaurentPoly wgtAsm(const HalfTurnAsm& a, WeightScheme scheme, const TablePerturbation* perturb) {
    if (a.kind != schemeKind(scheme))
        throw SchemeKindMismatch("scheme " + schemeName(scheme) + " is defined for kind " +
                                 kindName(schemeKind(scheme)) + " matrices");
    CompassMatrix c = toCompass(a);
    AsmStats st = stats(a);
    LaurentPoly w = prefactor(scheme, a, st);
    const LaurentPoly bump = kOne + LaurentPoly::var(veps());
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= a.cols(); ++j) {
            Compass lab = c.entries[i - 1][j - 1];
            LaurentPoly cw = cellWeight(scheme, a.n, i, j, lab);
            if (perturb && perturb->label == lab && perturb->band == rowBand(a.kind, a.n, i))
                cw *= bump;
            w *= cw;
        }
    }
    return w;
}

int perturbationHits(const HalfTurnAsm& a, WeightScheme scheme, const TablePerturbation& p) {
    if (a.kind != schemeKind(scheme)) return 0;
    CompassMatrix c = toCompass(a);
    int hits = 0;
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j)
            if (c.entries[i - 1][j - 1] == p.label && rowBand(a.kind, a.n, i) == p.band) ++hits;
    return hits;
}

LaurentPoly sumWgt(Kind kind, int n, const StrictPartition& lambda, WeightScheme scheme,
                   long maxCells, const TablePerturbation* perturb) {
    LaurentPoly total;
    for (const HalfTurnAsm& a : enumerateAsms(kind, n, lambda, maxCells))
        total += wgtAsm(a, scheme, perturb);
    return total;
}

StrictPartition staircase(int n) {
    StrictPartition d(n);
    for (int i = 0; i < n; ++i) d[i] = n - i;
    return d;
}

StrictPartition shapeFromMu(const Partition& mu, int n) {
    if (!isPartition(mu)) throw DimensionMismatch("mu is not a partition");
    if (static_cast<int>(mu.size()) > n)
        throw DimensionMismatch("mu has more than n parts");
    StrictPartition lam = staircase(n);
    for (size_t i = 0; i < mu.size(); ++i) lam[i] += mu[i];
    return lam;
}

LaurentPoly deltaProduct(Kind kind, int n, WeightScheme s) {
    if (kind != schemeKind(s))
        throw SchemeKindMismatch("scheme " + schemeName(s) + " is defined for kind " +
                                 kindName(schemeKind(s)) + " matrices");
    LaurentPoly p = kOne;
    auto overPairs = [&](auto&& f) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) p *= f(i, j);
    };
    switch (s) {
        case WeightScheme::Generic:
            for (int i = 1; i <= n; ++i) p *= kOne + vZ0() * vX(i);
            overPairs([](int i, int j) {
                return (kOne + vX(i) * vX(j)) * (kOne + vX(i) * vY(j, -1));
            });
            return p;
        case WeightScheme::Result1:
            for (int i = 1; i <= n; ++i) p *= kOne + vZ0() * vS(i) * vX(i);
            overPairs([](int i, int j) {
                return (kOne + vS(i) * vS(j) * vX(i) * vX(j)) *
                       (kOne + vS(i) * vT(j) * vX(i) * vY(j, -1));
            });
            return p;
        case WeightScheme::Okada:
            for (int i = 1; i <= n; ++i) p *= kOne - vT(0) * vX(i);
            overPairs([](int i, int j) {
                LaurentPoly t2 = vT(0) * vT(0);
                return (kOne - t2 * vX(i) * vX(j)) * (kOne - t2 * vX(i) * vX(j, -1));
            });
            return p;
        case WeightScheme::Simpson:
            for (int i = 1; i <= n; ++i) p *= kOne + vT(0) * vT(0) * vX(i);
            overPairs([](int i, int j) {
                LaurentPoly t2 = vT(0) * vT(0);
                return (kOne + t2 * vX(i) * vX(j)) * (kOne + t2 * vX(i) * vX(j, -1));
            });
            return p;
        case WeightScheme::Tabony:
            for (int i = 1; i <= n; ++i) p *= kOne - vT(i) * vX(i);
            overPairs([](int i, int j) {
                return (kOne - vT(i) * vT(j) * vX(i) * vX(j)) *
                       (kOne - vT(i) * vT(j) * vX(i) * vX(j, -1));
            });
            return p;
        case WeightScheme::BnCorollary:
            for (int i = 1; i <= n; ++i) p *= kOne - vX(i);
            overPairs([](int i, int j) {
                return (kOne - vX(i) * vX(j)) * (kOne - vX(i) * vY(j, -1));
            });
            return p;
        case WeightScheme::BrubakerSchultz:
            for (int i = 1; i <= n; ++i) p *= vA0() * vA2(i) + vB0() * vB1(i);
            overPairs([](int i, int j) {
                return (vA2(i) * vA1(j) + vB1(i) * vB2(j)) *
                       (vA2(i) * vA2(j) + vB1(i) * vB1(j));
            });
            return p;
    }
    throw HtsasmError("unhandled scheme");
}

std::vector<LaurentPoly> schemeZ(WeightScheme s, int n) {
    std::vector<LaurentPoly> z;
    auto push3 = [&](auto&& upper, const LaurentPoly& middle, auto&& lower) {
        for (int i = 1; i <= n; ++i) z.push_back(upper(i));
        z.push_back(middle);
        for (int i = n; i >= 1; --i) z.push_back(lower(i));
    };
    switch (s) {
        case WeightScheme::Generic:
            push3([](int i) { return vX(i); }, vZ0(), [](int i) { return vY(i, -1); });
            return z;
        case WeightScheme::Result1:
            push3([](int i) { return vS(i) * vX(i); }, vZ0(),
                  [](int i) { return vT(i) * vY(i, -1); });
            return z;
        case WeightScheme::Simpson:
            push3([](int i) { return vT(0) * vX(i); }, vT(0),
                  [](int i) { return vT(0) * vX(i, -1); });
            return z;
        case WeightScheme::Okada:
            push3([](int i) { return vT(0) * vX(i); }, kOne,
                  [](int i) { return vT(0) * vX(i, -1); });
            return z;
        case WeightScheme::Tabony:
            push3([](int i) { return vT(i) * vX(i); }, kOne,
                  [](int i) { return vT(i) * vX(i, -1); });
            return z;
        case WeightScheme::BnCorollary:
            push3([](int i) { return vX(i); }, kOne, [](int i) { return vY(i, -1); });
            return z;
        case WeightScheme::BrubakerSchultz:
            push3([](int i) { return vB1(i) * vA2(i, -1); }, vB0() * vA0(-1),
                  [](int i) { return vB2(i) * vA1(i, -1); });
            return z;
    }
    throw HtsasmError("unhandled scheme");
}

LaurentPoly schemePhi(WeightScheme s, int n, const Partition& mu, int m) {
    std::vector<LaurentPoly> z = schemeZ(s, n);
    switch (s) {
        case WeightScheme::Generic:
        case WeightScheme::Result1:
        case WeightScheme::Simpson:
            return phiBnPrime(mu, z);
        case WeightScheme::BnCorollary:
            return soUniversal(mu, z);
        case WeightScheme::Okada:
        case WeightScheme::Tabony:
            return kI.pow(weightOf(mu)) * soUniversal(mu, z);
        case WeightScheme::BrubakerSchultz: {
            LaurentPoly w0 = vA0();
            for (int i = 1; i <= n; ++i) w0 *= vA1(i) * vA2(i);
            return w0.pow(m - n) * phiBnPrime(mu, z);
        }
    }
    throw HtsasmError("unhandled scheme");
}

std::map<VarId, LaurentPoly> specializeScheme(WeightScheme target, int n) {
    std::map<VarId, LaurentPoly> sigma;
    switch (target) {
        case WeightScheme::Generic:
            return sigma;
        case WeightScheme::Result1:
            for (int i = 1; i <= n; ++i) {
                sigma[vx(i)] = vS(i) * vX(i);
                sigma[vy(i)] = vT(i, -1) * vY(i);
            }
            return sigma;
        case WeightScheme::Simpson:
            sigma[vz0()] = vT(0);
            for (int i = 1; i <= n; ++i) {
                sigma[vx(i)] = vT(0) * vX(i);
                sigma[vy(i)] = vT(0, -1) * vX(i);
            }
            return sigma;
        case WeightScheme::Okada:
            sigma[vz0()] = kI;
            for (int i = 1; i <= n; ++i) {
                sigma[vx(i)] = kI * vT(0) * vX(i);
                sigma[vy(i)] = -kI * vT(0, -1) * vX(i);
            }
            return sigma;
        case WeightScheme::Tabony:
            sigma[vz0()] = kI;
            for (int i = 1; i <= n; ++i) {
                sigma[vx(i)] = kI * vT(i) * vX(i);
                sigma[vy(i)] = -kI * vT(i, -1) * vX(i);
            }
            return sigma;
        case WeightScheme::BnCorollary:
            sigma[vz0()] = kI;
            for (int i = 1; i <= n; ++i) {
                sigma[vx(i)] = kI * vX(i);
                sigma[vy(i)] = -kI * vY(i);
            }
            return sigma;
        case WeightScheme::BrubakerSchultz:
            sigma[vz0()] = vB0() * vA0(-1);
            for (int i = 1; i <= n; ++i) {
                sigma[vx(i)] = vB1(i) * vA2(i, -1);
                sigma[vy(i)] = vA1(i) * vB2(i, -1);
            }
            return sigma;
    }
    throw HtsasmError("unhandled scheme");
}

LaurentPoly weylSpecialization(int n) {
    std::map<VarId, LaurentPoly> sigma;
    sigma[vz0()] = kI;
    for (int i = 1; i <= n; ++i) {
        sigma[vx(i)] = kI * vX(i);
        sigma[vy(i)] = -kI * vX(i);
    }
    return deltaProduct(Kind::OddBPrime, n, WeightScheme::Generic).substitute(sigma);
}

VerificationReport verifyFactorization(Kind kind, int n, const Partition& mu,
                                       WeightScheme scheme, long maxCells,
                                       const TablePerturbation* perturb) {
    VerificationReport r;
    r.scheme = scheme;
    r.n = n;
    r.mu = mu;
    StrictPartition lam = shapeFromMu(mu, n);
    r.lhs = sumWgt(kind, n, lam, scheme, maxCells, perturb);
    r.rhsDelta = deltaProduct(kind, n, scheme);
    r.rhsPhi = schemePhi(scheme, n, mu, lam.empty() ? 0 : lam.front());
    r.counterexampleDiff = r.lhs - r.rhsDelta * r.rhsPhi;
    r.equal = r.counterexampleDiff.isZero();
    return r;
}

VerificationReport bsVerify(int n, const Partition& mu, long maxCells) {
    return verifyFactorization(Kind::OddBPrime, n, mu, WeightScheme::BrubakerSchultz, maxCells);
}

}  // namespace htsasm
