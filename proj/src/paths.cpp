#include "htsasm/paths.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace htsasm {

int heightLevel(const TabEntry& e, int n) {
    entryRank(e, Kind::OddBPrime, n);
    if (e.barred) return 2 * n + 2 - e.letter;
    return e.letter == 0 ? n + 1 : e.letter;
}

int bottomLevel(int n) { return 2 * n + 2; }

namespace {

void checkShape(const ShiftedTableau& t) {
    if (t.n < 1) throw DimensionMismatch("n must be >= 1");
    if (static_cast<int>(t.lambda.size()) != t.n || !isStrictPartition(t.lambda))
        throw DimensionMismatch("lambda must be a strict partition with n parts");
    if (t.rows.size() != t.lambda.size())
        throw DimensionMismatch("tableau must have one row per part of lambda");
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        if (static_cast<int>(t.rows[r].size()) != t.lambda[r])
            throw DimensionMismatch("row " + std::to_string(r + 1) + " must have " +
                                    std::to_string(t.lambda[r]) + " boxes");
}

}  // namespace

LatticePathConfig toPaths(const ShiftedTableau& t) {
    if (t.kind != Kind::OddBPrime)
        throw SchemeKindMismatch("lattice paths are defined for the odd alphabet");
    checkShape(t);
    LatticePathConfig c;
    c.n = t.n;
    c.lambda = t.lambda;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        const TabEntry& first = row.front();
        if (first.primed || first.letter == 0)
            throw InvalidTableau("row " + std::to_string(r + 1) +
                                 " must open on an unprimed nonzero letter");
        LatticePath path;
        int level = heightLevel(first, t.n);
        // The row starting with k or kbar is the path with start spur
        // (-n+k, 0); the spur is indexed by the letter, not the row.
        path.edges.push_back({EdgeKind::Curve, -t.n + first.letter, 0, 1, level});
        for (std::size_t idx = 1; idx < row.size(); ++idx) {
            const TabEntry& e = row[idx];
            if (entryRank(row[idx - 1], t.kind, t.n) > entryRank(e, t.kind, t.n) ||
                (row[idx - 1] == e && e.primed))
                throw InvalidTableau("row " + std::to_string(r + 1) +
                                     " is not a weakly increasing row without repeated primes");
            int col = static_cast<int>(idx);  // current column before the step
            int target = heightLevel(e, t.n) - (e.primed ? 1 : 0);
            for (int lev = level + 1; lev <= target; ++lev)
                path.edges.push_back({EdgeKind::Vertical, col, lev - 1, col, lev});
            if (e.primed)
                path.edges.push_back({EdgeKind::Diagonal, col, target, col + 1, target + 1});
            else
                path.edges.push_back({EdgeKind::Horizontal, col, target, col + 1, target});
            level = target + (e.primed ? 1 : 0);
        }
        int endCol = t.lambda[r];
        for (int lev = level + 1; lev <= bottomLevel(t.n); ++lev)
            path.edges.push_back({EdgeKind::Vertical, endCol, lev - 1, endCol, lev});
        c.paths.push_back(std::move(path));
    }
    return c;
}

bool isNonIntersecting(const LatticePathConfig& c) {
    std::map<std::pair<int, int>, std::size_t> seen;
    for (std::size_t p = 0; p < c.paths.size(); ++p) {
        std::set<std::pair<int, int>> points;
        for (const PathEdge& e : c.paths[p].edges) {
            points.insert({e.fromCol, e.fromLevel});
            points.insert({e.toCol, e.toLevel});
        }
        for (const auto& pt : points) {
            auto [it, fresh] = seen.emplace(pt, p);
            if (!fresh && it->second != p) return false;
        }
    }
    return true;
}

LaurentPoly uWeight(int k, int n) {
    LaurentPoly u = LaurentPoly::var(vz0()) * LaurentPoly::var(vx(k));
    for (int i = k + 1; i <= n; ++i)
        u *= LaurentPoly::var(vx(i)) * LaurentPoly::var(vy(i), -1);
    return u;
}

LaurentPoly pathWeight(const LatticePathConfig& c) {
    int n = c.n;
    LaurentPoly w = LaurentPoly::one();
    for (const LatticePath& path : c.paths)
        for (const PathEdge& e : path.edges) {
            int lev = e.toLevel;
            switch (e.kind) {
                case EdgeKind::Vertical:
                    break;
                case EdgeKind::Curve:
                    if (lev <= n)
                        w *= uWeight(lev, n);
                    // barred level: weight 1
                    break;
                case EdgeKind::Horizontal:
                    if (lev <= n)
                        w *= LaurentPoly::var(vx(lev));
                    else if (lev == n + 1)
                        w *= LaurentPoly::var(vz0());
                    else
                        w *= LaurentPoly::var(vy(2 * n + 2 - lev), -1);
                    break;
                case EdgeKind::Diagonal:
                    if (lev <= n)
                        w *= LaurentPoly::var(vy(lev));
                    else if (lev == n + 1)
                        w *= LaurentPoly::var(vz0(), -1);
                    else
                        w *= LaurentPoly::var(vx(2 * n + 2 - lev), -1);
                    break;
            }
        }
    return w;
}

namespace {

LaurentPoly onePlus(VarId v, int exp, VarId q) {
    return LaurentPoly::one() + LaurentPoly::var(v, exp) * LaurentPoly::var(q);
}

LaurentPoly oneMinus(VarId v, int exp, VarId q) {
    return LaurentPoly::one() - LaurentPoly::var(v, exp) * LaurentPoly::var(q);
}

}  // namespace

RationalSeriesSpec genF(int k, int n, VarId q) {
    RationalSeriesSpec s;
    s.seriesVar = q;
    s.leadingPower = 1;
    s.numeratorFactors.push_back(uWeight(k, n));
    s.numeratorFactors.push_back(onePlus(vz0(), -1, q));
    for (int i = k + 1; i <= n; ++i) s.numeratorFactors.push_back(onePlus(vy(i), 1, q));
    for (int i = 1; i <= n; ++i) s.numeratorFactors.push_back(onePlus(vx(i), -1, q));
    for (int i = k; i <= n; ++i) s.denominatorFactors.push_back(oneMinus(vx(i), 1, q));
    s.denominatorFactors.push_back(oneMinus(vz0(), 1, q));
    for (int i = 1; i <= n; ++i) s.denominatorFactors.push_back(oneMinus(vy(i), -1, q));
    return s;
}

RationalSeriesSpec genG(int k, int n, VarId q) {
    RationalSeriesSpec s;
    s.seriesVar = q;
    s.leadingPower = 1;
    for (int i = 1; i < k; ++i) s.numeratorFactors.push_back(onePlus(vx(i), -1, q));
    for (int i = 1; i <= k; ++i) s.denominatorFactors.push_back(oneMinus(vy(i), -1, q));
    (void)n;
    return s;
}

RationalSeriesSpec genH(int k, int n, VarId q) {
    // One combined numerator over f's denominator: g is lifted by the factors
    // of f's denominator that g's own denominator lacks.
    LaurentPoly nf = uWeight(k, n) * onePlus(vz0(), -1, q);
    for (int i = k + 1; i <= n; ++i) nf *= onePlus(vy(i), 1, q);
    for (int i = 1; i <= n; ++i) nf *= onePlus(vx(i), -1, q);

    LaurentPoly ng = LaurentPoly::one();
    for (int i = 1; i < k; ++i) ng *= onePlus(vx(i), -1, q);
    for (int i = k; i <= n; ++i) ng *= oneMinus(vx(i), 1, q);
    ng *= oneMinus(vz0(), 1, q);
    for (int i = k + 1; i <= n; ++i) ng *= oneMinus(vy(i), -1, q);

    RationalSeriesSpec s;
    s.seriesVar = q;
    s.leadingPower = 1;
    s.numeratorFactors.push_back((n - k) % 2 == 0 ? nf + ng : nf - ng);
    for (int i = k; i <= n; ++i) s.denominatorFactors.push_back(oneMinus(vx(i), 1, q));
    s.denominatorFactors.push_back(oneMinus(vz0(), 1, q));
    for (int i = 1; i <= n; ++i) s.denominatorFactors.push_back(oneMinus(vy(i), -1, q));
    return s;
}

PolyMatrix genFunMatrix(int n, const StrictPartition& lambda) {
    if (static_cast<int>(lambda.size()) != n || !isStrictPartition(lambda))
        throw DimensionMismatch("lambda must be a strict partition with n parts");
    PolyMatrix m(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
            m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] =
                seriesCoeff(genH(k, n, vq(l)), lambda[static_cast<std::size_t>(l - 1)]);
    return m;
}

PdetReport verifyPdet(int n, const StrictPartition& lambda) {
    if (n > 3) throw SizeLimitExceeded("determinant route bound n <= 3 exceeded");
    PdetReport rep;
    for (const ShiftedTableau& p : enumeratePrimed(Kind::OddBPrime, n, lambda))
        rep.tableauSum += tableauWeight(p);
    rep.detValue = detSymbolic(genFunMatrix(n, lambda));
    rep.ok = rep.tableauSum == rep.detValue;
    return rep;
}

std::string renderSvg(const LatticePathConfig& c) {
    const int unit = 40, margin = 50;
    int n = c.n, m = c.lambda.empty() ? 1 : c.lambda.front();
    auto px = [&](int col) { return margin + (col + n) * unit; };
    auto py = [&](int lev) { return margin + lev * unit; };
    int width = px(m) + margin, height = py(bottomLevel(n)) + margin;

    auto levelLabel = [&](int lev) -> std::string {
        if (lev <= n) return std::to_string(lev);
        if (lev == n + 1) return "0";
        if (lev == 2 * n + 2) return "-0";
        return "-" + std::to_string(2 * n + 2 - lev);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(height) + "\" font-family=\"sans-serif\" font-size=\"13\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // Grid: one faint line per level and per column of the proper grid.
    for (int lev = 1; lev <= bottomLevel(n); ++lev) {
        svg += "<line x1=\"" + std::to_string(px(1)) + "\" y1=\"" + std::to_string(py(lev)) +
               "\" x2=\"" + std::to_string(px(m)) + "\" y2=\"" + std::to_string(py(lev)) +
               "\" stroke=\"#ddd\"/>\n";
        svg += "<text x=\"" + std::to_string(px(1) - 28) + "\" y=\"" +
               std::to_string(py(lev) + 4) + "\" fill=\"#555\">" + levelLabel(lev) + "</text>\n";
    }
    for (int col = 1; col <= m; ++col) {
        svg += "<line x1=\"" + std::to_string(px(col)) + "\" y1=\"" + std::to_string(py(1)) +
               "\" x2=\"" + std::to_string(px(col)) + "\" y2=\"" +
               std::to_string(py(bottomLevel(n))) + "\" stroke=\"#eee\"/>\n";
        svg += "<text x=\"" + std::to_string(px(col) - 4) + "\" y=\"" +
               std::to_string(py(0) - 14) + "\" fill=\"#555\">" + std::to_string(col) +
               "</text>\n";
    }
    const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    for (std::size_t p = 0; p < c.paths.size(); ++p) {
        const char* color = palette[p % 6];
        std::string d;
        for (const PathEdge& e : c.paths[p].edges) {
            if (e.kind == EdgeKind::Curve) {
                d += "M " + std::to_string(px(e.fromCol)) + " " + std::to_string(py(e.fromLevel));
                d += " Q " + std::to_string(px(e.fromCol)) + " " + std::to_string(py(e.toLevel)) +
                     " " + std::to_string(px(e.toCol)) + " " + std::to_string(py(e.toLevel));
            } else {
                d += " L " + std::to_string(px(e.toCol)) + " " + std::to_string(py(e.toLevel));
            }
        }
        svg += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"2.2\"/>\n";
        for (const PathEdge& e : c.paths[p].edges)
            svg += "<circle cx=\"" + std::to_string(px(e.toCol)) + "\" cy=\"" +
                   std::to_string(py(e.toLevel)) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace htsasm
