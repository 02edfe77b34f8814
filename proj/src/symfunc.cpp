#include "htsasm/symfunc.hpp"

#include <algorithm>
#include <map>

#include "htsasm/errors.hpp"

namespace htsasm {

bool isPartition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

static void requirePartition(const Partition& p, const char* what) {
    if (!isPartition(p)) throw DimensionMismatch(std::string(what) + " is not a partition");
}

int weightOf(const Partition& p) {
    int w = 0;
    for (int part : p) w += part;
    return w;
}

Partition conjugate(const Partition& p) {
    requirePartition(p, "argument");
    Partition q;
    if (p.empty()) return q;
    q.resize(p[0]);
    for (int j = 0; j < p[0]; ++j) {
        int h = 0;
        while (h < static_cast<int>(p.size()) && p[h] > j) ++h;
        q[j] = h;
    }
    return q;
}

bool contains(const Partition& outer, const Partition& inner) {
    requirePartition(outer, "outer shape");
    requirePartition(inner, "inner shape");
    if (inner.size() > outer.size()) return false;
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

Partition canonical(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

static bool weightLexLess(const Partition& a, const Partition& b) {
    int wa = weightOf(a);
    int wb = weightOf(b);
    if (wa != wb) return wa < wb;
    return a < b;
}

std::vector<Partition> partitionsMaxWeight(int maxWeight, int maxLength) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
        out.push_back(cur);
        if (maxLength >= 0 && static_cast<int>(cur.size()) >= maxLength) return;
        for (int part = std::min(remaining, maxPart); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, maxWeight, maxWeight);
    std::sort(out.begin(), out.end(), weightLexLess);
    return out;
}

FrobeniusForm toFrobenius(const Partition& p) {
    requirePartition(p, "argument");
    Partition q = conjugate(p);
    FrobeniusForm f;
    for (int i = 0; i < static_cast<int>(p.size()) && p[i] >= i + 1; ++i) {
        f.arms.push_back(p[i] - (i + 1));
        f.legs.push_back(q[i] - (i + 1));
    }
    return f;
}

Partition fromFrobenius(const FrobeniusForm& f) {
    if (f.arms.size() != f.legs.size())
        throw DimensionMismatch("Frobenius form needs equally many arms and legs");
    int d = static_cast<int>(f.arms.size());
    for (int i = 0; i < d; ++i) {
        if (f.arms[i] < 0 || f.legs[i] < 0)
            throw DimensionMismatch("Frobenius coordinates must be nonnegative");
        if (i > 0 && (f.arms[i] >= f.arms[i - 1] || f.legs[i] >= f.legs[i - 1]))
            throw DimensionMismatch("Frobenius coordinates must decrease strictly");
    }
    if (d == 0) return {};
    // Row i of the hook with corner (i, i) is a_i + i + 1 long; column i
    // reaches down l_i + i + 1 rows.  Rows at or past the diagonal length d
    // come entirely from legs: row index i sits in column j < d exactly when
    // l_j + j >= i.
    int totalRows = f.legs[0] + 1;
    Partition p;
    for (int i = 0; i < totalRows; ++i) {
        int len = 0;
        if (i < d) {
            len = f.arms[i] + i + 1;
        } else {
            while (len < d && f.legs[len] + len >= i) ++len;
        }
        if (len == 0) break;
        p.push_back(len);
    }
    return p;
}

// Enumerate strictly decreasing nonnegative tuples t with
// sum(2 t_i + 2) <= maxWeight; each becomes the class member whose legs (or
// arms) are t and whose other coordinates are t_i + 1.
static std::vector<Partition> hookClass(int maxWeight, bool armIsLonger) {
    std::vector<Partition> out;
    std::vector<int> t;
    auto rec = [&](auto&& self, int budget, int maxNext) -> void {
        FrobeniusForm f;
        for (int v : t) {
            f.arms.push_back(armIsLonger ? v + 1 : v);
            f.legs.push_back(armIsLonger ? v : v + 1);
        }
        out.push_back(fromFrobenius(f));
        for (int v = std::min(maxNext, budget / 2 - 1); v >= 0; --v) {
            t.push_back(v);
            self(self, budget - (2 * v + 2), v - 1);
            t.pop_back();
        }
    };
    rec(rec, maxWeight, maxWeight);
    std::sort(out.begin(), out.end(), weightLexLess);
    return out;
}

std::vector<Partition> classC(int maxWeight) { return hookClass(maxWeight, true); }
std::vector<Partition> classA(int maxWeight) { return hookClass(maxWeight, false); }

LaurentPoly elementary(int m, const std::vector<LaurentPoly>& vars) {
    if (m < 0 || m > static_cast<int>(vars.size())) return LaurentPoly{};
    // dp[k] = e_k of the values seen so far.
    std::vector<LaurentPoly> dp(static_cast<size_t>(m) + 1);
    dp[0] = LaurentPoly::one();
    int seen = 0;
    for (const LaurentPoly& v : vars) {
        ++seen;
        for (int k = std::min(m, seen); k >= 1; --k) dp[k] += dp[k - 1] * v;
    }
    return dp[m];
}

LaurentPoly complete(int r, const std::vector<LaurentPoly>& vars) {
    if (r < 0) return LaurentPoly{};
    if (r == 0) return LaurentPoly::one();
    std::vector<LaurentPoly> dp(static_cast<size_t>(r) + 1);
    dp[0] = LaurentPoly::one();
    for (const LaurentPoly& v : vars)
        for (int k = 1; k <= r; ++k) dp[k] += dp[k - 1] * v;
    return dp[r];
}

LaurentPoly schur(const Partition& mu, const std::vector<LaurentPoly>& vars) {
    return skewSchur(mu, {}, vars);
}

LaurentPoly alternantSchur(const Partition& mu, const std::vector<LaurentPoly>& vars) {
    requirePartition(mu, "shape");
    int n = static_cast<int>(vars.size());
    if (static_cast<int>(mu.size()) > n) return LaurentPoly{};
    for (const LaurentPoly& v : vars)
        if (!v.isMonomial())
            throw NonInvertibleImage("alternant ratio needs invertible monomial values");
    auto alternant = [&](const std::vector<int>& exps) {
        PolyMatrix m(n, std::vector<LaurentPoly>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = vars[j].pow(exps[i]);
        return detSymbolic(m);
    };
    std::vector<int> top(n), delta(n);
    for (int i = 0; i < n; ++i) {
        delta[i] = n - 1 - i;
        top[i] = (i < static_cast<int>(mu.size()) ? mu[i] : 0) + delta[i];
    }
    return divideExact(alternant(top), alternant(delta));
}

LaurentPoly skewSchur(const Partition& mu, const Partition& gamma,
                      const std::vector<LaurentPoly>& vars) {
    requirePartition(mu, "outer shape");
    requirePartition(gamma, "inner shape");
    if (!contains(mu, gamma)) return LaurentPoly{};
    int l = static_cast<int>(mu.size());
    PolyMatrix m(l, std::vector<LaurentPoly>(l));
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            int gj = j < static_cast<int>(gamma.size()) ? gamma[j] : 0;
            m[i][j] = complete(mu[i] - gj - i + j, vars);
        }
    }
    return detSymbolic(m);
}

LaurentPoly skewSchurLR(const Partition& mu, const Partition& gamma,
                        const std::vector<LaurentPoly>& vars) {
    requirePartition(mu, "outer shape");
    requirePartition(gamma, "inner shape");
    if (!contains(mu, gamma)) return LaurentPoly{};
    // Cells of the skew shape in row-major order, 0-based columns.
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int i = 0; i < static_cast<int>(mu.size()); ++i) {
        int lo = i < static_cast<int>(gamma.size()) ? gamma[i] : 0;
        for (int j = lo; j < mu[i]; ++j) cells.push_back({i, j});
    }
    int total = static_cast<int>(cells.size());
    std::map<Partition, int> multiplicity;
    if (total == 0) {
        multiplicity[{}] = 1;
    } else {
        std::map<std::pair<int, int>, int> fill;
        auto inShape = [&](int r, int c) {
            if (r < 0 || r >= static_cast<int>(mu.size()) || c >= mu[r]) return false;
            int lo = r < static_cast<int>(gamma.size()) ? gamma[r] : 0;
            return c >= lo;
        };
        auto rec = [&](auto&& self, int idx) -> void {
            if (idx == total) {
                // Reverse reading word: rows top to bottom, right to left;
                // every prefix must use k at least as often as k + 1.
                std::vector<int> count(static_cast<size_t>(total) + 2, 0);
                for (int i = 0; i < static_cast<int>(mu.size()); ++i) {
                    int lo = i < static_cast<int>(gamma.size()) ? gamma[i] : 0;
                    for (int j = mu[i] - 1; j >= lo; --j) {
                        int w = fill.at({i, j});
                        ++count[w];
                        if (w > 1 && count[w] > count[w - 1]) return;
                    }
                }
                Partition content;
                for (int k = 1; k <= total && count[k] > 0; ++k) content.push_back(count[k]);
                ++multiplicity[content];
                return;
            }
            auto [r, c] = cells[idx];
            int lowest = 1;
            if (inShape(r, c - 1)) lowest = std::max(lowest, fill.at({r, c - 1}));
            if (inShape(r - 1, c)) lowest = std::max(lowest, fill.at({r - 1, c}) + 1);
            for (int v = lowest; v <= total; ++v) {
                fill[{r, c}] = v;
                self(self, idx + 1);
            }
            fill.erase({r, c});
        };
        rec(rec, 0);
    }
    LaurentPoly sum;
    for (const auto& [nu, mult] : multiplicity)
        sum += schur(nu, vars) * LaurentPoly::constant(mult);
    return sum;
}

// Class members of weight beyond |mu| cannot fit inside mu, so the truncated
// sums only need the class up to weight |mu|.
LaurentPoly soUniversal(const Partition& mu, const std::vector<LaurentPoly>& z) {
    LaurentPoly sum;
    for (const Partition& gamma : classC(weightOf(mu))) {
        if (!contains(mu, gamma)) continue;
        LaurentPoly term = skewSchur(mu, gamma, z);
        sum += (weightOf(gamma) / 2) % 2 == 1 ? -term : term;
    }
    return sum;
}

LaurentPoly phiBnPrime(const Partition& mu, const std::vector<LaurentPoly>& z) {
    LaurentPoly sum;
    for (const Partition& gamma : classC(weightOf(mu)))
        if (contains(mu, gamma)) sum += skewSchur(mu, gamma, z);
    return sum;
}

LittlewoodPair littlewoodProducts(const std::vector<LaurentPoly>& vars, LittlewoodVariant v) {
    int n = static_cast<int>(vars.size());
    LittlewoodPair pair;
    pair.product = LaurentPoly::one();
    for (int i = 0; i < n; ++i) {
        int jFrom = v == LittlewoodVariant::Strict ? i + 1 : i;
        for (int j = jFrom; j < n; ++j)
            pair.product *= LaurentPoly::one() + vars[i] * vars[j];
    }
    int maxWeight = v == LittlewoodVariant::Strict ? n * (n - 1) : n * (n + 1);
    auto cls = v == LittlewoodVariant::Strict ? classA(maxWeight) : classC(maxWeight);
    for (const Partition& p : cls)
        if (static_cast<int>(p.size()) <= n) pair.schurSum += schur(p, vars);
    return pair;
}

}  // namespace htsasm
