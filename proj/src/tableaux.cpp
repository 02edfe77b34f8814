#include "htsasm/tableaux.hpp"

#include <algorithm>
#include <cstdlib>

namespace htsasm {

int entryRank(const TabEntry& e, Kind kind, int n) {
    if (e.letter < 0 || e.letter > n) throw AlphabetMismatch("letter out of range");
    if (e.letter == 0) {
        if (kind == Kind::EvenB) throw AlphabetMismatch("letter 0 is not in the even alphabet");
        if (e.barred) throw AlphabetMismatch("letter 0 is never barred");
        return e.primed ? 2 * n : 2 * n + 1;
    }
    int k = e.letter;
    if (!e.barred) return e.primed ? 2 * (k - 1) : 2 * k - 1;
    int barBase = kind == Kind::OddBPrime ? 2 * n + 2 : 2 * n;
    return barBase + 2 * (n - k) + (e.primed ? 0 : 1);
}

std::string entryStr(const TabEntry& e) {
    std::string s = e.barred ? "-" : "";
    s += std::to_string(e.letter);
    if (e.primed) s += "'";
    return s;
}

TabEntry parseEntry(const std::string& text) {
    std::string s = text;
    TabEntry e;
    if (!s.empty() && s.back() == '\'') {
        e.primed = true;
        s.pop_back();
    }
    if (!s.empty() && s.front() == '-') {
        e.barred = true;
        s.erase(s.begin());
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad tableau entry: '" + text + "'");
    e.letter = std::atoi(s.c_str());
    if (e.letter == 0 && e.barred) throw ParseError("bad tableau entry: '" + text + "'");
    return e;
}

std::string displayTableau(const ShiftedTableau& t) {
    std::string out;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (r) out += '\n';
        out += std::string(2 * r, ' ');
        for (std::size_t idx = 0; idx < t.rows[r].size(); ++idx) {
            if (idx) out += ' ';
            out += entryStr(t.rows[r][idx]);
        }
    }
    return out;
}

namespace {

void checkTableauShape(const ShiftedTableau& t) {
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

std::string boxAt(std::size_t r, std::size_t idx) {
    return "box (" + std::to_string(r + 1) + "," + std::to_string(idx + 1) + ")";
}

// Shared order/profile checks.  When `primed` is false, any primed entry is
// flagged and diagonal strictness applies to the entries themselves; when
// true, the Definition-4.2 rules plus skeleton membership are enforced.
ValidationReport validateImpl(const ShiftedTableau& t, bool primed) {
    checkTableauShape(t);
    ValidationReport rep;
    auto flag = [&rep](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };

    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t idx = 0; idx < t.rows[r].size(); ++idx) {
            try {
                entryRank(t.rows[r][idx], t.kind, t.n);
            } catch (const AlphabetMismatch& e) {
                flag(std::string(e.what()) + " at " + boxAt(r, idx));
            }
            if (!primed && t.rows[r][idx].primed) flag("primed entry at " + boxAt(r, idx));
        }
    if (!rep.ok) return rep;  // order checks need a sane alphabet

    auto rank = [&t](const TabEntry& e) { return entryRank(e, t.kind, t.n); };
    auto skel = [](TabEntry e) {
        e.primed = false;
        return e;
    };

    std::vector<bool> used(static_cast<std::size_t>(t.n) + 1, false);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (std::size_t idx = 0; idx < t.rows[r].size(); ++idx) {
            const TabEntry& e = t.rows[r][idx];
            if (idx > 0) {
                const TabEntry& left = t.rows[r][idx - 1];
                if (rank(left) > rank(e)) flag("row decrease at " + boxAt(r, idx));
                if (primed && left == e && e.primed)
                    flag("repeated primed entry in row at " + boxAt(r, idx));
            }
            if (r > 0 && idx + 1 < t.rows[r - 1].size()) {
                const TabEntry& above = t.rows[r - 1][idx + 1];
                if (rank(above) > rank(e)) flag("column decrease at " + boxAt(r, idx));
                if (primed && above == e && !e.primed)
                    flag("repeated unprimed entry in column at " + boxAt(r, idx));
            }
            if (r > 0) {
                const TabEntry& diagAbove = t.rows[r - 1][idx];
                if (rank(skel(diagAbove)) >= rank(skel(e)))
                    flag("diagonal not strictly increasing at " + boxAt(r, idx));
            }
            if (idx == 0) {
                if (e.primed) flag("primed entry on the main diagonal at " + boxAt(r, idx));
                if (e.letter < 1 || e.letter > t.n) {
                    flag("main diagonal letter out of 1..n at " + boxAt(r, idx));
                } else if (used[static_cast<std::size_t>(e.letter)]) {
                    flag("main diagonal repeats letter " + std::to_string(e.letter));
                } else {
                    used[static_cast<std::size_t>(e.letter)] = true;
                }
            }
        }
    }
    // n rows, one diagonal letter each, all distinct => every k appears.
    return rep;
}

// Letter carried by matrix row i (1-based) in the bijection.
TabEntry letterForRow(int i, Kind kind, int n) {
    if (i <= n) return {i, false, false};
    if (kind == Kind::OddBPrime) {
        if (i == n + 1) return {0, false, false};
        return {2 * n + 2 - i, true, false};
    }
    return {2 * n + 1 - i, true, false};
}

int rowForLetter(const TabEntry& e, Kind kind, int n) {
    if (e.letter == 0) return n + 1;
    if (!e.barred) return e.letter;
    return kind == Kind::OddBPrime ? 2 * n + 2 - e.letter : 2 * n + 1 - e.letter;
}

std::vector<std::vector<int>> accumulated(const HalfTurnAsm& a) {
    int N = a.rows(), m = a.cols();
    std::vector<std::vector<int>> b(static_cast<std::size_t>(N),
                                    std::vector<int>(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < N; ++i) {
        int sum = 0;
        for (int j = m - 1; j >= 0; --j) {
            sum += a.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sum;
        }
    }
    return b;
}

}  // namespace

ValidationReport validateUnprimed(const ShiftedTableau& t) { return validateImpl(t, false); }
ValidationReport validatePrimed(const ShiftedTableau& t) { return validateImpl(t, true); }

ShiftedTableau fromAsm(const HalfTurnAsm& a) {
    int N = a.rows(), m = a.cols();
    ShiftedTableau t;
    t.kind = a.kind;
    t.n = a.n;
    t.lambda = a.lambda;
    t.rows.resize(a.lambda.size());
    for (std::size_t r = 0; r < a.lambda.size(); ++r)
        t.rows[r].resize(static_cast<std::size_t>(a.lambda[r]));

    auto b = accumulated(a);
    for (int j = 1; j <= m; ++j) {
        int depth = 0;
        for (int i = 1; i <= N; ++i) {
            if (b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] != 1) continue;
            ++depth;
            if (depth > a.n || a.lambda[static_cast<std::size_t>(depth - 1)] < j)
                throw InvalidTableau("accumulated sums overflow shape lambda in diagonal " +
                                     std::to_string(j));
            t.rows[static_cast<std::size_t>(depth - 1)][static_cast<std::size_t>(j - 1)] =
                letterForRow(i, a.kind, a.n);
        }
        int expected = 0;
        for (int part : a.lambda)
            if (part >= j) ++expected;
        if (depth != expected)
            throw InvalidTableau("diagonal " + std::to_string(j) + " holds " +
                                 std::to_string(depth) + " boxes, shape needs " +
                                 std::to_string(expected));
    }
    return t;
}

HalfTurnAsm toAsm(const ShiftedTableau& t) {
    checkTableauShape(t);
    int N = t.kind == Kind::EvenB ? 2 * t.n : 2 * t.n + 1;
    int m = t.lambda.front();
    std::vector<std::vector<int>> b(static_cast<std::size_t>(N),
                                    std::vector<int>(static_cast<std::size_t>(m) + 1, 0));
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t idx = 0; idx < t.rows[r].size(); ++idx) {
            const TabEntry& e = t.rows[r][idx];
            entryRank(e, t.kind, t.n);  // alphabet check
            int i = rowForLetter(e, t.kind, t.n);
            auto& cell = b[static_cast<std::size_t>(i - 1)][idx];
            if (cell == 1)
                throw InvalidTableau("diagonal " + std::to_string(idx + 1) +
                                     " repeats the letter " + entryStr(e));
            cell = 1;
        }
    HalfTurnAsm a;
    a.kind = t.kind;
    a.n = t.n;
    a.lambda = t.lambda;
    a.entries.assign(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < m; ++j)
            a.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) + 1];
    return a;
}

namespace {

std::vector<TabEntry> alphabet(Kind kind, int n, bool withPrimes) {
    std::vector<TabEntry> letters;
    for (int k = 1; k <= n; ++k) letters.push_back({k, false, false});
    if (kind == Kind::OddBPrime) letters.push_back({0, false, false});
    for (int k = n; k >= 1; --k) letters.push_back({k, true, false});
    if (!withPrimes) return letters;
    std::vector<TabEntry> out;
    for (TabEntry e : letters) {
        TabEntry p = e;
        p.primed = true;
        out.push_back(p);
        out.push_back(e);
    }
    return out;
}

struct TableauGen {
    Kind kind;
    int n;
    const StrictPartition* lambda;
    bool primed;
    std::vector<TabEntry> abc;  // alphabet in rank order
    ShiftedTableau work;
    std::vector<bool> used;
    std::vector<ShiftedTableau> out;

    int rank(const TabEntry& e) const { return entryRank(e, kind, n); }
    static TabEntry skel(TabEntry e) {
        e.primed = false;
        return e;
    }

    void run() {
        work.kind = kind;
        work.n = n;
        work.lambda = *lambda;
        work.rows.resize(lambda->size());
        for (std::size_t r = 0; r < lambda->size(); ++r)
            work.rows[r].resize(static_cast<std::size_t>((*lambda)[r]));
        used.assign(static_cast<std::size_t>(n) + 1, false);
        cell(0, 0);
    }

    void cell(std::size_t r, std::size_t idx) {
        if (idx == work.rows[r].size()) {
            ++r;
            idx = 0;
            if (r == work.rows.size()) {
                out.push_back(work);
                return;
            }
        }
        for (const TabEntry& e : abc) {
            if (idx > 0) {
                const TabEntry& left = work.rows[r][idx - 1];
                if (rank(left) > rank(e)) continue;
                if (primed && left == e && e.primed) continue;
            }
            if (r > 0 && idx + 1 < work.rows[r - 1].size()) {
                const TabEntry& above = work.rows[r - 1][idx + 1];
                if (rank(above) > rank(e)) continue;
                if (primed && above == e && !e.primed) continue;
            }
            if (r > 0 && rank(skel(work.rows[r - 1][idx])) >= rank(skel(e))) continue;
            bool claimed = false;
            if (idx == 0) {
                if (e.primed || e.letter < 1 || used[static_cast<std::size_t>(e.letter)]) continue;
                used[static_cast<std::size_t>(e.letter)] = true;
                claimed = true;
            }
            work.rows[r][idx] = e;
            cell(r, idx + 1);
            if (claimed) used[static_cast<std::size_t>(e.letter)] = false;
        }
    }
};

std::vector<ShiftedTableau> generate(Kind kind, int n, const StrictPartition& lambda, bool primed) {
    if (n < 1) throw DimensionMismatch("n must be >= 1");
    if (static_cast<int>(lambda.size()) != n || !isStrictPartition(lambda))
        throw DimensionMismatch("lambda must be a strict partition with n parts");
    if (n > 4) throw SizeLimitExceeded("tableau enumeration bound n <= 4 exceeded");
    TableauGen g;
    g.kind = kind;
    g.n = n;
    g.lambda = &lambda;
    g.primed = primed;
    g.abc = alphabet(kind, n, primed);
    g.run();
    std::sort(g.out.begin(), g.out.end());
    return g.out;
}

}  // namespace

std::vector<ShiftedTableau> enumerateUnprimed(Kind kind, int n, const StrictPartition& lambda) {
    return generate(kind, n, lambda, false);
}

std::vector<ShiftedTableau> enumeratePrimed(Kind kind, int n, const StrictPartition& lambda) {
    return generate(kind, n, lambda, true);
}

std::vector<ShiftedTableau> primings(const HalfTurnAsm& a) {
    ShiftedTableau base = fromAsm(a);
    auto b = accumulated(a);
    CompassMatrix c = toCompass(a);
    int N = a.rows(), m = a.cols();

    // Tableau coordinates of the box on diagonal j fed by matrix row i, plus
    // the free (strip-initial, off-diagonal) boxes in scan order.
    std::vector<int> colDepth(static_cast<std::size_t>(m) + 1, 0);
    std::vector<std::pair<std::size_t, std::size_t>> freeBoxes;
    for (int i = 1; i <= N; ++i) {
        int j = 1;
        while (j <= m) {
            if (b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] != 1) {
                ++j;
                continue;
            }
            int j1 = j;
            while (j <= m && b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] == 1)
                ++j;
            int j2 = j - 1;  // strip occupies diagonals j1..j2
            for (int d = j1; d <= j2; ++d) {
                std::size_t boxRow = static_cast<std::size_t>(colDepth[static_cast<std::size_t>(d)]);
                std::size_t boxIdx = static_cast<std::size_t>(d - 1);
                if (d == j1) {
                    if (j1 > 1) freeBoxes.emplace_back(boxRow, boxIdx);
                } else {
                    Compass lab =
                        c.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(d - 2)];
                    if (lab == Compass::NW)
                        base.rows[boxRow][boxIdx].primed = true;
                    else if (lab != Compass::SW)
                        throw HtsasmError("strip continuation is neither SW nor NW");
                }
            }
        }
        for (int d = 1; d <= m; ++d)
            colDepth[static_cast<std::size_t>(d)] +=
                b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(d - 1)];
    }

    std::vector<ShiftedTableau> out;
    out.reserve(std::size_t(1) << freeBoxes.size());
    for (std::size_t mask = 0; mask < (std::size_t(1) << freeBoxes.size()); ++mask) {
        ShiftedTableau p = base;
        for (std::size_t bit = 0; bit < freeBoxes.size(); ++bit)
            if (mask >> bit & 1) p.rows[freeBoxes[bit].first][freeBoxes[bit].second].primed = true;
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ShiftedTableau> primings(const ShiftedTableau& t, const HalfTurnAsm& a) {
    if (t != fromAsm(a)) throw InvalidTableau("tableau is not the image of the given matrix");
    return primings(a);
}

LaurentPoly tableauWeight(const ShiftedTableau& t) {
    checkTableauShape(t);
    bool even = t.kind == Kind::EvenB;
    LaurentPoly w = LaurentPoly::one();
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t idx = 0; idx < t.rows[r].size(); ++idx) {
            const TabEntry& e = t.rows[r][idx];
            entryRank(e, t.kind, t.n);  // alphabet check
            if (idx == 0) {
                if (e.primed || e.letter == 0)
                    throw AlphabetMismatch("no weight for " + entryStr(e) +
                                           " on the main diagonal");
                if (e.barred) continue;  // weight 1
                LaurentPoly d = LaurentPoly::var(vx(e.letter));
                for (int j = e.letter + 1; j <= t.n; ++j)
                    d *= LaurentPoly::var(vx(j)) * LaurentPoly::var(vy(j), -1);
                if (even) {
                    if ((t.n - e.letter + 1) % 2 != 0) d = -d;
                } else {
                    d *= LaurentPoly::var(vz0());
                }
                w *= d;
                continue;
            }
            LaurentPoly f;
            if (e.letter == 0) {
                f = LaurentPoly::var(vz0(), e.primed ? -1 : 1);
            } else if (!e.barred) {
                f = e.primed ? LaurentPoly::var(vy(e.letter)) : LaurentPoly::var(vx(e.letter));
            } else {
                f = e.primed ? LaurentPoly::var(vx(e.letter), -1)
                             : LaurentPoly::var(vy(e.letter), -1);
            }
            if (even) {
                f *= LaurentPoly::imagUnit();
                if (e.primed) f = -f;
            }
            w *= f;
        }
    return w;
}

}  // namespace htsasm
