#include "htsasm/asm.hpp"

#include <algorithm>
#include <cstdlib>

namespace htsasm {

std::string kindName(Kind k) { return k == Kind::EvenB ? "B" : "Bprime"; }

Kind parseKind(const std::string& name) {
    if (name == "B") return Kind::EvenB;
    if (name == "Bprime") return Kind::OddBPrime;
    throw ParseError("unknown kind: '" + name + "'");
}

bool isStrictPartition(const StrictPartition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] >= p[i - 1]) return false;
    }
    return true;
}

int partitionWeight(const StrictPartition& p) {
    int w = 0;
    for (int part : p) w += part;
    return w;
}

std::string compassName(Compass c) {
    switch (c) {
        case Compass::WE: return "WE";
        case Compass::NS: return "NS";
        case Compass::NE: return "NE";
        case Compass::SE: return "SE";
        case Compass::NW: return "NW";
        case Compass::SW: return "SW";
    }
    throw HtsasmError("compassName: bad label");
}

Compass parseCompass(const std::string& name) {
    for (Compass c : {Compass::WE, Compass::NS, Compass::NE, Compass::SE, Compass::NW, Compass::SW})
        if (compassName(c) == name) return c;
    throw ParseError("unknown compass label: '" + name + "'");
}

namespace {

void checkShape(const std::vector<std::vector<int>>& entries, Kind kind, int n,
                const StrictPartition& lambda) {
    if (n < 1) throw DimensionMismatch("n must be >= 1");
    if (static_cast<int>(lambda.size()) != n)
        throw DimensionMismatch("lambda must have exactly n parts");
    if (!isStrictPartition(lambda))
        throw DimensionMismatch("lambda must be strictly decreasing and positive");
    std::size_t rows = kind == Kind::EvenB ? 2u * n : 2u * n + 1u;
    std::size_t cols = static_cast<std::size_t>(lambda.front());
    if (entries.size() != rows)
        throw DimensionMismatch("expected " + std::to_string(rows) + " rows, got " +
                                std::to_string(entries.size()));
    for (const auto& row : entries)
        if (row.size() != cols)
            throw DimensionMismatch("expected " + std::to_string(cols) + " columns in every row");
}

std::string at(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

ValidationReport validate(const std::vector<std::vector<int>>& a, Kind kind, int n,
                          const StrictPartition& lambda) {
    checkShape(a, kind, n, lambda);
    const int N = static_cast<int>(a.size());
    const int m = lambda.front();
    ValidationReport rep;
    auto flag = [&rep](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };

    // (1) entries lie in {1, -1, 0}.
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= m; ++j)
            if (a[i - 1][j - 1] < -1 || a[i - 1][j - 1] > 1)
                flag("entry out of {-1,0,1} at " + at(i, j));

    // (2a) right partial sums of every row lie in {0,1}.
    std::vector<int> rowSum(N + 1, 0);  // rowSum[i] = full sum of row i
    for (int i = 1; i <= N; ++i) {
        int r = 0;
        for (int j = m; j >= 1; --j) {
            r += a[i - 1][j - 1];
            if (r < 0 || r > 1) flag("right partial sum " + std::to_string(r) + " at " + at(i, j));
        }
        rowSum[i] = r;
    }

    // (2b) wrap sums: full row sum of row i plus a left partial sum of the
    // partner row N+1-i lies in {0,1}, for every non-central row.
    for (int i = 1; i <= N; ++i) {
        int partner = N + 1 - i;
        if (partner == i) continue;
        int l = 0;
        for (int j = 1; j <= m; ++j) {
            l += a[partner - 1][j - 1];
            int w = rowSum[i] + l;
            if (w < 0 || w > 1)
                flag("wrap sum " + std::to_string(w) + " for row " + std::to_string(i) +
                     " at partner column " + std::to_string(j));
        }
    }

    // (2c) column partial sums lie in {0,1}.
    for (int j = 1; j <= m; ++j) {
        int cSum = 0;
        for (int i = 1; i <= N; ++i) {
            cSum += a[i - 1][j - 1];
            if (cSum < 0 || cSum > 1)
                flag("column partial sum " + std::to_string(cSum) + " at " + at(i, j));
        }
        // (3b) column totals are 1 exactly at the parts of lambda.
        bool isPart = std::find(lambda.begin(), lambda.end(), j) != lambda.end();
        if (cSum != (isPart ? 1 : 0))
            flag("column " + std::to_string(j) + " total " + std::to_string(cSum) + ", expected " +
                 std::to_string(isPart ? 1 : 0));
    }

    // (3a) paired row sums are 1 for i = 1..n; an odd central half-row sums
    // to 0 (its full-matrix row is completed by the central column).
    for (int i = 1; i <= n; ++i)
        if (rowSum[i] + rowSum[N + 1 - i] != 1)
            flag("row pair (" + std::to_string(i) + "," + std::to_string(N + 1 - i) + ") sums to " +
                 std::to_string(rowSum[i] + rowSum[N + 1 - i]) + ", expected 1");
    if (kind == Kind::OddBPrime && rowSum[n + 1] != 0)
        flag("central half-row sums to " + std::to_string(rowSum[n + 1]) + ", expected 0");

    return rep;
}

ValidationReport validate(const HalfTurnAsm& a) {
    return validate(a.entries, a.kind, a.n, a.lambda);
}

namespace {

struct Enumerator {
    int N, m, n;
    Kind kind;
    std::vector<char> colTarget;  // 1-based j -> required column total
    std::vector<int> r;           // current right partial sums, 0-based rows
    std::vector<std::vector<int>> a;
    std::vector<HalfTurnAsm> out;
    const StrictPartition* lambda;

    void run() {
        column(m);
    }

    // Choose entries of column j (rows top to bottom), then move left.
    void column(int j) {
        if (j == 0) {
            for (int i = 1; i <= n; ++i)
                if (r[i - 1] + r[N - i] != 1) return;
            if (kind == Kind::OddBPrime && r[n] != 0) return;
            out.push_back({kind, n, *lambda, a});
            return;
        }
        cell(j, 0, 0);
    }

    void cell(int j, int i, int colSum) {
        if (i == N) {
            if (colSum == colTarget[static_cast<std::size_t>(j)]) column(j - 1);
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            int nr = r[static_cast<std::size_t>(i)] + v;
            if (nr < 0 || nr > 1) continue;
            int nc = colSum + v;
            if (nc < 0 || nc > 1) continue;
            if (std::abs(colTarget[static_cast<std::size_t>(j)] - nc) > N - 1 - i) continue;
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] = v;
            r[static_cast<std::size_t>(i)] = nr;
            cell(j, i + 1, nc);
            r[static_cast<std::size_t>(i)] = nr - v;
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] = 0;
        }
    }
};

}  // namespace

std::vector<HalfTurnAsm> enumerateAsms(Kind kind, int n, const StrictPartition& lambda,
                                       long maxCells) {
    if (n < 1) throw DimensionMismatch("n must be >= 1");
    if (static_cast<int>(lambda.size()) != n || !isStrictPartition(lambda))
        throw DimensionMismatch("lambda must be a strict partition with n parts");
    int N = kind == Kind::EvenB ? 2 * n : 2 * n + 1;
    int m = lambda.front();
    if (maxCells == 0) {
        if (n > 4)
            throw SizeLimitExceeded("enumeration bound n <= 4 exceeded (n = " + std::to_string(n) +
                                    ")");
    } else if (static_cast<long>(N) * m > maxCells) {
        throw SizeLimitExceeded("cell bound " + std::to_string(maxCells) + " exceeded (" +
                                std::to_string(static_cast<long>(N) * m) + " cells)");
    }

    Enumerator e;
    e.N = N;
    e.m = m;
    e.n = n;
    e.kind = kind;
    e.lambda = &lambda;
    e.colTarget.assign(static_cast<std::size_t>(m) + 1, 0);
    for (int part : lambda) e.colTarget[static_cast<std::size_t>(part)] = 1;
    e.r.assign(static_cast<std::size_t>(N), 0);
    e.a.assign(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(m), 0));
    e.run();
    std::sort(e.out.begin(), e.out.end());
    return e.out;
}

std::vector<HalfTurnAsm> enumerateAsmsNaive(Kind kind, int n, const StrictPartition& lambda) {
    if (n < 1) throw DimensionMismatch("n must be >= 1");
    if (static_cast<int>(lambda.size()) != n || !isStrictPartition(lambda))
        throw DimensionMismatch("lambda must be a strict partition with n parts");
    int N = kind == Kind::EvenB ? 2 * n : 2 * n + 1;
    int m = lambda.front();
    long cells = static_cast<long>(N) * m;
    if (cells > 12)
        throw SizeLimitExceeded("naive filter bound 12 cells exceeded (" + std::to_string(cells) +
                                ")");
    std::vector<HalfTurnAsm> out;
    long total = 1;
    for (long c = 0; c < cells; ++c) total *= 3;
    std::vector<std::vector<int>> a(static_cast<std::size_t>(N),
                                    std::vector<int>(static_cast<std::size_t>(m), 0));
    for (long code = 0; code < total; ++code) {
        long rest = code;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < m; ++j) {
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    static_cast<int>(rest % 3) - 1;
                rest /= 3;
            }
        if (validate(a, kind, n, lambda).ok) out.push_back({kind, n, lambda, a});
    }
    std::sort(out.begin(), out.end());
    return out;
}

CompassMatrix toCompass(const HalfTurnAsm& asmIn) {
    const auto& a = asmIn.entries;
    int N = asmIn.rows(), m = asmIn.cols();
    CompassMatrix c;
    c.entries.assign(static_cast<std::size_t>(N), {});
    std::vector<int> colAbove(static_cast<std::size_t>(m), 0);  // strict sum above current row
    for (int i = 0; i < N; ++i) {
        auto& row = c.entries[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(m));
        int b = 0;  // inclusive right-accumulated row sum
        for (int j = m - 1; j >= 0; --j) {
            int v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            b += v;
            Compass lab;
            if (v == 1)
                lab = Compass::WE;
            else if (v == -1)
                lab = Compass::NS;
            else {
                int cAbove = colAbove[static_cast<std::size_t>(j)];
                lab = b == 0 ? (cAbove == 0 ? Compass::SE : Compass::NE)
                             : (cAbove == 0 ? Compass::SW : Compass::NW);
            }
            row[static_cast<std::size_t>(j)] = lab;
        }
        for (int j = 0; j < m; ++j)
            colAbove[static_cast<std::size_t>(j)] += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return c;
}

HalfTurnAsm fromCompass(const CompassMatrix& c, Kind kind, int n, const StrictPartition& lambda) {
    HalfTurnAsm a;
    a.kind = kind;
    a.n = n;
    a.lambda = lambda;
    for (const auto& row : c.entries) {
        std::vector<int> arow;
        arow.reserve(row.size());
        for (Compass lab : row)
            arow.push_back(lab == Compass::WE ? 1 : lab == Compass::NS ? -1 : 0);
        a.entries.push_back(std::move(arow));
    }
    return a;
}

AsmStats stats(const HalfTurnAsm& a) {
    CompassMatrix c = toCompass(a);
    int N = a.rows(), m = a.cols();
    AsmStats st;
    st.L.assign(static_cast<std::size_t>(N) + 1, 0);
    st.xyCounts.assign(static_cast<std::size_t>(N), {});
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < m; ++j) {
            Compass lab = c.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            ++st.xyCounts[static_cast<std::size_t>(i)][static_cast<std::size_t>(lab)];
            if (lab == Compass::NS) ++st.neg;
        }
        Compass first = c.entries[static_cast<std::size_t>(i)][0];
        bool inCount = first == Compass::WE || first == Compass::NW || first == Compass::SW;
        st.L[static_cast<std::size_t>(i) + 1] = st.L[static_cast<std::size_t>(i)] + (inCount ? 1 : 0);
    }
    return st;
}

std::optional<HalfTurnAsm> stripCentral(const HalfTurnAsm& a) {
    if (a.kind != Kind::OddBPrime) throw SchemeKindMismatch("stripCentral expects an odd-sided matrix");
    const auto& central = a.entries[static_cast<std::size_t>(a.n)];
    for (int v : central)
        if (v != 0) return std::nullopt;
    HalfTurnAsm out;
    out.kind = Kind::EvenB;
    out.n = a.n;
    out.lambda = a.lambda;
    out.entries = a.entries;
    out.entries.erase(out.entries.begin() + a.n);
    return out;
}

HalfTurnAsm embedCentral(const HalfTurnAsm& a) {
    if (a.kind != Kind::EvenB) throw SchemeKindMismatch("embedCentral expects an even-sided matrix");
    HalfTurnAsm out;
    out.kind = Kind::OddBPrime;
    out.n = a.n;
    out.lambda = a.lambda;
    out.entries = a.entries;
    out.entries.insert(out.entries.begin() + a.n,
                       std::vector<int>(static_cast<std::size_t>(a.cols()), 0));
    return out;
}

}  // namespace htsasm
