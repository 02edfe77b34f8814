#include "htsasm/determinant.hpp"

namespace htsasm {

namespace {

template <typename Mat>
std::size_t checkSquare(const Mat& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DimensionMismatch("determinant: matrix is not square");
    return n;
}

}  // namespace

LaurentPoly detLaplace(const PolyMatrix& m) {
    std::size_t n = checkSquare(m);
    if (n == 0) return LaurentPoly::one();
    // dp[mask] = determinant of the submatrix on rows 0..popcount(mask)-1 and
    // the column set `mask`, built by expanding along the last of those rows.
    std::vector<LaurentPoly> dp(std::size_t(1) << n);
    dp[0] = LaurentPoly::one();
    for (std::size_t mask = 1; mask < dp.size(); ++mask) {
        int r = __builtin_popcountll(mask) - 1;  // last row of the submatrix
        int pos = 0;
        LaurentPoly acc;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            const LaurentPoly& entry = m[static_cast<std::size_t>(r)][j];
            if (!entry.isZero()) {
                LaurentPoly contrib = entry * dp[mask ^ (std::size_t(1) << j)];
                if ((r + pos) % 2 == 0)
                    acc += contrib;
                else
                    acc -= contrib;
            }
            ++pos;
        }
        dp[mask] = std::move(acc);
    }
    return dp.back();
}

LaurentPoly detBareiss(const PolyMatrix& mIn) {
    std::size_t n = checkSquare(mIn);
    if (n == 0) return LaurentPoly::one();
    PolyMatrix m = mIn;
    bool negate = false;
    LaurentPoly prev = LaurentPoly::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].isZero()) {
            std::size_t swapRow = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m[i][k].isZero()) {
                    swapRow = i;
                    break;
                }
            if (swapRow == k) return {};  // pivot column of minors is all zero
            std::swap(m[k], m[swapRow]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divideExact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPoly detSymbolic(const PolyMatrix& m) {
    return checkSquare(m) <= 5 ? detLaplace(m) : detBareiss(m);
}

GaussianRational detRational(std::vector<std::vector<GaussianRational>> m) {
    std::size_t n = checkSquare(m);
    GaussianRational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i)
            if (!m[i][k].isZero()) {
                pivot = i;
                break;
            }
        if (pivot == n) return GaussianRational(0);
        if (pivot != k) {
            std::swap(m[k], m[pivot]);
            det = -det;
        }
        det *= m[k][k];
        GaussianRational inv = m[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].isZero()) continue;
            GaussianRational factor = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
        }
    }
    return det;
}

}  // namespace htsasm
