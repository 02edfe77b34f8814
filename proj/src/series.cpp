#include "htsasm/series.hpp"

namespace htsasm {

namespace {

// Coefficients of v^0..v^deg of a factor that is polynomial in v.
std::vector<LaurentPoly> perPower(const LaurentPoly& f, VarId v, const char* role) {
    if (f.minExp(v) < 0)
        throw HtsasmError(std::string(role) +
                          " factor has negative powers of the series variable");
    int deg = f.maxExp(v);
    std::vector<LaurentPoly> out(static_cast<std::size_t>(deg) + 1);
    for (int d = 0; d <= deg; ++d) out[static_cast<std::size_t>(d)] = f.coeffOfVarPower(v, d);
    return out;
}

}  // namespace

LaurentPoly seriesCoeff(const RationalSeriesSpec& spec, int k) {
    int r = k - spec.leadingPower;
    if (r < 0) return {};
    std::size_t len = static_cast<std::size_t>(r) + 1;
    std::vector<LaurentPoly> coef(len);
    coef[0] = LaurentPoly::one();

    for (const auto& f : spec.numeratorFactors) {
        auto fc = perPower(f, spec.seriesVar, "numerator");
        std::vector<LaurentPoly> next(len);
        for (std::size_t j = 0; j < len; ++j) {
            if (coef[j].isZero()) continue;
            for (std::size_t d = 0; d < fc.size() && j + d < len; ++d) {
                if (fc[d].isZero()) continue;
                next[j + d] += coef[j] * fc[d];
            }
        }
        coef = std::move(next);
    }

    for (const auto& g : spec.denominatorFactors) {
        auto gc = perPower(g, spec.seriesVar, "denominator");
        if (gc.empty() || gc[0] != LaurentPoly::one())
            throw HtsasmError("denominator factor must have constant term 1 in the series variable");
        // 1/g acts by the recurrence out[j] = coef[j] - sum_{d>=1} g_d * out[j-d].
        std::vector<LaurentPoly> out(len);
        for (std::size_t j = 0; j < len; ++j) {
            LaurentPoly t = coef[j];
            for (std::size_t d = 1; d < gc.size() && d <= j; ++d) {
                if (gc[d].isZero()) continue;
                t -= gc[d] * out[j - d];
            }
            out[j] = std::move(t);
        }
        coef = std::move(out);
    }

    return coef[static_cast<std::size_t>(r)];
}

RationalSeriesSpec mulSpecs(const RationalSeriesSpec& a, const RationalSeriesSpec& b) {
    if (a.seriesVar != b.seriesVar)
        throw DimensionMismatch("mulSpecs: series variables differ");
    RationalSeriesSpec out;
    out.seriesVar = a.seriesVar;
    out.leadingPower = a.leadingPower + b.leadingPower;
    out.numeratorFactors = a.numeratorFactors;
    out.numeratorFactors.insert(out.numeratorFactors.end(), b.numeratorFactors.begin(),
                                b.numeratorFactors.end());
    out.denominatorFactors = a.denominatorFactors;
    out.denominatorFactors.insert(out.denominatorFactors.end(), b.denominatorFactors.begin(),
                                  b.denominatorFactors.end());
    return out;
}

}  // namespace htsasm
