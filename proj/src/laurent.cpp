#include "htsasm/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace htsasm {

// ---------------------------------------------------------------------------
// variable names

std::string varName(const VarId& v) {
    auto numbered = [&](const char* base) { return std::string(base) + std::to_string(v.idx); };
    auto maybeNumbered = [&](const char* base) {
        return v.idx == 0 ? std::string(base) : numbered(base);
    };
    switch (v.fam) {
        case VarFam::x: return numbered("x");
        case VarFam::y: return numbered("y");
        case VarFam::z0: return "z0";
        case VarFam::q: return numbered("q");
        case VarFam::s: return maybeNumbered("s");
        case VarFam::t: return maybeNumbered("t");
        case VarFam::a1: return "a1_" + std::to_string(v.idx);
        case VarFam::a2: return "a2_" + std::to_string(v.idx);
        case VarFam::b1: return "b1_" + std::to_string(v.idx);
        case VarFam::b2: return "b2_" + std::to_string(v.idx);
        case VarFam::a0: return "a0";
        case VarFam::b0: return "b0";
        case VarFam::c: return numbered("c");
        case VarFam::eps: return "eps";
    }
    throw HtsasmError("varName: bad family");
}

VarId parseVarName(const std::string& name) {
    if (name.empty()) throw ParseError("empty variable name");
    if (name == "z0") return vz0();
    if (name == "a0") return va0();
    if (name == "b0") return vb0();
    if (name == "eps") return veps();

    auto digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
    };
    static const std::pair<const char*, VarFam> underscored[] = {
        {"a1_", VarFam::a1}, {"a2_", VarFam::a2}, {"b1_", VarFam::b1}, {"b2_", VarFam::b2}};
    for (const auto& [prefix, fam] : underscored) {
        if (name.rfind(prefix, 0) == 0) {
            std::string rest = name.substr(3);
            if (!digits(rest)) throw ParseError("bad variable name: '" + name + "'");
            return {fam, std::atoi(rest.c_str())};
        }
    }
    static const std::pair<char, VarFam> plain[] = {{'x', VarFam::x}, {'y', VarFam::y}, {'q', VarFam::q},
                                                    {'s', VarFam::s}, {'t', VarFam::t}, {'c', VarFam::c}};
    for (const auto& [letter, fam] : plain) {
        if (name[0] == letter) {
            std::string rest = name.substr(1);
            if (rest.empty()) return {fam, 0};
            if (!digits(rest)) break;
            return {fam, std::atoi(rest.c_str())};
        }
    }
    throw ParseError("bad variable name: '" + name + "'");
}

// ---------------------------------------------------------------------------
// monomials

Monomial mulMono(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && (j == b.size() || a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (j < b.size() && (i == a.size() || b[j].first < a[i].first)) {
            out.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e != 0) out.emplace_back(a[i].first, e);
            ++i, ++j;
        }
    }
    return out;
}

Monomial invMono(const Monomial& a) {
    Monomial out = a;
    for (auto& [v, e] : out) e = -e;
    return out;
}

Monomial powMono(const Monomial& a, int e) {
    if (e == 0) return {};
    Monomial out = a;
    for (auto& [v, ex] : out) ex *= e;
    return out;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && (j == b.size() || a[i].first < b[j].first)) {
            // a carries this variable, b's exponent is 0.
            return a[i].second > 0;
        }
        if (j < b.size() && (i == a.size() || b[j].first < a[i].first)) {
            return b[j].second < 0;
        }
        if (a[i].second != b[j].second) return a[i].second > b[j].second;
        ++i, ++j;
    }
    return false;
}

// ---------------------------------------------------------------------------
// construction and arithmetic

LaurentPoly LaurentPoly::constant(const GaussianRational& c) {
    LaurentPoly p;
    if (!c.isZero()) p.terms_.emplace(Monomial{}, c);
    return p;
}

LaurentPoly LaurentPoly::var(VarId v, int exp) {
    LaurentPoly p;
    if (exp == 0) return one();
    p.terms_.emplace(Monomial{{v, exp}}, GaussianRational(1));
    return p;
}

LaurentPoly LaurentPoly::term(const GaussianRational& c, const Monomial& m) {
    LaurentPoly p;
    if (!c.isZero()) p.terms_.emplace(m, c);
    return p;
}

void LaurentPoly::addTerm(const Monomial& m, const GaussianRational& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.addTerm(mulMono(ma, mb), ca * cb);
    return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e == 0) return one();
    if (e < 0) {
        if (terms_.size() != 1)
            throw NonInvertibleImage("pow: negative exponent of a non-monomial");
        const auto& [m, c] = *terms_.begin();
        return term(c.inverse(), invMono(m)).pow(-e);
    }
    LaurentPoly base = *this, acc = one();
    int k = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// substitution / evaluation

LaurentPoly LaurentPoly::substitute(const std::map<VarId, LaurentPoly>& sigma) const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        LaurentPoly acc = constant(c);
        Monomial untouched;
        for (const auto& [v, e] : m) {
            auto it = sigma.find(v);
            if (it == sigma.end()) {
                untouched.emplace_back(v, e);
                continue;
            }
            const LaurentPoly& image = it->second;
            if (e >= 0) {
                acc = acc * image.pow(e);
            } else {
                if (!image.isMonomial())
                    throw NonInvertibleImage("substitute: negative power of " + varName(v) +
                                             " mapped to a non-invertible image");
                acc = acc * image.pow(e);
            }
        }
        out += acc * term(GaussianRational(1), untouched);
    }
    return out;
}

GaussianRational LaurentPoly::evalRational(const std::map<VarId, GaussianRational>& point) const {
    auto powq = [](GaussianRational base, int e) {
        GaussianRational acc(1);
        if (e < 0) {
            base = base.inverse();
            e = -e;
        }
        while (e > 0) {
            if (e & 1) acc *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return acc;
    };
    GaussianRational sum(0);
    for (const auto& [m, c] : terms_) {
        GaussianRational prod = c;
        for (const auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end())
                throw HtsasmError("evalRational: variable " + varName(v) + " not assigned");
            if (e < 0 && it->second.isZero())
                throw ZeroAssignment("evalRational: " + varName(v) +
                                     " = 0 but occurs with a negative exponent");
            prod *= powq(it->second, e);
        }
        sum += prod;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// queries

GaussianRational LaurentPoly::coeffOf(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

LaurentPoly LaurentPoly::coeffOfVarPower(VarId v, int k) const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        int e = 0;
        Monomial rest;
        for (const auto& [var, exp] : m) {
            if (var == v)
                e = exp;
            else
                rest.emplace_back(var, exp);
        }
        if (e == k) out.addTerm(rest, c);
    }
    return out;
}

int LaurentPoly::minExp(VarId v) const {
    bool seen = false;
    int best = 0;
    for (const auto& [m, c] : terms_) {
        int e = 0;
        for (const auto& [var, exp] : m)
            if (var == v) e = exp;
        if (!seen || e < best) best = e;
        seen = true;
    }
    return best;
}

int LaurentPoly::maxExp(VarId v) const {
    bool seen = false;
    int best = 0;
    for (const auto& [m, c] : terms_) {
        int e = 0;
        for (const auto& [var, exp] : m)
            if (var == v) e = exp;
        if (!seen || e > best) best = e;
        seen = true;
    }
    return best;
}

bool LaurentPoly::dependsOn(VarId v) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [var, exp] : m)
            if (var == v && exp != 0) return true;
    return false;
}

std::set<VarId> LaurentPoly::vars() const {
    std::set<VarId> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, exp] : m) out.insert(var);
    return out;
}

bool LaurentPoly::allCoeffsReal() const {
    for (const auto& [m, c] : terms_)
        if (c.im != 0) return false;
    return true;
}

LaurentPoly LaurentPoly::realPart() const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) out.addTerm(m, GaussianRational(c.re));
    return out;
}

// ---------------------------------------------------------------------------
// canonical text

std::string monoStr(const Monomial& m) {
    std::string out;
    bool first = true;
    for (const auto& [v, e] : m) {
        if (!first) out += "*";
        first = false;
        out += varName(v);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

namespace {

// leading-sign convention: negative when re<0, or re==0 and im<0.
bool leadsNegative(const GaussianRational& c) { return c.re < 0 || (c.re == 0 && c.im < 0); }

std::string termBody(const GaussianRational& cAbs, const Monomial& m) {
    std::string mono = monoStr(m);
    if (mono.empty()) return cAbs.str();
    if (cAbs.isReal() && cAbs.re == 1) return mono;
    return cAbs.str() + "*" + mono;
}

}  // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = leadsNegative(c);
        GaussianRational cAbs = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += termBody(cAbs, m);
        first = false;
    }
    return out;
}

namespace {

// Split a term string on '*' at parenthesis depth 0.
std::vector<std::string> splitFactors(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '*' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

bool looksRational(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '/') return false;
    return true;
}

GaussianRational parseComplexParen(const std::string& body) {
    // body without the surrounding parens: "a+b*i", "a-b*i", or a bare rational.
    std::string s = body;
    bool negIm = false;
    std::size_t split = std::string::npos;
    int depth = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {  // skip a leading sign at i=0
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && (s[i] == '+' || s[i] == '-') && s[i - 1] != '/' ) {
            split = i;
            negIm = s[i] == '-';
            break;
        }
    }
    if (split == std::string::npos) return GaussianRational(parseRational(s));
    std::string reStr = s.substr(0, split);
    std::string imStr = s.substr(split + 1);
    const std::string suffix = "*i";
    if (imStr.size() >= suffix.size() && imStr.compare(imStr.size() - suffix.size(), suffix.size(), suffix) == 0)
        imStr = imStr.substr(0, imStr.size() - suffix.size());
    else if (imStr == "i")
        imStr = "1";
    else
        throw ParseError("bad complex coefficient: '(" + body + ")'");
    mpq_class re = parseRational(reStr);
    mpq_class im = parseRational(imStr);
    if (negIm) im = -im;
    return {re, im};
}

LaurentPoly parseTerm(const std::string& term) {
    GaussianRational coeff(1);
    Monomial mono;
    for (const std::string& rawFactor : splitFactors(term)) {
        std::string f = rawFactor;
        if (f.empty()) throw ParseError("empty factor in term '" + term + "'");
        if (f.front() == '(' && f.back() == ')') {
            coeff *= parseComplexParen(f.substr(1, f.size() - 2));
            continue;
        }
        if (looksRational(f)) {
            coeff *= GaussianRational(parseRational(f));
            continue;
        }
        if (f == "i") {
            coeff *= GaussianRational::imagUnit();
            continue;
        }
        int exp = 1;
        auto caret = f.find('^');
        if (caret != std::string::npos) {
            std::string expStr = f.substr(caret + 1);
            f = f.substr(0, caret);
            try {
                exp = std::stoi(expStr);
            } catch (const std::exception&) {
                throw ParseError("bad exponent in '" + rawFactor + "'");
            }
        }
        VarId v = parseVarName(f);
        if (exp != 0) mono = mulMono(mono, Monomial{{v, exp}});
    }
    return LaurentPoly::term(coeff, mono);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& textIn) {
    // Accept the unicode minus sign as a synonym for '-'.
    std::string text;
    for (std::size_t i = 0; i < textIn.size();) {
        if (textIn.compare(i, 3, "\xE2\x88\x92") == 0) {
            text += '-';
            i += 3;
        } else {
            text += textIn[i++];
        }
    }
    // Trim.
    auto notSpace = [](unsigned char ch) { return !std::isspace(ch); };
    text.erase(text.begin(), std::find_if(text.begin(), text.end(), notSpace));
    text.erase(std::find_if(text.rbegin(), text.rend(), notSpace).base(), text.end());
    if (text.empty()) throw ParseError("empty polynomial text");
    if (text == "0") return {};

    LaurentPoly out;
    std::size_t pos = 0;
    bool negate = false;
    if (text[0] == '-') {
        negate = true;
        pos = 1;
    } else if (text[0] == '+') {
        pos = 1;
    }
    while (pos < text.size()) {
        std::size_t next = std::string::npos;
        bool nextNeg = false;
        int depth = 0;
        for (std::size_t i = pos; i + 2 < text.size(); ++i) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            if (depth == 0 && text[i] == ' ' && (text[i + 1] == '+' || text[i + 1] == '-') &&
                text[i + 2] == ' ') {
                next = i;
                nextNeg = text[i + 1] == '-';
                break;
            }
        }
        std::string chunk = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        LaurentPoly t = parseTerm(chunk);
        out += negate ? -t : t;
        if (next == std::string::npos) break;
        pos = next + 3;
        negate = nextNeg;
    }
    return out;
}

// ---------------------------------------------------------------------------
// exact division

LaurentPoly divideExact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.isZero()) throw InexactDivision("divideExact: zero divisor");
    LaurentPoly rem = num, quot;
    const auto& dlead = *den.terms().begin();
    // Each successful step eliminates the current leading term of the
    // remainder; an exact division finishes in (quotient term count) steps.
    // A failed division would walk down the (unbounded) Laurent order
    // forever, so cap the iterations.
    std::size_t cap = 4u * (num.termCount() + 1u) * (den.termCount() + 1u) + 200000u;
    for (std::size_t step = 0; !rem.isZero(); ++step) {
        if (step > cap) throw InexactDivision("divideExact: divisor does not divide dividend");
        const auto& rlead = *rem.terms().begin();
        Monomial qm = mulMono(rlead.first, invMono(dlead.first));
        GaussianRational qc = rlead.second / dlead.second;
        LaurentPoly qterm = LaurentPoly::term(qc, qm);
        quot += qterm;
        rem -= qterm * den;
    }
    return quot;
}

}  // namespace htsasm
