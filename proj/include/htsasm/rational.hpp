#pragma once

#include <gmpxx.h>

#include <string>

#include "htsasm/errors.hpp"

namespace htsasm {

// Exact complex number with rational real and imaginary parts.  This is the
// coefficient field of every polynomial in the library; it hosts the
// imaginary unit that several weight tables need, so no separate formal
// symbol for sqrt(-1) is ever introduced.
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}                  // NOLINT(google-explicit-constructor)
    GaussianRational(const mpq_class& r) : re(r), im(0) {}      // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational imagUnit() { return {mpq_class(0), mpq_class(1)}; }

    bool isZero() const { return re == 0 && im == 0; }
    bool isReal() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    mpq_class normSq() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re * o.re - im * o.im;
        mpq_class i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

    GaussianRational inverse() const {
        if (isZero()) throw HtsasmError("GaussianRational: division by zero");
        mpq_class n = normSq();
        return {re / n, -im / n};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // "3", "-1/2", "(1+2*i)", "(0-1/3*i)".  Real values print bare; complex
    // values always carry both parts inside parentheses.
    std::string str() const {
        if (im == 0) return re.get_str();
        std::string s = "(" + re.get_str();
        s += (im < 0) ? "-" : "+";
        mpq_class a = abs(im);
        s += a.get_str();
        s += "*i)";
        return s;
    }
};

// Parse a rational in "p" or "p/q" form; canonicalizes.
inline mpq_class parseRational(const std::string& text) {
    try {
        mpq_class v(text);
        v.canonicalize();
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: '" + text + "'");
    }
}

}  // namespace htsasm
