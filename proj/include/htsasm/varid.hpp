#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "htsasm/errors.hpp"

namespace htsasm {

// Variable families used across the weight schemes.  The enum order is the
// canonical variable order for monomial comparison and printing.
enum class VarFam : std::uint8_t {
    x = 0,   // x1..xn
    y,       // y1..yn
    z0,      // single central-row weight
    q,       // q1..qn series/column variables
    s,       // s1..sn
    t,       // t (bare, idx 0) or t1..tn
    a1,      // a1_1..a1_n
    a2,      // a2_1..a2_n
    b1,      // b1_1..b1_n
    b2,      // b2_1..b2_n
    a0,      // single
    b0,      // single
    c,       // c1..c(n+1), elementary-symmetric arguments
    eps,     // perturbation knob for negative-control tests
};

struct VarId {
    VarFam fam{VarFam::x};
    int idx{0};

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

// Canonical spelling: x1, y3, q2, s1, t / t2, c4, z0, a0, b0, eps, a1_2, b2_3.
// Families with a single instance print bare; an idx-0 s or t also prints
// bare (used by the single-parameter t schemes).
std::string varName(const VarId& v);

// Inverse of varName.  Throws ParseError on unknown spellings.
VarId parseVarName(const std::string& name);

// Convenience constructors.
inline VarId vx(int i) { return {VarFam::x, i}; }
inline VarId vy(int i) { return {VarFam::y, i}; }
inline VarId vz0() { return {VarFam::z0, 0}; }
inline VarId vq(int i) { return {VarFam::q, i}; }
inline VarId vs(int i) { return {VarFam::s, i}; }
inline VarId vt(int i) { return {VarFam::t, i}; }  // vt(0) is the bare "t"
inline VarId va1(int i) { return {VarFam::a1, i}; }
inline VarId va2(int i) { return {VarFam::a2, i}; }
inline VarId vb1(int i) { return {VarFam::b1, i}; }
inline VarId vb2(int i) { return {VarFam::b2, i}; }
inline VarId va0() { return {VarFam::a0, 0}; }
inline VarId vb0() { return {VarFam::b0, 0}; }
inline VarId vc(int i) { return {VarFam::c, i}; }
inline VarId veps() { return {VarFam::eps, 0}; }

}  // namespace htsasm
