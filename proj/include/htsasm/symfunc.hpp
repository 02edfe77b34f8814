#pragma once

#include <string>
#include <vector>

#include "htsasm/determinant.hpp"
#include "htsasm/laurent.hpp"

namespace htsasm {

// Weakly decreasing positive parts, canonical form (no stored zeros).
using Partition = std::vector<int>;

bool isPartition(const Partition& p);
int weightOf(const Partition& p);
Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);  // inner fits in outer
Partition canonical(Partition p);                               // strip trailing zeros

// All partitions with |p| <= maxWeight and (when maxLength >= 0) at most
// maxLength parts, ordered by weight then lexicographically.
std::vector<Partition> partitionsMaxWeight(int maxWeight, int maxLength = -1);

// Frobenius coordinates: arms a_i = p_i - i and legs l_i = p'_i - i over the
// d diagonal boxes, both strictly decreasing and nonnegative.
struct FrobeniusForm {
    std::vector<int> arms;
    std::vector<int> legs;
    friend auto operator<=>(const FrobeniusForm&, const FrobeniusForm&) = default;
};

FrobeniusForm toFrobenius(const Partition& p);
Partition fromFrobenius(const FrobeniusForm& f);

// The self-conjugate-offset classes: arm = leg + 1 throughout for the first,
// leg = arm + 1 for the second (each the set of conjugates of the other).
// Results carry every member of weight <= maxWeight including the empty
// partition, ordered by weight then lexicographically.
std::vector<Partition> classC(int maxWeight);
std::vector<Partition> classA(int maxWeight);

// Elementary and complete homogeneous symmetric polynomials of the given
// values; e_m = 0 outside 0 <= m <= #vars, h_r = 0 for r < 0.
LaurentPoly elementary(int m, const std::vector<LaurentPoly>& vars);
LaurentPoly complete(int r, const std::vector<LaurentPoly>& vars);

// Schur polynomial of the values, by the determinant in complete symmetric
// functions det(h_{mu_i - i + j}).
LaurentPoly schur(const Partition& mu, const std::vector<LaurentPoly>& vars);

// Schur polynomial as the alternant ratio det(x_j^{mu_i + n - i}) / det(x_j^{n-i}).
// The values must be invertible monomials so the division is exact
// (NonInvertibleImage otherwise).
LaurentPoly alternantSchur(const Partition& mu, const std::vector<LaurentPoly>& vars);

// Skew Schur polynomial det(h_{mu_i - gamma_j - i + j}); 0 unless gamma fits
// inside mu.
LaurentPoly skewSchur(const Partition& mu, const Partition& gamma,
                      const std::vector<LaurentPoly>& vars);

// Littlewood-Richardson expansion oracle: the skew Schur polynomial as
// sum_nu c^{mu}_{gamma,nu} s_nu by brute-force enumeration of
// lattice-word fillings of the skew shape.  Small shapes only.
LaurentPoly skewSchurLR(const Partition& mu, const Partition& gamma,
                        const std::vector<LaurentPoly>& vars);

// Universal odd orthogonal character: sum over gamma in the arm=leg+1 class
// of (-1)^{|gamma|/2} s_{mu/gamma}(z), truncated to gamma inside mu.
LaurentPoly soUniversal(const Partition& mu, const std::vector<LaurentPoly>& z);

// Its unsigned companion: sum over the same class of s_{mu/gamma}(z).
LaurentPoly phiBnPrime(const Partition& mu, const std::vector<LaurentPoly>& z);

enum class LittlewoodVariant { Strict, Weak };

// Both sides of the Littlewood product identities over the given values:
// Strict pairs prod_{i<j}(1 + z_i z_j) with the sum of s_alpha over the
// leg=arm+1 class, Weak pairs prod_{i<=j}(1 + z_i z_j) with the sum of
// s_gamma over the arm=leg+1 class.
struct LittlewoodPair {
    LaurentPoly product;
    LaurentPoly schurSum;
};
LittlewoodPair littlewoodProducts(const std::vector<LaurentPoly>& vars, LittlewoodVariant v);

}  // namespace htsasm
