#pragma once

// Rational points on x^3 + y^3 = D and cube-free bookkeeping.

#include "cubictwist/rings.hpp"

#include <vector>

namespace cubictwist {

// A rational point x = a/q, y = b/q in lowest terms (q the common
// denominator, gcd(gcd(a,b), q) = 1); a^3 + b^3 = D q^3 exactly.
struct RationalPoint {
    long long x_num, y_num, den;  // den >= 1
    bool operator==(const RationalPoint&) const = default;
};

// All rational points with common denominator q <= height_bound, exhaustive
// per q: a + b must divide D q^3, and each divisor s pins (a, b) via
// 3a^2 - 3sa + s^2 - Dq^3/s = 0.  Sorted by (q, x_num).
std::vector<RationalPoint> search_points(long long D, long long height_bound);

// k = c * f^3 with c cube-free; returns (c, f).
std::pair<long long, long long> cubefree_part(long long k);

// The exceptional-torsion values D = 0, +-1, +-2.
bool is_trivial_D(long long D);

}  // namespace cubictwist
