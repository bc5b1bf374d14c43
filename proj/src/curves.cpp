#include "cubictwist/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cubictwist {

namespace {

// Divisors of |n| given its factorization, bounded by `cap`, unsorted.
std::vector<long long> divisors_below(
    const std::vector<std::pair<std::uint64_t, int>>& fact, long long cap) {
    std::vector<long long> divs = {1};
    for (auto [p, e] : fact) {
        std::size_t base = divs.size();
        long long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= static_cast<long long>(p);
            if (pk > cap) break;
            for (std::size_t i = 0; i < base; ++i)
                if (divs[i] <= cap / pk) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

long long isqrt_ll(long long v) {
    if (v < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

std::vector<RationalPoint> search_points(long long D, long long height_bound) {
    if (D == 0) throw std::invalid_argument("D must be nonzero");
    if (height_bound < 1) throw std::invalid_argument("height bound must be >= 1");
    std::vector<RationalPoint> out;
    auto d_fact = factor_u64(static_cast<std::uint64_t>(D < 0 ? -D : D));
    for (long long q = 1; q <= height_bound; ++q) {
        long long N = D * q * q * q;
        // Merge the factorizations of |D| and q^3 rather than factoring N.
        auto fact = d_fact;
        for (auto [p, e] : factor_u64(static_cast<std::uint64_t>(q))) {
            bool merged = false;
            for (auto& [fp, fe] : fact)
                if (fp == p) { fe += 3 * e; merged = true; break; }
            if (!merged) fact.emplace_back(p, 3 * e);
        }
        // a^3 + b^3 = N factors as (a+b)(a^2-ab+b^2); a+b = s runs over the
        // divisors of N with sign(s) = sign(N), and s^3 <= 4N.
        long long cap = static_cast<long long>(std::cbrt(4.0 * std::abs(static_cast<double>(N)))) + 2;
        for (long long s0 : divisors_below(fact, cap)) {
            long long s = N > 0 ? s0 : -s0;
            long long m = N / s;  // = a^2 - ab + b^2 >= 0
            // b = s - a, 3a^2 - 3sa + (s^2 - m) = 0
            long long disc = 12 * m - 3 * s * s;
            if (disc < 0) continue;
            long long r = isqrt_ll(disc);
            if (r * r != disc) continue;
            for (long long sgn : {1LL, -1LL}) {
                long long num = 3 * s + sgn * r;
                if (num % 6 != 0) continue;
                long long a = num / 6;
                long long b = s - a;
                if (a * a * a + b * b * b != N) continue;
                long long g = std::gcd(std::gcd(std::abs(a), std::abs(b)), q);
                if (g != 1) continue;  // q is not the common denominator
                RationalPoint pt{a, b, q};
                if (std::find(out.begin(), out.end(), pt) == out.end()) out.push_back(pt);
                if (r == 0) break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const RationalPoint& p, const RationalPoint& q) {
        if (p.den != q.den) return p.den < q.den;
        if (p.x_num != q.x_num) return p.x_num < q.x_num;
        return p.y_num < q.y_num;
    });
    return out;
}

std::pair<long long, long long> cubefree_part(long long k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    long long c = 1, f = 1;
    for (auto [p, e] : factor_u64(static_cast<std::uint64_t>(k))) {
        for (int i = 0; i < e % 3; ++i) c *= static_cast<long long>(p);
        for (int i = 0; i < e / 3; ++i) f *= static_cast<long long>(p);
    }
    return {c, f};
}

bool is_trivial_D(long long D) { return D == 0 || D == 1 || D == -1 || D == 2 || D == -2; }

}  // namespace cubictwist
