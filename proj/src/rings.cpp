#include "cubictwist/rings.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cubictwist {

namespace {

void require_same_ring(const QuadInt& a, const QuadInt& b) {
    if (a.ring != b.ring) throw std::invalid_argument("mixed-ring operation");
}

BigInt floor_div(const BigInt& a, const BigInt& b) {  // b > 0
    if (a >= 0) return a / b;
    return -((-a + b - 1) / b);
}

// Nearest integer to num/den (den != 0), ties rounded up.
BigInt round_quotient(const BigInt& num, const BigInt& den) {
    BigInt d = den < 0 ? -den : den;
    BigInt n = den < 0 ? -num : num;
    return floor_div(2 * n + d, 2 * d);
}

}  // namespace

QuadInt operator+(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    return {a.x + b.x, a.y + b.y, a.ring};
}

QuadInt operator-(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    return {a.x - b.x, a.y - b.y, a.ring};
}

QuadInt operator-(const QuadInt& a) { return {-a.x, -a.y, a.ring}; }

QuadInt operator*(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    if (a.ring == Ring::Eisenstein) {
        // (x1+y1 w)(x2+y2 w), w^2 = -1-w
        BigInt yy = a.y * b.y;
        return {a.x * b.x - yy, a.x * b.y + a.y * b.x - yy, a.ring};
    }
    return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x, a.ring};
}

QuadInt conj(const QuadInt& z) {
    if (z.ring == Ring::Eisenstein) return {z.x - z.y, -z.y, z.ring};  // conj(w) = -1-w
    return {z.x, -z.y, z.ring};
}

BigInt norm(const QuadInt& z) {
    if (z.ring == Ring::Eisenstein) return z.x * z.x - z.x * z.y + z.y * z.y;
    return z.x * z.x + z.y * z.y;
}

QuadInt from_int(const BigInt& n, Ring ring) { return {n, 0, ring}; }
QuadInt omega() { return {0, 1, Ring::Eisenstein}; }
QuadInt gaussian_unit() { return {0, 1, Ring::Gaussian}; }

QuadInt ramified_prime(Ring ring) {
    if (ring == Ring::Eisenstein) return {1, -1, Ring::Eisenstein};  // 1-w
    return {1, 1, Ring::Gaussian};                                   // 1+i
}

const std::vector<QuadInt>& units(Ring ring) {
    static const std::vector<QuadInt> eis = {
        {1, 0, Ring::Eisenstein},  {-1, 0, Ring::Eisenstein}, {0, 1, Ring::Eisenstein},
        {0, -1, Ring::Eisenstein}, {-1, -1, Ring::Eisenstein}, {1, 1, Ring::Eisenstein},
    };  // 1, -1, w, -w, w^2, -w^2
    static const std::vector<QuadInt> gau = {
        {1, 0, Ring::Gaussian}, {-1, 0, Ring::Gaussian},
        {0, 1, Ring::Gaussian}, {0, -1, Ring::Gaussian},
    };
    return ring == Ring::Eisenstein ? eis : gau;
}

bool is_unit(const QuadInt& z) { return norm(z) == 1; }

QuadInt round_div(const QuadInt& z, const QuadInt& m) {
    require_same_ring(z, m);
    if (m.is_zero()) throw std::invalid_argument("division by zero");
    QuadInt num = z * conj(m);
    BigInt n = norm(m);
    return {round_quotient(num.x, n), round_quotient(num.y, n), z.ring};
}

QuadInt mod(const QuadInt& z, const QuadInt& m) { return z - round_div(z, m) * m; }

bool divides(const QuadInt& d, const QuadInt& z) {
    require_same_ring(d, z);
    if (d.is_zero()) return z.is_zero();
    QuadInt num = z * conj(d);
    BigInt n = norm(d);
    return num.x % n == 0 && num.y % n == 0;
}

QuadInt exact_div(const QuadInt& z, const QuadInt& d) {
    require_same_ring(z, d);
    if (d.is_zero()) throw std::invalid_argument("division by zero");
    QuadInt num = z * conj(d);
    BigInt n = norm(d);
    if (num.x % n != 0 || num.y % n != 0) throw std::invalid_argument("not divisible");
    return {num.x / n, num.y / n, z.ring};
}

bool congruent(const QuadInt& a, const QuadInt& b, const QuadInt& m) {
    return divides(m, a - b);
}

bool is_coprime_to_ramified(const QuadInt& z) {
    if (z.is_zero()) return false;
    return !divides(ramified_prime(z.ring), z);
}

bool is_primary(const QuadInt& z) {
    if (z.is_zero()) return false;
    if (z.ring == Ring::Eisenstein) return (z.x - 1) % 3 == 0 && z.y % 3 == 0;
    QuadInt lam3 = {-2, 2, Ring::Gaussian};  // (1+i)^3
    return divides(lam3, z - QuadInt{1, 0, Ring::Gaussian});
}

QuadInt primary_associate(const QuadInt& z) {
    if (z.is_zero()) throw std::invalid_argument("primary_associate of zero");
    if (!is_coprime_to_ramified(z))
        throw std::invalid_argument("primary_associate undefined on the ramified prime");
    for (const auto& u : units(z.ring)) {
        QuadInt cand = u * z;
        if (is_primary(cand)) return cand;
    }
    throw std::logic_error("no primary associate found");  // unreachable
}

QuadInt canonical_associate(const QuadInt& z) {
    if (z.is_zero()) return z;
    // Sector [0, 60deg) for Z[w]: y >= 0 and x > y.  Sector [0, 90deg) for
    // Z[i]: x > 0 and y >= 0.  Exactly one associate lands in the sector.
    for (const auto& u : units(z.ring)) {
        QuadInt c = u * z;
        if (z.ring == Ring::Eisenstein) {
            if (c.y >= 0 && c.x > c.y) return c;
        } else {
            if (c.x > 0 && c.y >= 0) return c;
        }
    }
    throw std::logic_error("no canonical associate found");  // unreachable
}

namespace {
QuadInt normalize(const QuadInt& z) {
    if (z.is_zero()) return z;
    if (is_coprime_to_ramified(z)) return primary_associate(z);
    return canonical_associate(z);
}
}  // namespace

QuadInt gcd(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    QuadInt r0 = a, r1 = b;
    while (!r1.is_zero()) {
        QuadInt r2 = mod(r0, r1);
        r0 = r1;
        r1 = r2;
    }
    return normalize(r0);
}

ExtGcd ext_gcd(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    Ring R = a.ring;
    QuadInt r0 = a, r1 = b;
    QuadInt u0 = from_int(1, R), u1 = from_int(0, R);
    QuadInt v0 = from_int(0, R), v1 = from_int(1, R);
    while (!r1.is_zero()) {
        QuadInt q = round_div(r0, r1);
        QuadInt r2 = r0 - q * r1;
        QuadInt u2 = u0 - q * u1;
        QuadInt v2 = v0 - q * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    QuadInt g = normalize(r0);
    if (!r0.is_zero()) {
        QuadInt w = exact_div(g, r0);  // unit applied by normalize
        u0 = w * u0;
        v0 = w * v0;
    }
    return {g, u0, v0};
}

QuadInt inverse_mod(const QuadInt& a, const QuadInt& m) {
    auto e = ext_gcd(a, m);
    if (!is_unit(e.g)) throw std::invalid_argument("element not invertible mod m");
    return mod(exact_div(e.u, e.g), m);
}

bool is_rational_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(const QuadInt& z) {
    BigInt n = norm(z);
    if (n <= 1) return false;
    if (n > BigInt(UINT64_MAX)) throw std::invalid_argument("norm too large for primality test");
    std::uint64_t nn = n.convert_to<std::uint64_t>();
    if (is_rational_prime(nn)) return true;
    // Square of an inert rational prime?
    std::uint64_t q = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(nn)));
    while (q * q < nn) ++q;
    while (q * q > nn) --q;
    if (q * q != nn || !is_rational_prime(q)) return false;
    bool inert = (z.ring == Ring::Eisenstein) ? (q % 3 == 2) : (q % 4 == 3);
    return inert && divides(from_int(BigInt(q), z.ring), z);
}

namespace {

// Primary (resp. canonical) prime above a split rational prime p.
QuadInt split_prime_above(std::uint64_t p, Ring ring) {
    if (ring == Ring::Eisenstein) {
        for (std::uint64_t a = 1; 3 * a * a <= 4 * p; ++a) {
            std::uint64_t disc = 4 * p - 3 * a * a;
            std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(disc)));
            while (s * s < disc) ++s;
            while (s > 0 && s * s > disc) --s;
            if (s * s != disc) continue;
            if ((a + s) % 2 != 0) continue;
            BigInt b = BigInt(a + s) / 2;  // solves b^2 - ab + a^2 = p with x=a swapped
            QuadInt cand{BigInt(a), b, Ring::Eisenstein};
            if (norm(cand) == BigInt(p)) return primary_associate(cand);
            cand = QuadInt{BigInt(a), BigInt(a) - b, Ring::Eisenstein};
            if (norm(cand) == BigInt(p)) return primary_associate(cand);
        }
    } else {
        for (std::uint64_t a = 1; a * a * 2 <= p * 2; ++a) {
            std::uint64_t rem = p - a * a;
            if (rem < a * a) break;
            std::uint64_t b = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(rem)));
            while (b * b < rem) ++b;
            while (b > 0 && b * b > rem) --b;
            if (b * b == rem) return primary_associate(QuadInt{BigInt(a), BigInt(b), Ring::Gaussian});
        }
    }
    throw std::logic_error("no split prime found above p");
}

}  // namespace

QuadInt Factorization::reconstruct() const {
    QuadInt acc = unit;
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

Factorization factor(const QuadInt& z) {
    if (z.is_zero()) throw std::invalid_argument("factor(0)");
    BigInt n = norm(z);
    if (n > BigInt(UINT64_MAX)) throw std::invalid_argument("norm beyond 64-bit factoring scale");
    Factorization out;
    out.unit = z;  // divided down below
    if (n == 1) return out;

    Ring R = z.ring;
    std::uint64_t ram_p = (R == Ring::Eisenstein) ? 3 : 2;
    QuadInt rest = z;
    for (auto [p, e] : factor_u64(n.convert_to<std::uint64_t>())) {
        (void)e;
        if (p == ram_p) {
            QuadInt lam = canonical_associate(ramified_prime(R));
            int v = 0;
            while (divides(lam, rest)) { rest = exact_div(rest, lam); ++v; }
            if (v > 0) out.factors.emplace_back(lam, v);
        } else {
            bool split = (R == Ring::Eisenstein) ? (p % 3 == 1) : (p % 4 == 1);
            if (!split) {
                // inert: the prime is the primary associate of p itself
                QuadInt q = primary_associate(from_int(BigInt(p), R));
                int v = 0;
                while (divides(q, rest)) { rest = exact_div(rest, q); ++v; }
                if (v > 0) out.factors.emplace_back(q, v);
            } else {
                QuadInt pi = split_prime_above(p, R);
                for (QuadInt pr : {pi, primary_associate(conj(pi))}) {
                    int v = 0;
                    while (divides(pr, rest)) { rest = exact_div(rest, pr); ++v; }
                    if (v > 0) out.factors.emplace_back(pr, v);
                }
            }
        }
    }
    if (!is_unit(rest)) throw std::logic_error("factor(): nontrivial cofactor left");
    out.unit = rest;
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        BigInt na = norm(a.first), nb = norm(b.first);
        if (na != nb) return na < nb;
        return std::make_pair(a.first.x, a.first.y) < std::make_pair(b.first.x, b.first.y);
    });
    return out;
}

std::vector<QuadInt> residues_mod(const QuadInt& m) {
    if (m.is_zero()) throw std::invalid_argument("residues_mod(0)");
    Ring R = m.ring;
    // Lattice (m) has Z-basis m and m*w (resp m*i) with coordinate columns:
    BigInt v1x = m.x, v1y = m.y;
    BigInt v2x = -m.y, v2y = (R == Ring::Eisenstein) ? m.x - m.y : m.x;
    // HNF: find b = gcd of the y-coordinates, then a = N(m)/b.
    BigInt r0 = v1y, r1 = v2y;
    while (r1 != 0) { BigInt r2 = r0 % r1; r0 = r1; r1 = r2; }
    BigInt b = r0 < 0 ? -r0 : r0;  // >= 1 since m != 0
    BigInt a = norm(m) / b;
    std::vector<QuadInt> out;
    out.reserve((a * b).convert_to<std::size_t>());
    for (BigInt s = 0; s < b; ++s)
        for (BigInt r = 0; r < a; ++r) out.push_back({r, s, R});
    return out;
}

std::string to_string(const QuadInt& z) {
    const char sym = (z.ring == Ring::Eisenstein) ? 'w' : 'i';
    std::ostringstream os;
    if (z.y == 0) {
        os << z.x;
    } else if (z.x == 0) {
        if (z.y == 1) os << sym;
        else if (z.y == -1) os << '-' << sym;
        else os << z.y << sym;
    } else {
        os << z.x;
        BigInt ay = z.y < 0 ? -z.y : z.y;
        os << (z.y < 0 ? '-' : '+');
        if (ay != 1) os << ay;
        os << sym;
    }
    return os.str();
}

QuadInt parse_quadint(const std::string& text, Ring ring) {
    const char sym = (ring == Ring::Eisenstein) ? 'w' : 'i';
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty literal");
    BigInt X = 0, Y = 0;
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') { ++i; }
        else if (s[i] == '-') { sign = -1; ++i; }
        std::size_t d0 = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        bool has_digits = i > d0;
        BigInt mag = has_digits ? BigInt(s.substr(d0, i - d0)) : BigInt(1);
        if (i < s.size() && s[i] == sym) {
            ++i;
            Y += sign * mag;
        } else if (has_digits) {
            X += sign * mag;
        } else {
            throw std::invalid_argument("bad literal: " + text);
        }
        any = true;
    }
    if (!any) throw std::invalid_argument("bad literal: " + text);
    return {X, Y, ring};
}

std::ostream& operator<<(std::ostream& os, const QuadInt& z) { return os << to_string(z); }

}  // namespace cubictwist
