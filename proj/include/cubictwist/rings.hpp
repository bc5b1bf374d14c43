#pragma once

// Exact arithmetic in the two quadratic rings used throughout:
//   Z[w]  with w^2 + w + 1 = 0   (Eisenstein integers, O_{Q(sqrt(-3))})
//   Z[i]  with i^2 = -1          (Gaussian integers)
// Elements are stored on the integral basis {1, w} resp. {1, i}.
// Both rings are Euclidean for the norm, which is what gcd/factor rely on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cubictwist {

using BigInt = boost::multiprecision::cpp_int;

enum class Ring { Eisenstein, Gaussian };

struct QuadInt {
    BigInt x;  // coefficient of 1
    BigInt y;  // coefficient of w (Eisenstein) or i (Gaussian)
    Ring ring = Ring::Eisenstein;

    QuadInt() = default;
    QuadInt(BigInt x_, BigInt y_, Ring r) : x(std::move(x_)), y(std::move(y_)), ring(r) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool operator==(const QuadInt& o) const = default;
};

// Arithmetic.  Mixed-ring operands throw std::invalid_argument.
QuadInt operator+(const QuadInt& a, const QuadInt& b);
QuadInt operator-(const QuadInt& a, const QuadInt& b);
QuadInt operator-(const QuadInt& a);
QuadInt operator*(const QuadInt& a, const QuadInt& b);

QuadInt conj(const QuadInt& z);
BigInt norm(const QuadInt& z);  // x^2-xy+y^2 resp. x^2+y^2, always >= 0

QuadInt from_int(const BigInt& n, Ring ring);
QuadInt omega();          // w in Z[w]
QuadInt gaussian_unit();  // i in Z[i]

// The ramified prime: 1-w over Z[w] (above 3), 1+i over Z[i] (above 2).
QuadInt ramified_prime(Ring ring);

// The unit group: 6 elements for Z[w], 4 for Z[i].
const std::vector<QuadInt>& units(Ring ring);
bool is_unit(const QuadInt& z);

// Rounded division: quotient q minimizing norm(z - q*m); remainder has
// norm(r) <= (3/4) norm(m) (Eisenstein) resp. (1/2) norm(m) (Gaussian).
QuadInt round_div(const QuadInt& z, const QuadInt& m);
QuadInt mod(const QuadInt& z, const QuadInt& m);

bool divides(const QuadInt& d, const QuadInt& z);
QuadInt exact_div(const QuadInt& z, const QuadInt& d);  // throws if not divisible

bool congruent(const QuadInt& a, const QuadInt& b, const QuadInt& m);

// z coprime to the ramified prime and z != 0.
bool is_coprime_to_ramified(const QuadInt& z);

// True iff z == 1 mod 3 (Eisenstein) resp. z == 1 mod (1+i)^3 (Gaussian).
bool is_primary(const QuadInt& z);

// The unique associate == 1 mod 3 resp. mod (1+i)^3.  Throws for z = 0 and
// for z divisible by the ramified prime.
QuadInt primary_associate(const QuadInt& z);

// The unique associate in the angular sector [0, 2*pi/k) with k the number
// of units; used to normalize where primary is undefined (ramified divisors).
QuadInt canonical_associate(const QuadInt& z);

// gcd, normalized primary when coprime to the ramified prime, canonical
// otherwise; gcd(z, 0) = normalized z, gcd(0, 0) = 0.
QuadInt gcd(const QuadInt& a, const QuadInt& b);

// Extended gcd: g = u*a + v*b with g = gcd(a, b) (same normalization).
struct ExtGcd {
    QuadInt g, u, v;
};
ExtGcd ext_gcd(const QuadInt& a, const QuadInt& b);

// Inverse of a modulo m; throws if gcd(a, m) is not a unit.
QuadInt inverse_mod(const QuadInt& a, const QuadInt& m);

bool is_prime(const QuadInt& z);

struct Factorization {
    QuadInt unit;
    std::vector<std::pair<QuadInt, int>> factors;  // (prime, exponent), exponents >= 1
    QuadInt reconstruct() const;
};

// Complete factorization into primes (primary where defined, canonical for
// the ramified prime).  Requires norm(z) to fit in 64 bits.  Throws for z=0.
Factorization factor(const QuadInt& z);

// A complete residue system mod m, exactly norm(m) elements, enumerated from
// the Hermite normal form of the lattice (m); deterministic order.
std::vector<QuadInt> residues_mod(const QuadInt& m);

// Text form: `a+bw` / `a+bi` with signs and unit coefficients elided,
// e.g. "1+3w", "-2-3w", "i", "7".  parse/print round-trip exactly.
std::string to_string(const QuadInt& z);
QuadInt parse_quadint(const std::string& text, Ring ring);
std::ostream& operator<<(std::ostream& os, const QuadInt& z);

// Rational integer helpers shared by several modules.
bool is_rational_prime(std::uint64_t n);
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

}  // namespace cubictwist
