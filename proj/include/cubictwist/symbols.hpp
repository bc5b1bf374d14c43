#pragma once

// Quadratic residue symbol over Z[i] and cubic residue symbol over Z[w].
//
// Two independent evaluation routes ship:
//   * cubic_symbol / quadratic_symbol: Jacobi-style reduction using the
//     reciprocity flip plus supplementary laws for units and the ramified
//     prime.  Works for composite (primary) denominators.
//   * euler_symbol: the defining power-residue criterion a^((N(p)-1)/k) mod p
//     at primes.  This is the oracle the fast route is tested against.
//
// Convention: symbols are attached to primary denominators, b == 1 (mod 3)
// in Z[w] and b == 1 (mod (1+i)^3) in Z[i].  Values only depend on the
// ideal (b).  With this normalization the Hecke coefficients built in
// lfunctions match the F_p point counts exactly (see the a_p cross check).

#include "cubictwist/rings.hpp"

#include <complex>
#include <optional>
#include <string>

namespace cubictwist {

enum class SymbolKind { Quadratic, Cubic };

struct SymbolValue {
    SymbolKind kind = SymbolKind::Cubic;
    std::optional<int> exponent;  // reduced mod order; nullopt means NotCoprime

    static SymbolValue cubic(int e) { return {SymbolKind::Cubic, ((e % 3) + 3) % 3}; }
    static SymbolValue quadratic(int e) { return {SymbolKind::Quadratic, ((e % 2) + 2) % 2}; }
    static SymbolValue not_coprime(SymbolKind k) { return {k, std::nullopt}; }

    bool is_not_coprime() const { return !exponent.has_value(); }
    int order() const { return kind == SymbolKind::Cubic ? 3 : 2; }

    // Root of unity as a complex number; 0 for NotCoprime.
    std::complex<double> value() const;
    std::string str() const;  // "1", "w", "w^2", "-1", "not-coprime"

    SymbolValue operator*(const SymbolValue& o) const;
    SymbolValue inverse() const;
    bool operator==(const SymbolValue& o) const = default;
};

// (a/b)_3 for primary b != 0 in Z[w]; NotCoprime when gcd(a,b) is a non-unit.
SymbolValue cubic_symbol(const QuadInt& a, const QuadInt& b);

// (a/b)_2 for odd b != 0 in Z[i] (any associate; the value is ideal-wise).
SymbolValue quadratic_symbol(const QuadInt& a, const QuadInt& b);

// Power-residue criterion at a prime p of the matching ring.
SymbolValue euler_symbol(const QuadInt& a, const QuadInt& p, int order);

// a^e mod m by square-and-multiply; e >= 0.
QuadInt pow_mod(const QuadInt& a, const BigInt& e, const QuadInt& m);

}  // namespace cubictwist
