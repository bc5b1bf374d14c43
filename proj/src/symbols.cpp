#include "cubictwist/symbols.hpp"

#include <stdexcept>

namespace cubictwist {

namespace {

constexpr double kPi = 3.14159265358979323846;

int small_mod(const BigInt& v, int m) {
    return ((v % m).convert_to<int>() + m) % m;
}

// (w/b)_3 = w^((N(b)-1)/3 mod 3) for primary b.  Exact: for prime b the
// Euler criterion applied to the unit w gives the power literally, and the
// exponent is additive under multiplication of primary elements.
int omega_supplement(const QuadInt& b) {
    int n9 = small_mod(norm(b), 9);  // in {1,4,7}
    return ((n9 - 1) / 3) % 3;
}

// ((1-w)/b)_3 = w^(m mod 3) for primary b = 1 + 3m + 3nw.
// Verified wholesale against euler_symbol (see tests).
int lambda_supplement_eisenstein(const QuadInt& b) {
    int x9 = small_mod(b.x, 9);  // in {1,4,7}
    return ((x9 - 1) / 3) % 3;
}

// (i/b)_2 = (-1)^((N(b)-1)/4 mod 2) for odd b; exact by the Euler criterion
// applied to the unit i, extended multiplicatively.
int i_supplement(const QuadInt& b) {
    int n8 = small_mod(norm(b), 8);  // odd norm: 1 or 5
    return ((n8 - 1) / 4) % 2;
}

// ((1+i)/b)_2 = (-1)^((u+v-1)/4) for primary b = u+vi (v even, u+v == 1
// mod 4, so the exponent is integral).  Verified wholesale against
// euler_symbol (see tests).
int lambda_supplement_gaussian(const QuadInt& b) {
    int t = small_mod(b.x + b.y - 1, 8);  // 0 or 4
    return (t / 4) % 2;
}

// omega-exponent of each Eisenstein unit 1,-1,w,-w,w^2,-w^2 as listed by
// units(); i-exponent of each Gaussian unit 1,-1,i,-i.
int unit_exponent(const QuadInt& u) {
    if (u.ring == Ring::Eisenstein) {
        if (u.y == 0) return 0;           // +-1
        if (u.x == 0) return 1;           // +-w
        return 2;                         // +-w^2
    }
    if (u.y == 0) return (u.x == 1) ? 0 : 2;  // 1, -1 = i^2
    return (u.y == 1) ? 1 : 3;                // i, -i = i^3
}

}  // namespace

std::complex<double> SymbolValue::value() const {
    if (!exponent) return {0.0, 0.0};
    if (kind == SymbolKind::Quadratic) return {*exponent == 0 ? 1.0 : -1.0, 0.0};
    return std::polar(1.0, 2.0 * kPi * (*exponent) / 3.0);
}

std::string SymbolValue::str() const {
    if (!exponent) return "not-coprime";
    if (kind == SymbolKind::Quadratic) return *exponent == 0 ? "1" : "-1";
    switch (*exponent) {
        case 0: return "1";
        case 1: return "w";
        default: return "w^2";
    }
}

SymbolValue SymbolValue::operator*(const SymbolValue& o) const {
    if (kind != o.kind) throw std::invalid_argument("mixing symbol kinds");
    if (!exponent || !o.exponent) return not_coprime(kind);
    int e = *exponent + *o.exponent;
    return kind == SymbolKind::Cubic ? cubic(e) : quadratic(e);
}

SymbolValue SymbolValue::inverse() const {
    if (!exponent) return *this;
    int e = -*exponent;
    return kind == SymbolKind::Cubic ? cubic(e) : quadratic(e);
}

SymbolValue cubic_symbol(const QuadInt& a0, const QuadInt& b0) {
    if (a0.ring != Ring::Eisenstein || b0.ring != Ring::Eisenstein)
        throw std::invalid_argument("cubic symbol lives over Z[w]");
    if (b0.is_zero()) throw std::invalid_argument("cubic symbol: b = 0");
    if (!is_primary(b0)) throw std::invalid_argument("cubic symbol: b not primary");

    const QuadInt lam = ramified_prime(Ring::Eisenstein);
    QuadInt a = a0, b = b0;
    int exp = 0;
    while (true) {
        a = mod(a, b);
        if (a.is_zero())
            return is_unit(b) ? SymbolValue::cubic(exp) : SymbolValue::not_coprime(SymbolKind::Cubic);
        int t = 0;
        while (divides(lam, a)) { a = exact_div(a, lam); ++t; }
        QuadInt a1;
        int j = 0;  // omega-exponent of the unit split off from a
        for (const auto& v : units(Ring::Eisenstein)) {
            QuadInt cand = v * a;
            if (is_primary(cand)) {
                a1 = cand;
                j = (3 - unit_exponent(v)) % 3;
                break;
            }
        }
        exp += t * lambda_supplement_eisenstein(b) + j * omega_supplement(b);
        if (is_unit(a1)) return SymbolValue::cubic(exp);
        // Cubic reciprocity for primary pairs: (a1/b) = (b/a1).
        QuadInt next_a = b;
        b = a1;
        a = next_a;
    }
}

SymbolValue quadratic_symbol(const QuadInt& a0, const QuadInt& b0) {
    if (a0.ring != Ring::Gaussian || b0.ring != Ring::Gaussian)
        throw std::invalid_argument("quadratic symbol lives over Z[i]");
    if (b0.is_zero()) throw std::invalid_argument("quadratic symbol: b = 0");
    if (!is_coprime_to_ramified(b0)) throw std::invalid_argument("quadratic symbol: b even");

    const QuadInt lam = ramified_prime(Ring::Gaussian);
    QuadInt a = a0, b = primary_associate(b0);  // value only depends on (b)
    int exp = 0;
    while (true) {
        a = mod(a, b);
        if (a.is_zero())
            return is_unit(b) ? SymbolValue::quadratic(exp)
                              : SymbolValue::not_coprime(SymbolKind::Quadratic);
        int t = 0;
        while (divides(lam, a)) { a = exact_div(a, lam); ++t; }
        QuadInt a1;
        int j = 0;  // i-exponent of the unit split off from a
        for (const auto& v : units(Ring::Gaussian)) {
            QuadInt cand = v * a;
            if (is_primary(cand)) {
                a1 = cand;
                j = (4 - unit_exponent(v)) % 4;
                break;
            }
        }
        exp += t * lambda_supplement_gaussian(b) + j * i_supplement(b);
        if (is_unit(a1)) return SymbolValue::quadratic(exp);
        // Quadratic reciprocity for primary pairs: (a1/b) = (b/a1).
        QuadInt next_a = b;
        b = a1;
        a = next_a;
    }
}

QuadInt pow_mod(const QuadInt& a, const BigInt& e, const QuadInt& m) {
    if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
    QuadInt base = mod(a, m);
    QuadInt acc = mod(from_int(1, a.ring), m);
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = mod(acc * base, m);
        base = mod(base * base, m);
        k >>= 1;
    }
    return acc;
}

SymbolValue euler_symbol(const QuadInt& a, const QuadInt& p, int order) {
    if (order != 2 && order != 3) throw std::invalid_argument("order must be 2 or 3");
    SymbolKind kind = order == 3 ? SymbolKind::Cubic : SymbolKind::Quadratic;
    Ring expected = order == 3 ? Ring::Eisenstein : Ring::Gaussian;
    if (p.ring != expected || a.ring != expected)
        throw std::invalid_argument("euler_symbol: order does not match ring");
    if (!is_prime(p)) throw std::invalid_argument("euler_symbol: p not prime");
    BigInt n = norm(p);
    if ((n - 1) % order != 0)
        throw std::invalid_argument("euler_symbol: N(p)-1 not divisible by order");
    if (divides(p, a)) return SymbolValue::not_coprime(kind);

    QuadInt r = pow_mod(a, (n - 1) / order, p);
    for (int k = 0; k < order; ++k) {
        QuadInt root = from_int(1, p.ring);
        if (order == 3) {
            for (int t = 0; t < k; ++t) root = root * omega();
        } else if (k == 1) {
            root = from_int(-1, p.ring);
        }
        if (congruent(r, root, p))
            return order == 3 ? SymbolValue::cubic(k) : SymbolValue::quadratic(k);
    }
    throw std::logic_error("euler_symbol: residue is not a root of unity");
}

}  // namespace cubictwist
