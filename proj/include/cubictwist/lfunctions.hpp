#pragma once

// L(E_D, s) for the cubic-twist curves x^3 + y^3 = D.
//
// Coefficients come from the Hecke-character sum over primary a in Z[w],
//     sum_{a == 1 (3)} (D/a)_3 * (|a|/a) * N(a)^(-s+1/2),
// grouped by N(a) = n.  The |a|/a twist makes each group contribute
// (D/a)_3 * conj(a), so a_n stays an exact rational integer.  An independent
// oracle counts points on y^2 = x^3 - 432 D^2 over F_p; the two must agree
// at every good prime.
//
// Central values use the smoothed sum f(x) = sum a_n/n exp(-2 pi n x/sqrt(N))
// which satisfies f(x) + eps f(1/x) = L(E_D,1).  Evaluating at x and 1/x
// therefore pins both the conductor (wrong N breaks the identity) and the
// sign eps (even: f(x)+f(1/x) constant; odd: f symmetric).

#include "cubictwist/rings.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace cubictwist {

bool is_cubefree(long long n);

struct TwistCurve {
    long long D;
    BigInt weierstrass_c;   // -432 D^2
    bool torsion_trivial;   // |D| >= 3
    explicit TwistCurve(long long D);  // throws unless D nonzero cube-free
};

struct HeckeCoefficient {
    long long n;
    long long a_n;
};

// a_n assembled multiplicatively from the prime data of the character sum.
HeckeCoefficient hecke_coefficient(long long D, long long n);
long long hecke_ap(long long D, long long p);

// Point-count oracle: a_p = p + 1 - #E(F_p) for y^2 = x^3 - 432 D^2.
// Requires p prime, p not dividing 6D.
long long pointcount_ap(long long D, long long p);

// Fills coeffs[n] = a_n for 1 <= n <= limit (coeffs.size() == limit+1).
// Values are exact integers stored in double.
void hecke_coefficient_table(long long D, std::size_t limit, std::vector<double>& coeffs);

struct LValueOptions {
    double cutoff_mult = 20.0;       // truncation at cutoff_mult * sqrt(N_cond)
    double vanish_threshold = 1e-3;
    int force_conductor_exp = 0;     // 3-exponent e; 0 = choose by consistency scan
    double scan_mult = 4.0;          // cheaper truncation used during the scan
};

struct LValueEstimate {
    long long D = 0;
    double value = 0.0;
    double error_bound = 0.0;
    int sign = 0;                    // +1 / -1 / 0 = undetermined
    long long conductor_used = 0;    // 3^e * rad^2, rad the prime-to-3 radical of |D|
    double cutoff = 0.0;             // main truncation point
    bool vanished = false;
    double value_secondary = 0.0;    // same estimate at half the cutoff
    double cutoff_secondary = 0.0;
};

LValueEstimate l_value(long long D, const LValueOptions& opt = {});

// Empirical functional-equation sign; 0 when the consistency test is
// ambiguous (such curves are excluded from sign-conditioned statistics).
int root_number(long long D, const LValueOptions& opt = {});

// Append-only CSV cache of central values: D,sign,value,error,conductor,cutoff.
class LValueCache {
  public:
    LValueCache() = default;
    explicit LValueCache(std::string csv_path);  // loads existing rows if present

    std::optional<LValueEstimate> get(long long D, double cutoff_mult) const;
    void put(const LValueEstimate& est, double cutoff_mult);
    std::size_t size() const;

    // Cached lookup + compute-on-miss.
    LValueEstimate get_or_compute(long long D, const LValueOptions& opt);

  private:
    struct Entry {
        double cutoff_mult;
        LValueEstimate est;
    };
    mutable std::shared_mutex mu_;
    std::map<long long, Entry> map_;
    std::string path_;
};

namespace detail {
// int64 fast path of the cubic residue symbol, (ax+ay*w / bx+by*w)_3 with
// primary denominator; returns 0..2 or -1 for NotCoprime.  Coordinates must
// stay well under 2^31 so intermediate products fit in int64.
int cubic_symbol_i64(long long ax, long long ay, long long bx, long long by);

// Primary prime above a split rational prime p == 1 (mod 3).
std::pair<long long, long long> primary_prime_above(long long p);
}  // namespace detail

}  // namespace cubictwist
