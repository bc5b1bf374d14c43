#include "cubictwist/lfunctions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cubictwist {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;

// Sign-classification thresholds for the functional-equation consistency
// test (relative to the absolute-series scale).
constexpr double kSignTol = 3e-5;
constexpr double kSignRatio = 20.0;
}  // namespace

bool is_cubefree(long long n) {
    if (n == 0) return false;
    std::uint64_t m = static_cast<std::uint64_t>(n < 0 ? -n : n);
    for (auto [p, e] : factor_u64(m))
        if (e >= 3) return false;
    return true;
}

TwistCurve::TwistCurve(long long D_) : D(D_) {
    if (!is_cubefree(D)) throw std::invalid_argument("D must be nonzero and cube-free");
    weierstrass_c = BigInt(-432) * BigInt(D) * BigInt(D);
    torsion_trivial = (D >= 3 || D <= -3);
}

// ---------------------------------------------------------------------------
// int64 Eisenstein arithmetic for the coefficient hot path.
// ---------------------------------------------------------------------------
namespace detail {

namespace {
struct EZ {
    long long x, y;
};
inline EZ emul(EZ a, EZ b) {
    long long yy = a.y * b.y;
    return {a.x * b.x - yy, a.x * b.y + a.y * b.x - yy};
}
inline long long enorm(EZ a) { return a.x * a.x - a.x * a.y + a.y * a.y; }
inline EZ econj(EZ a) { return {a.x - a.y, -a.y}; }
inline long long nearest(long long n, long long d) {  // d > 0
    long long t = 2 * n + d;
    return t >= 0 ? t / (2 * d) : -((-t + 2 * d - 1) / (2 * d));
}
inline EZ emod(EZ z, EZ m) {
    EZ num = emul(z, econj(m));
    long long n = enorm(m);
    EZ q{nearest(num.x, n), nearest(num.y, n)};
    EZ qm = emul(q, m);
    return {z.x - qm.x, z.y - qm.y};
}
inline bool eprimary(EZ a) { return ((a.x - 1) % 3 + 3) % 3 == 0 && a.y % 3 == 0; }
constexpr EZ kUnits[6] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}, {1, 1}};
constexpr int kUnitOmegaExp[6] = {0, 0, 1, 1, 2, 2};
}  // namespace

int cubic_symbol_i64(long long ax, long long ay, long long bx, long long by) {
    EZ a{ax, ay}, b{bx, by};
    int exp = 0;
    while (true) {
        a = emod(a, b);
        if (a.x == 0 && a.y == 0) return enorm(b) == 1 ? exp % 3 : -1;
        int t = 0;
        while ((a.x + a.y) % 3 == 0) {  // divisible by 1-w
            a = {(2 * a.x - a.y) / 3, (a.x + a.y) / 3};
            ++t;
        }
        EZ a1{0, 0};
        int j = 0;
        for (int u = 0; u < 6; ++u) {
            EZ cand = emul(kUnits[u], a);
            if (eprimary(cand)) {
                a1 = cand;
                j = (3 - kUnitOmegaExp[u]) % 3;
                break;
            }
        }
        int m_b = static_cast<int>(((b.x % 9) + 9) % 9 - 1) / 3;     // (1-w / b)
        long long n9 = ((enorm(b) % 9) + 9) % 9;
        int t_om = static_cast<int>((n9 - 1) / 3);                   // (w / b)
        exp = (exp + t * m_b + j * t_om) % 3;
        if (enorm(a1) == 1) return exp;
        EZ nb = a1;
        a = b;
        b = nb;
    }
}

std::pair<long long, long long> primary_prime_above(long long p) {
    for (long long a = 1; 3 * a * a <= 4 * p; ++a) {
        long long disc = 4 * p - 3 * a * a;
        long long s = static_cast<long long>(std::sqrt(static_cast<double>(disc)));
        while (s * s < disc) ++s;
        while (s > 0 && s * s > disc) --s;
        if (s * s != disc || (a + s) % 2 != 0) continue;
        EZ cand{a, (a + s) / 2};
        if (enorm(cand) != p) cand = {a, (a - s) / 2};
        if (enorm(cand) != p) continue;
        for (int u = 0; u < 6; ++u) {
            EZ c = emul(kUnits[u], cand);
            if (eprimary(c)) return {c.x, c.y};
        }
    }
    throw std::logic_error("no prime of norm p found; p not split?");
}

}  // namespace detail

namespace {

// a_p at a good split prime from the character: a_p = Tr((D/pi)_3 conj(pi)).
long long split_ap(long long D, long long px, long long py) {
    int k = detail::cubic_symbol_i64(D, 0, px, py);
    switch (k) {
        case 0: return 2 * px - py;
        case 1: return 2 * py - px;
        case 2: return -px - py;
        default: return 0;  // k = -1 cannot happen for p coprime to 3D
    }
}

// --- shared prime tables (smallest prime factor + split-prime generators) --
struct PrimeTables {
    std::size_t limit = 0;
    std::vector<std::uint32_t> spf;
    std::vector<std::uint32_t> primes;
    // split_pi[i] is the primary prime above primes[i], or (0,0) if inert/3.
    std::vector<std::pair<std::int32_t, std::int32_t>> split_pi;
};

std::shared_ptr<const PrimeTables> build_tables(std::size_t limit) {
    auto t = std::make_shared<PrimeTables>();
    t->limit = limit;
    t->spf.assign(limit + 1, 0);
    for (std::size_t i = 2; i <= limit; ++i) {
        if (t->spf[i] == 0) {
            for (std::size_t j = i; j <= limit; j += i)
                if (t->spf[j] == 0) t->spf[j] = static_cast<std::uint32_t>(i);
            t->primes.push_back(static_cast<std::uint32_t>(i));
        }
    }
    t->split_pi.resize(t->primes.size(), {0, 0});
    for (std::size_t i = 0; i < t->primes.size(); ++i) {
        if (t->primes[i] % 3 == 1) {
            auto [x, y] = detail::primary_prime_above(t->primes[i]);
            t->split_pi[i] = {static_cast<std::int32_t>(x), static_cast<std::int32_t>(y)};
        }
    }
    return t;
}

std::shared_ptr<const PrimeTables> tables_for(std::size_t limit) {
    static std::mutex mu;
    static std::shared_ptr<const PrimeTables> current;
    std::lock_guard<std::mutex> lk(mu);
    if (!current || current->limit < limit) {
        std::size_t want = std::max<std::size_t>(limit + limit / 4, 1 << 16);
        current = build_tables(want);
    }
    return current;
}

}  // namespace

void hecke_coefficient_table(long long D, std::size_t limit, std::vector<double>& a) {
    if (!is_cubefree(D)) throw std::invalid_argument("D must be nonzero and cube-free");
    auto tables = tables_for(limit);
    a.assign(limit + 1, 0.0);
    if (limit >= 1) a[1] = 1.0;
    long long absD = D < 0 ? -D : D;

    for (std::size_t i = 0; i < tables->primes.size(); ++i) {
        std::uint64_t p = tables->primes[i];
        if (p > limit) break;
        bool bad = (p == 3) || (absD % p == 0);
        double ap = 0.0;
        if (!bad && p % 3 == 1) {
            auto [px, py] = tables->split_pi[i];
            ap = static_cast<double>(split_ap(D, px, py));
        }
        if (p <= limit) a[p] = bad ? 0.0 : ap;
        // prime powers
        double prev2 = 1.0, prev1 = bad ? 0.0 : ap;
        std::uint64_t pk = p;
        while (pk <= limit / p) {
            std::uint64_t pk1 = pk * p;
            double next = bad ? 0.0 : ap * prev1 - static_cast<double>(p) * prev2;
            a[pk1] = next;
            prev2 = prev1;
            prev1 = next;
            pk = pk1;
        }
    }
    // multiplicative fill: n = p^e * m with p = spf(n), gcd(p, m) = 1
    for (std::size_t n = 2; n <= limit; ++n) {
        std::uint32_t p = tables->spf[n];
        std::size_t pe = p, m = n / p;
        while (m % p == 0) {
            m /= p;
            pe *= p;
        }
        if (m != 1) a[n] = a[pe] * a[m];
    }
}

// ---------------------------------------------------------------------------
// spec-level one-off coefficient queries
// ---------------------------------------------------------------------------

long long hecke_ap(long long D, long long p) {
    if (!is_cubefree(D)) throw std::invalid_argument("D must be nonzero and cube-free");
    if (p < 2 || !is_rational_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("p must be prime");
    long long absD = D < 0 ? -D : D;
    if (p == 3 || absD % p == 0) return 0;
    if (p % 3 == 2) return 0;
    auto [px, py] = detail::primary_prime_above(p);
    return split_ap(D, px, py);
}

HeckeCoefficient hecke_coefficient(long long D, long long n) {
    if (!is_cubefree(D)) throw std::invalid_argument("D must be nonzero and cube-free");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    long long absD = D < 0 ? -D : D;
    long long out = 1;
    for (auto [p, e] : factor_u64(static_cast<std::uint64_t>(n))) {
        long long pp = static_cast<long long>(p);
        bool bad = (pp == 3) || (absD % pp == 0);
        if (bad) return {n, 0};
        long long ap = hecke_ap(D, pp);
        long long prev2 = 1, prev1 = ap;
        for (int k = 2; k <= e; ++k) {
            long long next = ap * prev1 - pp * prev2;
            prev2 = prev1;
            prev1 = next;
        }
        out *= prev1;
    }
    return {n, out};
}

long long pointcount_ap(long long D, long long p) {
    if (p < 2 || !is_rational_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("p must be prime");
    long long absD = D < 0 ? -D : D;
    if (p == 2 || p == 3 || absD % p == 0)
        throw std::invalid_argument("pointcount_ap requires p coprime to 6D");
    // quadratic-residue table
    std::vector<std::uint8_t> qr(p, 0);
    for (long long t = 1; t <= p / 2; ++t) qr[(t * t) % p] = 1;
    long long m = absD % p;
    long long c = (432 % p) * m % p * m % p;
    c = (p - c) % p;  // -432 D^2 mod p
    long long sum = 0;
    for (long long x = 0; x < p; ++x) {
        long long v = (x * x % p * x + c) % p;
        if (v == 0) continue;
        sum += qr[v] ? 1 : -1;
    }
    return -sum;
}

// ---------------------------------------------------------------------------
// smoothed central value
// ---------------------------------------------------------------------------
namespace {

struct SeriesPoint {
    double x;        // evaluation point
    double full;     // f(x) truncated at M(x)
    double half;     // same sum truncated at M(x)/2
    std::size_t M;
};

// f(x) = sum_{n<=M} (a_n / n) exp(-2 pi n x / sqN) for the five x values.
// abs_scale gets sum |a_n|/n exp(.) at x = 1.
void evaluate_series(const std::vector<double>& a, double sqN, double mult,
                     std::array<SeriesPoint, 5>& pts, double& abs_scale) {
    static const double xs[5] = {2.0 / 3.0, 4.0 / 5.0, 1.0, 5.0 / 4.0, 3.0 / 2.0};
    abs_scale = 0.0;
    for (int ix = 0; ix < 5; ++ix) {
        double x = xs[ix];
        std::size_t M = static_cast<std::size_t>(mult * sqN / x);
        M = std::min(M, a.size() - 1);
        std::size_t Mh = M / 2;
        double r = std::exp(-kTwoPi * x / sqN);
        double w = 1.0, acc = 0.0, acc_half = 0.0, acc_abs = 0.0;
        for (std::size_t n = 1; n <= M; ++n) {
            w *= r;
            double bn = a[n] / static_cast<double>(n);
            acc += bn * w;
            if (ix == 2) acc_abs += std::abs(bn) * w;
            if (n == Mh) acc_half = acc;
        }
        pts[ix] = {x, acc, acc_half, M};
        if (ix == 2) abs_scale = acc_abs;
    }
}

struct Defects {
    double even_abs, odd_abs;  // max |f(x)+f(1/x)-2f(1)| resp. |f(x)-f(1/x)|
};

Defects defects_of(const std::array<SeriesPoint, 5>& p) {
    double e1 = std::abs(p[3].full + p[1].full - 2 * p[2].full);
    double e2 = std::abs(p[4].full + p[0].full - 2 * p[2].full);
    double o1 = std::abs(p[3].full - p[1].full);
    double o2 = std::abs(p[4].full - p[0].full);
    return {std::max(e1, e2), std::max(o1, o2)};
}

double tail_bound(double sqN, std::size_t M) {
    // |a_n|/n <= d(n)/sqrt(n) <= 2, summed geometric tail, times (1+eps) <= 2.
    double c = kTwoPi / sqN;
    return 4.0 * std::exp(-c * static_cast<double>(M + 1)) / (1.0 - std::exp(-c));
}

}  // namespace

LValueEstimate l_value(long long D, const LValueOptions& opt) {
    if (!is_cubefree(D)) throw std::invalid_argument("D must be nonzero and cube-free");
    long long D0 = D < 0 ? -D : D;
    while (D0 % 3 == 0) D0 /= 3;
    // Twisting by p and by p^2 ramify identically away from 3, so the
    // conductor base is the squared radical of the prime-to-3 part.
    long long rad = 1;
    for (auto [p, e] : factor_u64(static_cast<std::uint64_t>(D0))) {
        (void)e;
        rad *= static_cast<long long>(p);
    }

    int e_lo = 2, e_hi = 5;
    if (opt.force_conductor_exp != 0) e_lo = e_hi = opt.force_conductor_exp;

    auto sqrt_cond = [&](int e) { return std::pow(3.0, e / 2.0) * static_cast<double>(rad); };

    std::vector<double> coeffs;
    int best_e = e_lo;
    if (e_lo != e_hi) {
        // consistency scan at a cheap truncation; for tiny conductors the
        // short sums separate poorly, so fall back to the full one
        double scan_mult = opt.scan_mult;
        if (scan_mult * sqrt_cond(e_lo) < 60.0) scan_mult = opt.cutoff_mult;
        std::size_t scan_limit =
            static_cast<std::size_t>(scan_mult * sqrt_cond(e_hi) * 1.5) + 2;
        hecke_coefficient_table(D, scan_limit, coeffs);
        double best_defect = 0.0;
        for (int e = e_lo; e <= e_hi; ++e) {
            std::array<SeriesPoint, 5> pts;
            double scale = 0.0;
            evaluate_series(coeffs, sqrt_cond(e), scan_mult, pts, scale);
            Defects d = defects_of(pts);
            double defect = std::min(d.even_abs, d.odd_abs) / (scale + 1e-300);
            if (e == e_lo || defect < best_defect) {
                best_defect = defect;
                best_e = e;
            }
        }
    }

    double sqN = sqrt_cond(best_e);
    std::size_t full_limit = static_cast<std::size_t>(opt.cutoff_mult * sqN * 1.5) + 2;
    if (coeffs.size() < full_limit + 1) hecke_coefficient_table(D, full_limit, coeffs);

    std::array<SeriesPoint, 5> pts;
    double scale = 0.0;
    evaluate_series(coeffs, sqN, opt.cutoff_mult, pts, scale);
    Defects d = defects_of(pts);
    double rel_even = d.even_abs / (scale + 1e-300);
    double rel_odd = d.odd_abs / (scale + 1e-300);

    int sign = 0;
    if (rel_even < kSignTol && rel_even * kSignRatio < rel_odd)
        sign = +1;
    else if (rel_odd < kSignTol && rel_odd * kSignRatio < rel_even)
        sign = -1;

    LValueEstimate est;
    est.D = D;
    est.sign = sign;
    double cond = std::pow(3.0, best_e) * static_cast<double>(rad) * static_cast<double>(rad);
    est.conductor_used = static_cast<long long>(cond + 0.5);
    est.cutoff = opt.cutoff_mult * sqN;
    est.cutoff_secondary = est.cutoff / 2.0;
    double f1 = pts[2].full, f1_half = pts[2].half;
    if (sign == -1) {
        est.value = 0.0;  // (1 + eps) f(1) with eps = -1
        est.value_secondary = 0.0;
    } else {
        est.value = 2.0 * f1;
        est.value_secondary = 2.0 * f1_half;
    }
    est.error_bound = std::abs(est.value - est.value_secondary) + tail_bound(sqN, pts[2].M) +
                      std::min(d.even_abs, d.odd_abs);
    est.vanished = std::abs(est.value) <= opt.vanish_threshold &&
                   std::abs(est.value - est.value_secondary) <= opt.vanish_threshold;
    return est;
}

int root_number(long long D, const LValueOptions& opt) { return l_value(D, opt).sign; }

// ---------------------------------------------------------------------------
// cache
// ---------------------------------------------------------------------------

LValueCache::LValueCache(std::string csv_path) : path_(std::move(csv_path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'D') continue;  // header tolerated
        std::istringstream ss(line);
        std::string tok;
        std::vector<std::string> f;
        while (std::getline(ss, tok, ',')) f.push_back(tok);
        if (f.size() != 6) continue;
        LValueEstimate est;
        est.D = std::stoll(f[0]);
        est.sign = std::stoi(f[1]);
        est.value = std::stod(f[2]);
        est.error_bound = std::stod(f[3]);
        est.conductor_used = std::stoll(f[4]);
        est.cutoff = std::stod(f[5]);
        est.cutoff_secondary = est.cutoff / 2.0;
        est.value_secondary = est.value;
        est.vanished = std::abs(est.value) <= 1e-3;
        Entry e{est.cutoff / std::sqrt(static_cast<double>(est.conductor_used)), est};
        map_[est.D] = e;
    }
}

std::optional<LValueEstimate> LValueCache::get(long long D, double cutoff_mult) const {
    std::shared_lock lk(mu_);
    auto it = map_.find(D);
    if (it == map_.end()) return std::nullopt;
    if (std::abs(it->second.cutoff_mult - cutoff_mult) > 1e-6) return std::nullopt;
    return it->second.est;
}

void LValueCache::put(const LValueEstimate& est, double cutoff_mult) {
    std::unique_lock lk(mu_);
    map_[est.D] = {cutoff_mult, est};
    if (!path_.empty()) {
        std::ofstream out(path_, std::ios::app);
        out.precision(12);
        out << est.D << ',' << est.sign << ',' << est.value << ',' << est.error_bound << ','
            << est.conductor_used << ',' << est.cutoff << '\n';
    }
}

std::size_t LValueCache::size() const {
    std::shared_lock lk(mu_);
    return map_.size();
}

LValueEstimate LValueCache::get_or_compute(long long D, const LValueOptions& opt) {
    if (auto hit = get(D, opt.cutoff_mult)) return *hit;
    LValueEstimate est = l_value(D, opt);
    put(est, opt.cutoff_mult);
    return est;
}

}  // namespace cubictwist
