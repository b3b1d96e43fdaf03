#include "atomlaser/airy.hpp"

#include <cmath>

#include "atomlaser/errors.hpp"
#include "dd.hpp"

// Two-regime evaluation: Maclaurin series about 0, Hankel-type asymptotic
// expansions with explicit phase functions beyond |x| = 9.  The series is
// summed in double-double between |x| = 3.5 and 9 where cancellation eats
// plain doubles (the terms peak near exp(0.8 zeta) while the sum stays O(1)).
// The asymptotic side is good to ~e^{-2 zeta} ~ 2e-16 at the seam.

namespace atomlaser {

namespace {

using detail::dd;
using detail::dd_add;
using detail::dd_div;
using detail::dd_from;
using detail::dd_mul;
using detail::dd_sub;
using detail::dd_value;
using detail::quick_two_sum;
using detail::two_prod;

constexpr double kPlainSeriesMax = 3.5;
constexpr double kSeriesMax = 9.0;

// Ai(0), Ai'(0), Bi(0), Bi'(0) as double-double pairs.
constexpr dd kAi0{0.3550280538878172, 2.05233632436212e-17};
constexpr dd kAip0{-0.2588194037928068, 2.522243111610832e-17};
constexpr dd kBi0{0.6149266274460007, 5.0899207794891416e-17};
constexpr dd kBip0{0.4482883573538264, -2.5363237774417305e-17};

constexpr dd kTwoPi{6.283185307179586, 2.4492935982947064e-16};
constexpr dd kPiOver4{0.7853981633974483, 3.061616997868383e-17};
constexpr dd kTwoThirds{0.6666666666666666, 3.700743415417188e-17};
constexpr double kInvSqrtPi = 0.5641895835477563;
constexpr double kInv2SqrtPi = 0.28209479177387814;

enum : unsigned { kWantAi = 1, kWantAip = 2, kWantBi = 4, kWantBip = 8 };

struct SeriesSums {
    dd y1{}, y2{}, y1p{}, y2p{};
};

// The two power-series solutions of y'' = x y and their derivatives:
//   y1 = sum c_k x^{3k},    c_k = c_{k-1} / ((3k-1)(3k))
//   y2 = sum d_k x^{3k+1},  d_k = d_{k-1} / ((3k)(3k+1))
SeriesSums series_sums_dd(double x, bool want_primes) {
    SeriesSums s;
    const dd x2 = two_prod(x, x);
    const dd x3 = dd_mul(x2, x);
    dd t1 = dd_from(1.0);
    dd t2 = dd_from(x);
    s.y1 = t1;
    s.y2 = t2;
    dd t1p{};     // term of y1' = sum c_k (3k) x^{3k-1}, starts at k=1
    dd t2p = dd_from(1.0); // term of y2' = sum d_k (3k+1) x^{3k}
    if (want_primes) s.y2p = t2p;
    const double scale = std::abs(s.y1.hi) + std::abs(s.y2.hi) + 1.0;
    for (int k = 1; k < 120; ++k) {
        const double r1 = static_cast<double>((3 * k - 1) * (3 * k));
        const double r2 = static_cast<double>((3 * k) * (3 * k + 1));
        t1 = dd_div(dd_mul(t1, x3), r1);
        t2 = dd_div(dd_mul(t2, x3), r2);
        s.y1 = dd_add(s.y1, t1);
        s.y2 = dd_add(s.y2, t2);
        if (want_primes) {
            if (k == 1) {
                t1p = dd_mul(x2, 0.5); // c_1 * 3 * x^2 = x^2/2
            } else {
                t1p = dd_div(dd_div(dd_mul(dd_mul(t1p, x3), static_cast<double>(k)), r1),
                             static_cast<double>(k - 1));
            }
            t2p = dd_div(dd_mul(t2p, x3), static_cast<double>((3 * k) * (3 * k - 2)));
            s.y1p = dd_add(s.y1p, t1p);
            s.y2p = dd_add(s.y2p, t2p);
        }
        if (std::abs(t1.hi) < 1e-35 * scale && std::abs(t2.hi) < 1e-35 * scale) break;
    }
    return s;
}

SeriesSums series_sums_plain(double x, bool want_primes) {
    SeriesSums s;
    const double x2 = x * x;
    const double x3 = x2 * x;
    double t1 = 1.0, t2 = x, t1p = 0.0, t2p = 1.0;
    double y1 = t1, y2 = t2, y1p = 0.0, y2p = t2p;
    for (int k = 1; k < 60; ++k) {
        const double r1 = static_cast<double>((3 * k - 1) * (3 * k));
        const double r2 = static_cast<double>((3 * k) * (3 * k + 1));
        t1 *= x3 / r1;
        t2 *= x3 / r2;
        y1 += t1;
        y2 += t2;
        if (want_primes) {
            if (k == 1) {
                t1p = 0.5 * x2;
            } else {
                t1p *= x3 * static_cast<double>(k) /
                       (r1 * static_cast<double>(k - 1));
            }
            t2p *= x3 / static_cast<double>((3 * k) * (3 * k - 2));
            y1p += t1p;
            y2p += t2p;
        }
        if (std::abs(t1) < 1e-18 && std::abs(t2) < 1e-18) break;
    }
    s.y1 = dd_from(y1);
    s.y2 = dd_from(y2);
    s.y1p = dd_from(y1p);
    s.y2p = dd_from(y2p);
    return s;
}

void fill_from_series(const SeriesSums& s, unsigned want, AiryAll& out) {
    if (want & kWantAi)
        out.ai = ScaledReal::from_value(
            dd_value(dd_add(dd_mul(kAi0, s.y1), dd_mul(kAip0, s.y2))));
    if (want & kWantAip)
        out.ai_prime = ScaledReal::from_value(
            dd_value(dd_add(dd_mul(kAi0, s.y1p), dd_mul(kAip0, s.y2p))));
    if (want & kWantBi)
        out.bi = ScaledReal::from_value(
            dd_value(dd_add(dd_mul(kBi0, s.y1), dd_mul(kBip0, s.y2))));
    if (want & kWantBip)
        out.bip = ScaledReal::from_value(
            dd_value(dd_add(dd_mul(kBi0, s.y1p), dd_mul(kBip0, s.y2p))));
}

// zeta = (2/3) |x|^{3/2} as a double-double (the oscillation phase must keep
// its low bits: at |x| = 50 the phase is ~235 rad and 1 ulp of it already
// moves Ai near a zero by ~1e-14).
dd zeta_dd(double ax) {
    const double r = std::sqrt(ax);
    const dd r2 = two_prod(r, r);
    // Newton correction: sqrt(ax) = r + (ax - r^2)/(2r)
    const double corr = ((ax - r2.hi) - r2.lo) / (2.0 * r);
    const dd root{r, corr};
    const dd x32 = dd_mul(root, ax); // exact-ish ax^{3/2}
    return dd_mul(x32, kTwoThirds);
}

struct PhasePair {
    double sin_v, cos_v;
};

// sin/cos of zeta + pi/4 with double-double argument reduction mod 2 pi.
PhasePair reduced_phase(const dd& zeta) {
    dd theta = dd_add(zeta, kPiOver4);
    const double n = std::nearbyint(theta.hi / kTwoPi.hi);
    theta = dd_sub(theta, dd_mul(kTwoPi, n));
    const double s = std::sin(theta.hi);
    const double c = std::cos(theta.hi);
    return {s + theta.lo * c, c - theta.lo * s};
}

// Poincare coefficients u_k (and v_k for the derivatives), DLMF 9.7.2.
inline double next_u(double u_prev, int k) {
    return u_prev * static_cast<double>((6 * k - 5)) * (6 * k - 3) * (6 * k - 1) /
           (216.0 * k * (2 * k - 1));
}
inline double v_from_u(double u_k, int k) {
    return u_k * static_cast<double>(6 * k + 1) / static_cast<double>(1 - 6 * k);
}

void asymptotic_positive(double x, unsigned want, AiryAll& out) {
    const dd zeta = zeta_dd(x);
    const double z = dd_value(zeta);
    const double q = std::sqrt(std::sqrt(x));
    double sa = 1.0, sb = 1.0, sc = 1.0, sd = 1.0;
    double u = 1.0, tau_prev = 1.0, zk = 1.0;
    for (int k = 1; k < 80; ++k) {
        u = next_u(u, k);
        zk *= z;
        const double tau = u / zk;
        if (std::abs(tau) >= tau_prev) break; // divergent tail reached
        tau_prev = std::abs(tau);
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        const double tv = v_from_u(u, k) / zk;
        sa += sgn * tau;
        sc += tau;
        sb += sgn * tv;
        sd += tv;
        if (std::abs(tau) < 1e-18) break;
    }
    if (want & kWantAi) out.ai = ScaledReal::from_parts(kInv2SqrtPi / q * sa, -z);
    if (want & kWantAip) out.ai_prime = ScaledReal::from_parts(-kInv2SqrtPi * q * sb, -z);
    if (want & kWantBi) out.bi = ScaledReal::from_parts(2.0 * kInv2SqrtPi / q * sc, z);
    if (want & kWantBip) out.bip = ScaledReal::from_parts(2.0 * kInv2SqrtPi * q * sd, z);
}

void asymptotic_negative(double x, unsigned want, AiryAll& out) {
    const double t = -x;
    const dd zeta = zeta_dd(t);
    const double z = dd_value(zeta);
    const PhasePair ph = reduced_phase(zeta);
    const double q = std::sqrt(std::sqrt(t));
    // P/Q splits: even-k u's modulate the carrier, odd-k u's its quadrature.
    double pa = 1.0, qa = 0.0, pb = 1.0, qb = 0.0;
    double u = 1.0, zk = 1.0, tau_prev = 1.0;
    for (int k = 1; k < 80; ++k) {
        u = next_u(u, k);
        zk *= z;
        const double tau = u / zk;
        if (std::abs(tau) >= tau_prev) break;
        tau_prev = std::abs(tau);
        const double tv = v_from_u(u, k) / zk;
        const double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 1) {
            qa += sgn * tau;
            qb += sgn * tv;
        } else {
            pa += sgn * tau;
            pb += sgn * tv;
        }
        if (std::abs(tau) < 1e-18) break;
    }
    if (want & kWantAi)
        out.ai = ScaledReal::from_value(kInvSqrtPi / q * (ph.sin_v * pa - ph.cos_v * qa));
    if (want & kWantBi)
        out.bi = ScaledReal::from_value(kInvSqrtPi / q * (ph.cos_v * pa + ph.sin_v * qa));
    if (want & kWantAip)
        out.ai_prime =
            ScaledReal::from_value(-kInvSqrtPi * q * (ph.cos_v * pb + ph.sin_v * qb));
    if (want & kWantBip)
        out.bip = ScaledReal::from_value(kInvSqrtPi * q * (ph.sin_v * pb - ph.cos_v * qb));
}

AiryAll airy_core(double x, unsigned want) {
    if (!std::isfinite(x)) throw DomainError("airy: non-finite argument");
    AiryAll out;
    const double ax = std::abs(x);
    if (ax <= kPlainSeriesMax) {
        fill_from_series(series_sums_plain(x, want & (kWantAip | kWantBip)), want, out);
    } else if (ax <= kSeriesMax) {
        fill_from_series(series_sums_dd(x, want & (kWantAip | kWantBip)), want, out);
    } else if (x > 0) {
        asymptotic_positive(x, want, out);
    } else {
        asymptotic_negative(x, want, out);
    }
    return out;
}

} // namespace

ScaledReal airy_ai(double x) { return airy_core(x, kWantAi).ai; }
ScaledReal airy_ai_prime(double x) { return airy_core(x, kWantAip).ai_prime; }
ScaledReal airy_bi(double x) { return airy_core(x, kWantBi).bi; }
ScaledReal airy_bi_prime(double x) { return airy_core(x, kWantBip).bip; }

void airy_ai_bi(double x, ScaledReal& ai, ScaledReal& bi) {
    const AiryAll a = airy_core(x, kWantAi | kWantBi);
    ai = a.ai;
    bi = a.bi;
}

AiryAll airy_all(double x) {
    return airy_core(x, kWantAi | kWantAip | kWantBi | kWantBip);
}

std::complex<double> airy_ci(double x) {
    ScaledReal ai, bi;
    airy_ai_bi(x, ai, bi);
    return {bi.value_checked(), ai.value_checked()};
}

double airy_envelope(double x) {
    const double ax = std::max(std::abs(x), 1.0);
    return kInvSqrtPi / std::sqrt(std::sqrt(ax)) * 1.05;
}

double airy_ai_decay_bound(double t) {
    if (t <= 0.0) return 1.0;
    return std::exp(-2.0 / 3.0 * t * std::sqrt(t));
}

} // namespace atomlaser
