#include "atomlaser/bessel.hpp"

#include <cmath>

#include "atomlaser/errors.hpp"
#include "dd.hpp"

// Same two-regime scheme as the Airy kernel: Maclaurin series (double-double
// in the cancellation band 6..17) and the Hankel expansion with phase
// functions beyond, where the optimal truncation error e^{-2x} is below 1e-14.

namespace atomlaser {

namespace {

using detail::dd;
using detail::dd_add;
using detail::dd_div;
using detail::dd_from;
using detail::dd_mul;
using detail::dd_sub;
using detail::dd_value;
using detail::two_prod;

constexpr dd kTwoPi{6.283185307179586, 2.4492935982947064e-16};
constexpr dd kPiOver4{0.7853981633974483, 3.061616997868383e-17};
constexpr double kSqrt2OverPi = 0.79788456080286541; // sqrt(2/pi)

double series_plain(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= -q / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-18) break;
    }
    return sum;
}

double series_dd(double x) {
    const dd q = dd_mul(two_prod(x, x), 0.25);
    dd term = dd_from(1.0);
    dd sum = term;
    for (int k = 1; k < 80; ++k) {
        term = dd_div(dd_mul(term, q), -static_cast<double>(k) * k);
        sum = dd_add(sum, term);
        if (std::abs(term.hi) < 1e-34) break;
    }
    return dd_value(sum);
}

double hankel(double x) {
    // J0 = sqrt(2/(pi x)) [P cos(x - pi/4) - Q sin(x - pi/4)],
    // a_k = a_{k-1} * ( -(2k-1)^2 ) / (8k), P takes even k, Q odd k.
    double p = 1.0, qq = 0.0;
    double a = 1.0, xk = 1.0, tau_prev = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double m = 2.0 * k - 1.0;
        a *= -(m * m) / (8.0 * k);
        xk *= x;
        const double tau = a / xk;
        if (std::abs(tau) >= tau_prev) break;
        tau_prev = std::abs(tau);
        const double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 1)
            qq += sgn * tau;
        else
            p += sgn * tau;
        if (std::abs(tau) < 1e-19) break;
    }
    // omega = x - pi/4 reduced mod 2 pi in double-double
    dd omega = dd_sub(dd_from(x), kPiOver4);
    const double n = std::nearbyint(omega.hi / kTwoPi.hi);
    omega = dd_sub(omega, dd_mul(kTwoPi, n));
    const double s = std::sin(omega.hi) + omega.lo * std::cos(omega.hi);
    const double c = std::cos(omega.hi) - omega.lo * std::sin(omega.hi);
    return kSqrt2OverPi / std::sqrt(x) * (p * c - qq * s);
}

} // namespace

double bessel_j0(double x) {
    if (!std::isfinite(x)) throw DomainError("bessel_j0: non-finite argument");
    const double ax = std::abs(x);
    if (ax <= 6.0) return series_plain(ax);
    if (ax <= 17.0) return series_dd(ax);
    return hankel(ax);
}

} // namespace atomlaser
