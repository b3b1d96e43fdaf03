#include "atomlaser/green.hpp"

#include <algorithm>
#include <cmath>

#include "atomlaser/airy.hpp"

namespace atomlaser {

void green_1d_scaled(double y_bar, double yp_bar, double e_bar, ScaledReal& re,
                     ScaledReal& im) {
    const double xi_hi = std::max(y_bar, yp_bar) - e_bar;
    const double xi_lo = std::min(y_bar, yp_bar) - e_bar;
    const ScaledReal ai_hi = airy_ai(xi_hi);
    ScaledReal ai_lo, bi_lo;
    airy_ai_bi(xi_lo, ai_lo, bi_lo);
    // Ai decay at the upper argument compensates Bi growth at the lower one;
    // the pairing stays in scaled space until the very end.
    re = (ai_hi * bi_lo) * -M_PI;
    im = (ai_hi * ai_lo) * -M_PI;
}

std::complex<double> green_1d(double y_bar, double yp_bar, double e_bar) {
    ScaledReal re, im;
    green_1d_scaled(y_bar, yp_bar, e_bar, re, im);
    return {re.value_checked(), im.value_checked()};
}

} // namespace atomlaser
