#pragma once

#include <cmath>
#include <limits>

#include "atomlaser/errors.hpp"

namespace atomlaser {

/// Real number stored as mantissa * exp(log_scale), for functions whose
/// magnitude leaves the double range (Bi grows like exp((2/3) x^{3/2})).
/// Normalized so that |mantissa| is in [0.1, 10), or exactly 0.
struct ScaledReal {
    double mantissa = 0.0;
    double log_scale = 0.0;

    static ScaledReal from_parts(double m, double ls) {
        ScaledReal s{m, ls};
        s.normalize();
        return s;
    }

    static ScaledReal from_value(double v) { return from_parts(v, 0.0); }

    void normalize() {
        if (mantissa == 0.0) {
            log_scale = 0.0;
            return;
        }
        // Renormalize in powers of e; exact exponent bookkeeping is not
        // required, only that value() round-trips.
        int e = 0;
        double a = std::abs(mantissa);
        if (a >= 10.0 || a < 0.1) {
            e = static_cast<int>(std::floor(std::log10(a)));
            const double p = std::pow(10.0, -e);
            double m = mantissa * p;
            // guard against boundary rounding
            if (std::abs(m) >= 10.0) {
                m *= 0.1;
                ++e;
            } else if (std::abs(m) < 0.1) {
                m *= 10.0;
                --e;
            }
            mantissa = m;
            log_scale += e * 2.302585092994045684; // ln 10
        }
    }

    /// Plain double value; infinities collapse, use value_checked() to trap.
    double value() const { return mantissa * std::exp(log_scale); }

    /// Plain double value, throwing when the result is not representable.
    double value_checked() const {
        if (mantissa == 0.0) return 0.0;
        if (log_scale > 705.0)
            throw OverflowError("scaled value exceeds double range (log_scale " +
                                std::to_string(log_scale) + ")");
        return value();
    }

    bool is_zero() const { return mantissa == 0.0; }
    double sign() const { return mantissa > 0 ? 1.0 : (mantissa < 0 ? -1.0 : 0.0); }

    /// log(|value|); -inf for zero.
    double log_abs() const {
        if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
        return log_scale + std::log(std::abs(mantissa));
    }

    friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
        if (a.mantissa == 0.0 || b.mantissa == 0.0) return {};
        return from_parts(a.mantissa * b.mantissa, a.log_scale + b.log_scale);
    }

    friend ScaledReal operator*(const ScaledReal& a, double c) {
        if (a.mantissa == 0.0 || c == 0.0) return {};
        return from_parts(a.mantissa * c, a.log_scale);
    }
};

} // namespace atomlaser
