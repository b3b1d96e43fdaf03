#pragma once

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Internal to the special-function kernels; ~31 significant digits, enough
// to push the Maclaurin series through its cancellation band and to reduce
// large oscillation phases without losing the low bits.

#include <cmath>

namespace atomlaser::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b) { // requires |a| >= |b|
    const double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_add(const dd& a, const dd& b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_add(const dd& a, double b) {
    dd s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_sub(const dd& a, const dd& b) { return dd_add(a, dd{-b.hi, -b.lo}); }

inline dd dd_mul(const dd& a, const dd& b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul(const dd& a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(const dd& a, double b) {
    const double q1 = a.hi / b;
    dd p = two_prod(q1, b);
    const double r = ((a.hi - p.hi) - p.lo) + a.lo;
    const double q2 = r / b;
    return quick_two_sum(q1, q2);
}

inline dd dd_from(double v) { return {v, 0.0}; }

inline double dd_value(const dd& a) { return a.hi + a.lo; }

} // namespace atomlaser::detail
