#pragma once

#include <complex>

#include "atomlaser/scaled_real.hpp"

namespace atomlaser {

/// All four real-argument Airy quantities at one point.
struct AiryAll {
    ScaledReal ai, ai_prime, bi, bip;
};

/// Ai(x) in scaled representation.  Relative accuracy ~1e-13 over the real
/// line (measured against the oscillatory envelope for x << 0); no overflow
/// or underflow for |x| <= 500.  Throws DomainError on non-finite input.
ScaledReal airy_ai(double x);
ScaledReal airy_ai_prime(double x);
ScaledReal airy_bi(double x);
ScaledReal airy_bi_prime(double x);

/// Ai and Bi together (shares the series/asymptotic machinery; this is the
/// hot path of the outgoing-wave kernel Bi + i Ai).
void airy_ai_bi(double x, ScaledReal& ai, ScaledReal& bi);

/// All four functions; used by Wronskian checks and the Green function.
AiryAll airy_all(double x);

/// Complex outgoing-wave combination Ci(x) = Bi(x) + i Ai(x).
/// Throws OverflowError once the unscaled Bi leaves the double range
/// (x ~ 678); use airy_ai_bi for the scaled form.
std::complex<double> airy_ci(double x);

/// Asymptotic modulus pi^{-1/2} |x|^{-1/4} of the oscillatory regime,
/// clamped near zero; upper bound for |Ai|, |Bi| at x <= 0 (with ~5% slack
/// close to the turning point).
double airy_envelope(double x);

/// Decay bound Ai(t) < exp(-(2/3) t^{3/2}) for t > 0 (loose but analytic);
/// drives the transverse-momentum tail truncation.
double airy_ai_decay_bound(double t);

} // namespace atomlaser
