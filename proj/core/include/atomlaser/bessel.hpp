#pragma once

namespace atomlaser {

/// Bessel function J0(x).  Absolute error <~ 1e-14 for |x| <= 1000.
/// Throws DomainError on non-finite input.
double bessel_j0(double x);

} // namespace atomlaser
