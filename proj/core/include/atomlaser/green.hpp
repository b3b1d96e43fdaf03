#pragma once

#include <complex>

#include "atomlaser/scaled_real.hpp"

namespace atomlaser {

/// Energy-domain Green function of the 1D free-fall problem in frame units
/// (lengths in l0, energies in Mg l0); the returned number is G * Mg l0^2,
/// i.e. the value in units 1/(Mg l0 * l0):
///
///   G(y, y'; E) = -pi * Ai(max(y,y') - E) * Ci(min(y,y') - E)
///
/// with Ci = Bi + i Ai.  Decays exponentially above the source, outgoing
/// below it; continuous at y = y' with d/dy jump of 1 in these units
/// (equal to 2 M l0 / hbar^2 once dimensions are restored).
std::complex<double> green_1d(double y_bar, double yp_bar, double e_bar);

/// Same evaluation split into scaled real/imaginary parts, for deeply
/// classically-forbidden energies where the plain product underflows.
void green_1d_scaled(double y_bar, double yp_bar, double e_bar, ScaledReal& re,
                     ScaledReal& im);

} // namespace atomlaser
