#pragma once

namespace atomlaser {

/// Table of physical constants used throughout the library (SI units).
/// Values follow the 2018/2022 CODATA recommendations.  Tests and the
/// self-test suite read this table instead of re-typing literals, so a
/// deliberately corrupted table makes the consistency checks fail.
struct PhysicalConstants {
    double hbar = 1.054571817e-34;       // reduced Planck constant [J s]
    double bohr_magneton = 9.2740100783e-24; // [J/T]
    double standard_gravity = 9.80665;   // [m/s^2]
    double atomic_mass_unit = 1.66053906892e-27; // [kg]
};

inline const PhysicalConstants& codata() {
    static const PhysicalConstants table{};
    return table;
}

namespace species_data {
// 87Rb: mass 86.909180531 u, triplet scattering length 5.4 nm, F=1 Lande factor -1/2.
inline constexpr double kRb87MassU = 86.909180531;
inline constexpr double kRb87ScatteringLength = 5.4e-9; // [m]
inline constexpr double kRb87LandeGF = -0.5;
} // namespace species_data

} // namespace atomlaser
