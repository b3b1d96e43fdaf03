#pragma once

#include <cmath>
#include <optional>

#include "atomlaser/constants.hpp"
#include "atomlaser/errors.hpp"

namespace atomlaser {

/// Atomic constants of the working species.
struct AtomSpecies {
    double mass = 0;              // [kg]
    double scattering_length = 0; // [m]
    double lande_g_f = -0.5;

    static AtomSpecies rubidium87(const PhysicalConstants& c = codata()) {
        return {species_data::kRb87MassU * c.atomic_mass_unit,
                species_data::kRb87ScatteringLength, species_data::kRb87LandeGF};
    }
};

/// Harmonic trap, offset field and drive parameters.
struct TrapGeometry {
    double omega_x = 0, omega_y = 0, omega_z = 0; // [rad/s]
    double b_offset = 0;                          // [T]
    double atom_number = 0;
    double rf_amplitude = 0;                      // [T]
    double gravity = codata().standard_gravity;   // [m/s^2]
};

/// Quantities derived from species + trap: Thomas-Fermi scales, natural
/// units of the linear-potential problem, Larmor frequency, coupling.
struct DerivedParams {
    double chemical_potential = 0; // [J]
    double g_s = 0;                // [J m^3]
    double semi_axis_a = 0, semi_axis_b = 0, semi_axis_c = 0; // [m]
    double larmor = 0;             // [rad/s]
    double coupling_eta = 0;       // [rad/s]
    double natural_length = 0;     // l0 = (hbar^2 / 2 M^2 g)^{1/3} [m]
    double energy_unit = 0;        // M g l0 [J]
    double freq_unit = 0;          // M g l0 / hbar [rad/s]
    double sag = 0;                // -g/omega_y^2 [m]
    double mass = 0, gravity = 0, atom_number = 0; // carried along
};

DerivedParams derive_params(const AtomSpecies& species, const TrapGeometry& trap,
                            const PhysicalConstants& c = codata());

/// The l0 / Mg·l0 / Mg·l0/hbar unit frame all numerics run in.  Vertical
/// lengths are measured in l0; transverse (radial) lengths in units of the
/// horizontal semi-axis a.  A frame may be purely dimensionless (a_bar,
/// b_bar given directly) in which case the SI conversions are unavailable.
struct DimensionlessFrame {
    double a_bar = 0; // a / l0
    double b_bar = 0; // b / l0
    std::optional<DerivedParams> physical;

    static DimensionlessFrame from_bars(double a_bar, double b_bar);

    double length_bar(double y_m) const { return y_m / require().natural_length; }
    double radial_bar(double r_m) const { return r_m / require().semi_axis_a; }
    double energy_bar(double e_j) const { return e_j / require().energy_unit; }
    double freq_bar(double omega) const { return omega / require().freq_unit; }

  private:
    const DerivedParams& require() const {
        if (!physical)
            throw Error("frame carries no physical units (dimensionless geometry)");
        return *physical;
    }
};

/// Builds the frame; requires cylindrical symmetry (omega_x == omega_z).
DimensionlessFrame to_dimensionless(const DerivedParams& params);

/// Thomas-Fermi condensate on an ellipsoid with cylindrical symmetry.
/// amplitude_bar = sqrt(15 / (8 pi a_bar^2 b_bar)) is the peak value in
/// l0^{-3/2}, fixed by unit normalization of |Phi|^2.
struct CondensateTF {
    double a_bar = 0, b_bar = 0;
    double amplitude_bar = 0;                 // [l0^{-3/2}]
    std::optional<DerivedParams> physical;    // set when built from SI inputs

    static CondensateTF from_bars(double a_bar, double b_bar);
    static CondensateTF from_physical(const DerivedParams& params);

    /// Wavefunction in frame units: r_perp in units of a, y in units of l0.
    double value_bar(double r_perp_bar, double y_bar) const {
        const double q =
            1.0 - r_perp_bar * r_perp_bar - (y_bar * y_bar) / (b_bar * b_bar);
        return q > 0.0 ? amplitude_bar * std::sqrt(q) : 0.0;
    }
};

/// Physical Thomas-Fermi wavefunction value sqrt((mu - V_T)/(N g_s)) at a
/// Cartesian point [m], in m^{-3/2}; exactly zero outside the ellipsoid.
double tf_value(const CondensateTF& cond, double x_m, double y_m, double z_m);

} // namespace atomlaser
