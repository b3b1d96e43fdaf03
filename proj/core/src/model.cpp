#include "atomlaser/model.hpp"

#include <cmath>

namespace atomlaser {

DerivedParams derive_params(const AtomSpecies& species, const TrapGeometry& trap,
                            const PhysicalConstants& c) {
    if (!(species.mass > 0)) throw ConfigError("species.mass", "must be > 0");
    if (!(species.scattering_length > 0))
        throw ConfigError("species.scattering_length", "must be > 0");
    if (!(trap.omega_x > 0 && trap.omega_y > 0 && trap.omega_z > 0))
        throw ConfigError("trap.omega", "all trap frequencies must be > 0");
    if (!(trap.atom_number >= 1)) throw ConfigError("trap.atom_number", "must be >= 1");
    if (!(trap.gravity > 0)) throw ConfigError("trap.gravity", "must be > 0");
    if (trap.b_offset < 0) throw ConfigError("trap.b_offset", "must be >= 0");
    if (trap.rf_amplitude < 0) throw ConfigError("trap.rf_amplitude", "must be >= 0");

    const double M = species.mass;
    const double g = trap.gravity;
    const double hbar = c.hbar;

    DerivedParams p;
    p.mass = M;
    p.gravity = g;
    p.atom_number = trap.atom_number;
    p.g_s = 4.0 * M_PI * hbar * hbar * species.scattering_length / M;
    p.chemical_potential =
        std::pow(15.0 * trap.atom_number * p.g_s * trap.omega_x * trap.omega_x *
                     trap.omega_y / (8.0 * M_PI),
                 0.4) *
        std::pow(0.5 * M, 0.6);
    p.semi_axis_a = std::sqrt(2.0 * p.chemical_potential / (M * trap.omega_x * trap.omega_x));
    p.semi_axis_b = std::sqrt(2.0 * p.chemical_potential / (M * trap.omega_y * trap.omega_y));
    p.semi_axis_c = std::sqrt(2.0 * p.chemical_potential / (M * trap.omega_z * trap.omega_z));
    p.larmor = (std::abs(species.lande_g_f) * c.bohr_magneton * trap.b_offset +
                M * g * g / (2.0 * trap.omega_y * trap.omega_y)) /
               hbar;
    p.coupling_eta = c.bohr_magneton * trap.rf_amplitude *
                     std::sqrt(trap.atom_number) / (4.0 * std::sqrt(2.0) * hbar);
    p.natural_length = std::cbrt(hbar * hbar / (2.0 * M * M * g));
    p.energy_unit = M * g * p.natural_length;
    p.freq_unit = p.energy_unit / hbar;
    p.sag = -g / (trap.omega_y * trap.omega_y);
    return p;
}

DimensionlessFrame DimensionlessFrame::from_bars(double a_bar, double b_bar) {
    if (!(a_bar > 0) || !(b_bar > 0))
        throw ConfigError("geometry", "a_bar and b_bar must be > 0");
    DimensionlessFrame f;
    f.a_bar = a_bar;
    f.b_bar = b_bar;
    return f;
}

DimensionlessFrame to_dimensionless(const DerivedParams& params) {
    const double rel = std::abs(params.semi_axis_a - params.semi_axis_c) /
                       params.semi_axis_a;
    if (rel > 1e-9)
        throw UnsupportedGeometryError(
            "cylindrical symmetry required: omega_x must equal omega_z");
    DimensionlessFrame f;
    f.a_bar = params.semi_axis_a / params.natural_length;
    f.b_bar = params.semi_axis_b / params.natural_length;
    f.physical = params;
    return f;
}

namespace {
double normalized_amplitude(double a_bar, double b_bar) {
    return std::sqrt(15.0 / (8.0 * M_PI * a_bar * a_bar * b_bar));
}
} // namespace

CondensateTF CondensateTF::from_bars(double a_bar, double b_bar) {
    if (!(a_bar > 0) || !(b_bar > 0))
        throw ConfigError("geometry", "a_bar and b_bar must be > 0");
    CondensateTF c;
    c.a_bar = a_bar;
    c.b_bar = b_bar;
    c.amplitude_bar = normalized_amplitude(a_bar, b_bar);
    return c;
}

CondensateTF CondensateTF::from_physical(const DerivedParams& params) {
    DimensionlessFrame f = to_dimensionless(params); // validates symmetry
    CondensateTF c = from_bars(f.a_bar, f.b_bar);
    c.physical = params;
    return c;
}

double tf_value(const CondensateTF& cond, double x_m, double y_m, double z_m) {
    if (!cond.physical)
        throw Error("tf_value: condensate carries no physical scales");
    const DerivedParams& p = *cond.physical;
    const double q = 1.0 - (x_m * x_m) / (p.semi_axis_a * p.semi_axis_a) -
                     (y_m * y_m) / (p.semi_axis_b * p.semi_axis_b) -
                     (z_m * z_m) / (p.semi_axis_c * p.semi_axis_c);
    if (q <= 0.0) return 0.0;
    // sqrt((mu - V_T)/(N g_s)) with V_T written through the semi-axes
    return std::sqrt(p.chemical_potential * q / (p.atom_number * p.g_s));
}

} // namespace atomlaser
