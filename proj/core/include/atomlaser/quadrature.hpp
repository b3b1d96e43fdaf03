#pragma once

#include <functional>
#include <vector>

#include "atomlaser/errors.hpp"

namespace atomlaser {

/// Tolerances and panel policy for the adaptive integrator.
struct QuadSpec {
    double rel_tol = 1e-6;
    double abs_tol = 1e-16;
    int max_panels = 20000;
    int panel_rule = 15;          // Gauss-Legendre nodes per panel
    double tail_threshold = 10.0; // Airy-argument cutoff for tail truncation

    void validate() const {
        if (!(rel_tol > 0.0) || rel_tol > 1e-2)
            throw ConfigError("rel_tol", "must be in (0, 1e-2]");
        if (panel_rule < 7 || panel_rule > 64)
            throw ConfigError("panel_rule", "panel nodes must be in [7, 64]");
        if (tail_threshold < 8.0)
            throw ConfigError("tail_threshold", "must be >= 8");
        if (max_panels < 4) throw ConfigError("max_panels", "must be >= 4");
        if (!(abs_tol >= 0.0)) throw ConfigError("abs_tol", "must be >= 0");
    }

    /// Inner integrals of a nested evaluation run 10x tighter per level.
    QuadSpec tightened(double factor = 0.1) const {
        QuadSpec s = *this;
        s.rel_tol *= factor;
        s.abs_tol *= factor;
        return s;
    }
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // conservative estimate (parent/child panel defect)
    bool converged = true;
    int panels = 0;
};

/// Gauss-Legendre rule on [-1, 1]; nodes found once by Newton iteration.
class GaussLegendre {
  public:
    explicit GaussLegendre(int n);
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    int size() const { return static_cast<int>(nodes_.size()); }

    /// Cached immutable rule of order n (thread-safe).
    static const GaussLegendre& of(int n);

  private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Adaptive panel quadrature of f over the finite interval [a, b].
/// An optional local-wavelength hint pre-splits panels to a quarter of the
/// local oscillation wavelength so the fixed-order rule sees smooth pieces.
/// Deterministic: refinement order and the final summation order are fixed.
/// Never throws on non-convergence; the flag travels in the result.
QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        const QuadSpec& spec,
                        const std::function<double(double)>* local_wavelength = nullptr);

/// Fixed, reusable panel grid for integrands whose oscillation rate is known
/// a priori.  Panels are capped at a quarter wavelength; node positions and
/// weights are laid out flat so several integrands can share one grid.
struct PanelGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    int panels = 0;
    bool truncated = false; // max_panels hit while building

    static PanelGrid build(double a, double b,
                           const std::function<double(double)>& local_wavelength,
                           const QuadSpec& spec, double max_panel_width);
};

/// Transverse-momentum cutoff: smallest dimensionless k_perp at which the
/// vertical Airy argument at the condensate bottom reaches tail_threshold;
/// beyond it the source couples only through the exp(-(2/3)t^{3/2}) tail.
double truncate_kperp(double nu_bar, double a_bar, double b_bar, double tail_threshold);

/// Loose analytic bound on the discarded k_perp > k_max tail, relative to
/// the scale of the source integral.
double kperp_tail_bound(double a_bar, double tail_threshold);

} // namespace atomlaser
