#include "atomlaser/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

#include "atomlaser/airy.hpp"

namespace atomlaser {

GaussLegendre::GaussLegendre(int n) {
    nodes_.resize(n);
    weights_.resize(n);
    // Newton iteration on P_n with the Chebyshev-angle initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one polishing step, then stop
                double q0 = 1.0, q1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double q2 = ((2.0 * k - 1.0) * x * q1 - (k - 1.0) * q0) / k;
                    q0 = q1;
                    q1 = q2;
                }
                pp = n * (x * q1 - q0) / (x * x - 1.0);
                x -= q1 / pp;
                break;
            }
        }
        nodes_[i] = -x;
        nodes_[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights_[i] = w;
        weights_[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

const GaussLegendre& GaussLegendre::of(int n) {
    static std::mutex mtx;
    static std::map<int, GaussLegendre> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, GaussLegendre(n)).first;
    return it->second;
}

namespace {

template <class F>
double gl_panel(F& f, const GaussLegendre& rule, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double acc = 0.0;
    const auto& xs = rule.nodes();
    const auto& ws = rule.weights();
    for (std::size_t i = 0; i < xs.size(); ++i) acc += ws[i] * f(c + h * xs[i]);
    return acc * h;
}

struct Segment {
    double a, b;
    double value; // sum of the two child-panel estimates
    double error; // |children - parent|
};

struct WorstFirst {
    bool operator()(const Segment& l, const Segment& r) const {
        if (l.error != r.error) return l.error < r.error;
        return l.a > r.a; // deterministic tie-break: leftmost wins
    }
};

template <class F>
Segment make_segment(F& f, const GaussLegendre& rule, double a, double b) {
    const double parent = gl_panel(f, rule, a, b);
    const double m = 0.5 * (a + b);
    const double child = gl_panel(f, rule, a, m) + gl_panel(f, rule, m, b);
    return {a, b, child, std::abs(child - parent)};
}

double kahan_sum(std::vector<Segment>& segs) {
    std::sort(segs.begin(), segs.end(),
              [](const Segment& l, const Segment& r) { return l.a < r.a; });
    double sum = 0.0, comp = 0.0;
    for (const Segment& s : segs) {
        const double y = s.value - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

} // namespace

QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        const QuadSpec& spec,
                        const std::function<double(double)>* local_wavelength) {
    spec.validate();
    QuadResult out;
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw DomainError("integrate_1d: interval must be finite");
    if (a == b) return out;
    const double sign = (b > a) ? 1.0 : -1.0;
    const double lo = std::min(a, b), hi = std::max(a, b);
    const GaussLegendre& rule = GaussLegendre::of(spec.panel_rule);

    // initial partition: single panel, or quarter-wavelength walk
    std::vector<std::pair<double, double>> initial;
    if (local_wavelength) {
        const double min_width = (hi - lo) / (0.5 * spec.max_panels);
        double x = lo;
        while (x < hi) {
            double w = (*local_wavelength)(x) * 0.25;
            if (!(w > min_width)) w = min_width;
            const double nxt = std::min(hi, x + w);
            initial.emplace_back(x, nxt);
            x = nxt;
        }
    } else {
        initial.emplace_back(lo, hi);
    }

    std::priority_queue<Segment, std::vector<Segment>, WorstFirst> active;
    std::vector<Segment> done;
    double total = 0.0, total_err = 0.0;
    auto feval = [&f](double x) { return f(x); };
    for (auto [sa, sb] : initial) {
        Segment s = make_segment(feval, rule, sa, sb);
        total += s.value;
        total_err += s.error;
        active.push(s);
    }
    int panels = static_cast<int>(initial.size());

    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)) &&
           panels < spec.max_panels && !active.empty()) {
        Segment worst = active.top();
        active.pop();
        if (worst.error == 0.0) { // nothing left to gain
            done.push_back(worst);
            continue;
        }
        const double m = 0.5 * (worst.a + worst.b);
        Segment l = make_segment(feval, rule, worst.a, m);
        Segment r = make_segment(feval, rule, m, worst.b);
        total += l.value + r.value - worst.value;
        total_err += l.error + r.error - worst.error;
        active.push(l);
        active.push(r);
        ++panels;
    }

    while (!active.empty()) {
        done.push_back(active.top());
        active.pop();
    }
    out.value = sign * kahan_sum(done);
    out.error = total_err;
    out.panels = panels;
    out.converged =
        total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value)) ||
        total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    return out;
}

PanelGrid PanelGrid::build(double a, double b,
                           const std::function<double(double)>& local_wavelength,
                           const QuadSpec& spec, double max_panel_width) {
    PanelGrid grid;
    if (!(b > a)) return grid;
    const GaussLegendre& rule = GaussLegendre::of(spec.panel_rule);
    const double min_width = (b - a) / static_cast<double>(spec.max_panels);
    double x = a;
    while (x < b) {
        double w = std::min(local_wavelength(x) * 0.25, max_panel_width);
        // the wavelength may shrink across the panel; look once ahead
        w = std::min(w, local_wavelength(std::min(b, x + w)) * 0.25);
        if (!(w > min_width)) w = min_width;
        const double nxt = std::min(b, x + w);
        const double c = 0.5 * (x + nxt);
        const double h = 0.5 * (nxt - x);
        for (int i = 0; i < rule.size(); ++i) {
            grid.nodes.push_back(c + h * rule.nodes()[i]);
            grid.weights.push_back(h * rule.weights()[i]);
        }
        ++grid.panels;
        if (grid.panels >= spec.max_panels && nxt < b) {
            grid.truncated = true;
            break;
        }
        x = nxt;
    }
    return grid;
}

double truncate_kperp(double nu_bar, double a_bar, double b_bar, double tail_threshold) {
    const double s = nu_bar + b_bar + tail_threshold;
    return (s > 0.0) ? a_bar * std::sqrt(s) : 0.0;
}

double kperp_tail_bound(double a_bar, double tail_threshold) {
    // integral of the Ai tail past the cutoff, in units of the source scale:
    // int_{k_max}^inf k Ai(k^2/a^2 - ...) dk = (a^2/2) int_tau^inf Ai(w) dw
    return 0.5 * a_bar * a_bar * airy_ai_decay_bound(tail_threshold);
}

} // namespace atomlaser
