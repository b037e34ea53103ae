#include "prandtl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace prandtl::quadrature {

namespace {

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights, as tabulated in QUADPACK's dqk15.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    Complex kronrod;
    double err;
};

// Evaluate one Gauss-Kronrod panel on the parameter interval [t0, t1] of the
// segment from + t*(to-from). Returns the Kronrod value of the path integral
// contribution and the |K15 - G7| error estimate.
PanelResult gk15(const Evaluator& f, Complex from, Complex dir, double t0, double t1) {
    const double half = 0.5 * (t1 - t0);
    const double mid = 0.5 * (t0 + t1);
    const Complex fc = f(from + (mid)*dir);

    Complex resk = kWgk[7] * fc;
    Complex resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dt = half * kXgk[j];
        const Complex fa = f(from + (mid - dt) * dir);
        const Complex fb = f(from + (mid + dt) * dir);
        resk += kWgk[j] * (fa + fb);
        if (j % 2 == 1) resg += kWg[j / 2] * (fa + fb);
    }
    const Complex scale = half * dir;
    return PanelResult{resk * scale, std::abs((resk - resg) * scale)};
}

}  // namespace

Complex integrate_segment(const Evaluator& f, const PathIntegralSpec& spec) {
    const int max_depth = std::min(spec.max_depth, 40);
    const Complex dir = spec.to - spec.from;
    if (std::abs(dir) == 0.0) return Complex{0.0, 0.0};

    struct Panel {
        double t0, t1;
        int depth;
    };
    std::vector<Panel> stack;
    stack.push_back(Panel{0.0, 1.0, 0});

    Complex total{0.0, 0.0};
    double err_total = 0.0;
    bool depth_exhausted = false;

    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const PanelResult r = gk15(f, spec.from, dir, p.t0, p.t1);
        const double abs_local = spec.abs_tol * (p.t1 - p.t0);
        const double tol = std::max(abs_local, spec.rel_tol * std::abs(r.kronrod));
        if (r.err <= tol || p.depth >= max_depth) {
            if (r.err > tol) depth_exhausted = true;
            total += r.kronrod;
            err_total += r.err;
            continue;
        }
        const double tm = 0.5 * (p.t0 + p.t1);
        stack.push_back(Panel{tm, p.t1, p.depth + 1});
        stack.push_back(Panel{p.t0, tm, p.depth + 1});
    }

    if (depth_exhausted) {
        throw MaxDepthExceeded("integrate_segment: bisection depth exhausted", total,
                               err_total);
    }
    return total;
}

Complex cauchy_derivative(const Evaluator& f, const DerivativeSpec& spec) {
    constexpr int kNodeCap = 4096;
    if (spec.order < 1 || spec.order > 3) {
        throw Error("cauchy_derivative: order must be 1, 2 or 3");
    }
    if (spec.radius <= 0.0) throw Error("cauchy_derivative: radius must be positive");
    int n0 = std::max(spec.nodes, 32);
    // Round up to a power of two.
    int nodes = 32;
    while (nodes < n0) nodes *= 2;

    const double two_pi = 2.0 * std::numbers::pi;
    double factorial = 1.0;
    for (int j = 2; j <= spec.order; ++j) factorial *= j;
    const double front = factorial / std::pow(spec.radius, spec.order);

    Complex previous{0.0, 0.0};
    bool have_previous = false;
    for (int n = nodes; n <= kNodeCap; n *= 2) {
        Complex acc{0.0, 0.0};
        double fmax = 0.0;
        for (int j = 0; j < n; ++j) {
            const double theta = two_pi * j / n;
            const Complex w = spec.center + std::polar(spec.radius, theta);
            const Complex fw = f(w);
            fmax = std::max(fmax, std::abs(fw));
            acc += fw * std::polar(1.0, -spec.order * theta);
        }
        const Complex d = front / n * acc;
        if (have_previous) {
            const double diff = std::abs(d - previous);
            const double noise_floor =
                64.0 * std::numeric_limits<double>::epsilon() * fmax * front;
            if (diff <= std::max(10.0 * spec.rel_tol * std::abs(d), noise_floor)) {
                return d;
            }
        }
        previous = d;
        have_previous = true;
    }
    throw NonConvergent("cauchy_derivative: node doubling did not converge by 4096");
}

double derivative_radius(Complex center, const std::vector<Complex>& singularities) {
    double clearance = std::numeric_limits<double>::infinity();
    for (const Complex& s : singularities) {
        clearance = std::min(clearance, std::abs(center - s));
    }
    if (!std::isfinite(clearance)) return 0.5;
    return std::min(0.5, 0.4 * clearance);
}

}  // namespace prandtl::quadrature
