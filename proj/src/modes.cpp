#include "prandtl/modes.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "prandtl/parallel.hpp"
#include "prandtl/quadrature.hpp"
#include "prandtl/solutions.hpp"

namespace prandtl::modes {

namespace {

constexpr double kMuOneTol = 1e-12;
constexpr double kDegenerateTol = 1e-14;
constexpr double kRankTol = 1e-10;

using Row = std::array<Complex, 3>;

double inf_norm(const Row& r) {
    return std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
}

double two_norm(const Row& r) {
    return std::sqrt(std::norm(r[0]) + std::norm(r[1]) + std::norm(r[2]));
}

// Scale so the largest-modulus component (lowest index on ties) becomes 1.
CoefficientTriple normalized(const Row& v) {
    int pivot = 0;
    double best = std::abs(v[0]);
    for (int i = 1; i < 3; ++i) {
        if (std::abs(v[i]) > best) {
            best = std::abs(v[i]);
            pivot = i;
        }
    }
    return CoefficientTriple{v[0] / v[pivot], v[1] / v[pivot], v[2] / v[pivot]};
}

}  // namespace

UpsilonBasis::UpsilonBasis(Complex mu, Complex eta_star)
    : mu_(mu), eta_star_(eta_star), special_mu1_(std::abs(mu - 1.0) < kMuOneTol) {}

Complex UpsilonBasis::kernel(int branch, Complex xi) const {
    if (branch == 1) return solutions::psi_mu(mu_, 1, xi);
    if (branch != 2) throw Error("UpsilonBasis::kernel: branch must be 1 or 2");
    if (special_mu1_) return solutions::g_mu1(xi);
    return solutions::psi_mu(mu_, 2, xi);
}

Complex UpsilonBasis::kernel_prime(int branch, Complex xi) const {
    if (branch == 1) return solutions::psi_mu_prime(mu_, 1, xi);
    if (branch != 2) throw Error("UpsilonBasis::kernel_prime: branch must be 1 or 2");
    if (special_mu1_) return solutions::g_mu1_prime(xi);
    return solutions::psi_mu_prime(mu_, 2, xi);
}

Complex upsilon(const UpsilonBasis& basis, int branch, Complex eta) {
    const Complex tail = -0.5 * basis.kernel_prime(branch, basis.eta_star());
    if (eta == basis.eta_star()) return tail;
    quadrature::PathIntegralSpec spec;
    spec.from = basis.eta_star();
    spec.to = eta;
    if (branch == 2 && basis.special_mu1()) {
        // The erf kernel g solves -g'' + eta^2 g = -g, not the mu = 1
        // oscillator equation, so the quadratic-weight integral below would
        // miss the third order eigenproblem by twice the plain integral of g.
        // Applying -d^2/d eta^2 + eta^2 - 1 to the antiderivative of g instead
        // lands in the solution family with the same base-point value:
        //   U = ((eta^2 - 1) G - g'(eta)) / 2,  G = integral of g from eta*.
        const Complex g_int = quadrature::integrate_segment(
            [&](Complex xi) { return basis.kernel(2, xi); }, spec);
        return 0.5 * ((eta * eta - 1.0) * g_int - basis.kernel_prime(2, eta));
    }
    const Complex e2 = eta * eta;
    const Complex integral = quadrature::integrate_segment(
        [&](Complex xi) { return (1.0 + 0.5 * (e2 - xi * xi)) * basis.kernel(branch, xi); },
        spec);
    return integral + tail;
}

Complex upsilon_prime(const UpsilonBasis& basis, int branch, Complex eta) {
    const Complex point = basis.kernel(branch, eta);
    const bool operator_built = branch == 2 && basis.special_mu1();
    if (eta == basis.eta_star()) return operator_built ? -point : point;
    quadrature::PathIntegralSpec spec;
    spec.from = basis.eta_star();
    spec.to = eta;
    const Complex i0 = quadrature::integrate_segment(
        [&](Complex xi) { return basis.kernel(branch, xi); }, spec);
    if (operator_built) {
        // Differentiating the operator form and using g'' = (eta^2 + 1) g
        // collapses the derivative to eta G - g.
        return eta * i0 - point;
    }
    return point + eta * i0;
}

namespace detail {

std::vector<CoefficientTriple> solve_rows(const Row& r1, const Row& r2) {
    if (inf_norm(r1) < kDegenerateTol && inf_norm(r2) < kDegenerateTol) {
        throw DegenerateSystem("solve_rows: boundary system is numerically zero");
    }

    // Gram-Schmidt with the larger row first; the projected length of the
    // second row against the first decides the numerical rank.
    const bool first_larger = two_norm(r1) >= two_norm(r2);
    const Row& a = first_larger ? r1 : r2;
    const Row& b = first_larger ? r2 : r1;
    const double na = two_norm(a);
    Complex dot{0.0, 0.0};
    for (int i = 0; i < 3; ++i) dot += b[i] * std::conj(a[i]);
    Row res;
    for (int i = 0; i < 3; ++i) res[i] = b[i] - dot / (na * na) * a[i];

    std::vector<CoefficientTriple> out;
    if (two_norm(res) >= kRankTol * na) {
        // Rank 2: nullspace spanned by the (unconjugated) row cross product.
        const Row v{r1[1] * r2[2] - r1[2] * r2[1],
                    r1[2] * r2[0] - r1[0] * r2[2],
                    r1[0] * r2[1] - r1[1] * r2[0]};
        out.push_back(normalized(v));
        return out;
    }

    // Rank 1: two free choices against the dominant row.
    int pivot = 0;
    double best = std::abs(a[0]);
    for (int i = 1; i < 3; ++i) {
        if (std::abs(a[i]) > best) {
            best = std::abs(a[i]);
            pivot = i;
        }
    }
    for (int free_idx = 0; free_idx < 3; ++free_idx) {
        if (free_idx == pivot) continue;
        Row v{Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}};
        v[free_idx] = Complex{1.0, 0.0};
        v[pivot] = -a[free_idx] / a[pivot];
        out.push_back(normalized(v));
    }
    return out;
}

}  // namespace detail

std::vector<CoefficientTriple> solve_boundary_coefficients(Complex mu, Complex eta_star) {
    const UpsilonBasis basis(mu, eta_star);
    const Row r1{mu - eta_star * eta_star,
                 -0.5 * basis.kernel_prime(1, eta_star),
                 -0.5 * basis.kernel_prime(2, eta_star)};
    // At mu = 1 the second basis function is operator built from the erf
    // kernel and its slope at the base point is -g(eta*), not +g(eta*).
    const Complex slope2 = basis.special_mu1() ? -basis.kernel(2, eta_star)
                                               : basis.kernel(2, eta_star);
    const Row r2{-2.0 * eta_star, basis.kernel(1, eta_star), slope2};
    return detail::solve_rows(r1, r2);
}

Complex stream_function(const frames::Frame& f, const CoefficientTriple& c, double y) {
    const UpsilonBasis basis(f.mu, f.eta_star);
    const Complex eta = frames::y_to_eta(f, y);
    Complex acc = c.c0 * basis.quadratic(eta);
    const Complex zero{0.0, 0.0};
    if (c.c1 != zero) acc += c.c1 * upsilon(basis, 1, eta);
    if (c.c2 != zero) acc += c.c2 * upsilon(basis, 2, eta);
    return acc;
}

Complex stream_function_prime(const frames::Frame& f, const CoefficientTriple& c, double y) {
    const UpsilonBasis basis(f.mu, f.eta_star);
    const Complex eta = frames::y_to_eta(f, y);
    Complex acc = c.c0 * (-2.0 * eta);
    const Complex zero{0.0, 0.0};
    if (c.c1 != zero) acc += c.c1 * upsilon_prime(basis, 1, eta);
    if (c.c2 != zero) acc += c.c2 * upsilon_prime(basis, 2, eta);
    return acc * f.rot * f.scale;
}

Velocity velocity_field(const frames::Frame& f, const CoefficientTriple& c,
                        double t, double x, double y) {
    const double kd = static_cast<double>(f.mode.k);
    const Complex i_unit{0.0, 1.0};
    const Complex amp =
        std::exp(i_unit * kd * x + f.mode.sigma * std::sqrt(std::abs(kd)) * t);
    Velocity vel;
    vel.u = stream_function_prime(f, c, y) * amp;
    vel.v = -i_unit * kd * stream_function(f, c, y) * amp;
    return vel;
}

SampledProfile sample_profile(const frames::Frame& f, const CoefficientTriple& c,
                              double y_min, double y_max, int n) {
    if (!(y_min >= 0.0) || !(y_min < y_max)) {
        throw Error("sample_profile: need 0 <= y_min < y_max");
    }
    if (n < 2) throw Error("sample_profile: need n >= 2");

    SampledProfile profile;
    profile.frame = f;
    profile.coeffs = c;
    profile.coords.resize(n);
    profile.values.resize(n);
    const double step = (y_max - y_min) / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) {
        profile.coords[i] = i == n - 1 ? y_max : y_min + step * static_cast<double>(i);
    }
    for (int i = 1; i < n; ++i) {
        if (!(profile.coords[i] > profile.coords[i - 1])) {
            throw Error("sample_profile: grid too fine, coordinates collide");
        }
    }
    parallel_for(n, [&](int i) { profile.values[i] = stream_function(f, c, profile.coords[i]); });
    return profile;
}

void write_csv(const std::string& path, const std::string& coord_name,
               const std::vector<double>& coords, const std::vector<Complex>& values) {
    if (coords.size() != values.size()) {
        throw Error("write_csv: coordinate and value counts differ");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_csv: cannot open " + path);
    out << coord_name << ",re,im\n";
    char line[128];
    for (std::size_t i = 0; i < coords.size(); ++i) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", coords[i],
                      values[i].real(), values[i].imag());
        out << line;
    }
    if (!out) throw Error("write_csv: write failed for " + path);
}

std::string profile_meta_json(const SampledProfile& profile) {
    nlohmann::json j = nlohmann::json::parse(frames::frame_to_json(profile.frame));
    j["c0_re"] = profile.coeffs.c0.real();
    j["c0_im"] = profile.coeffs.c0.imag();
    j["c1_re"] = profile.coeffs.c1.real();
    j["c1_im"] = profile.coeffs.c1.imag();
    j["c2_re"] = profile.coeffs.c2.real();
    j["c2_im"] = profile.coeffs.c2.imag();
    j["y_min"] = profile.coords.empty() ? 0.0 : profile.coords.front();
    j["y_max"] = profile.coords.empty() ? 0.0 : profile.coords.back();
    j["samples"] = profile.coords.size();
    return j.dump(2) + "\n";
}

void write_profile_csv(const SampledProfile& profile, const std::string& path) {
    write_csv(path, "y", profile.coords, profile.values);
    std::ofstream meta(path + ".meta.json", std::ios::binary);
    if (!meta) throw Error("write_profile_csv: cannot open " + path + ".meta.json");
    meta << profile_meta_json(profile);
    if (!meta) throw Error("write_profile_csv: metadata write failed");
}

}  // namespace prandtl::modes
