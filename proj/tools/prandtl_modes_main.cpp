// Command-line front end: pointwise evaluation of every registered function,
// mode construction with CSV export, the verification suites, and the
// shear-layer profile dataset.
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prandtl/asymptotics.hpp"
#include "prandtl/core.hpp"
#include "prandtl/frames.hpp"
#include "prandtl/modes.hpp"
#include "prandtl/oracle.hpp"
#include "prandtl/quadrature.hpp"
#include "prandtl/shearlayer.hpp"
#include "prandtl/solutions.hpp"
#include "prandtl/specfun.hpp"

namespace {

using prandtl::Complex;
namespace frames = prandtl::frames;
namespace modes = prandtl::modes;
namespace oracle = prandtl::oracle;
namespace shearlayer = prandtl::shearlayer;
namespace solutions = prandtl::solutions;
namespace specfun = prandtl::specfun;
namespace asymptotics = prandtl::asymptotics;
namespace quadrature = prandtl::quadrature;

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------- eval ----

struct EvalConfig {
    std::string name;
    double re = 0.0;
    double im = 0.0;
    double a_re = 0.0, a_im = 0.0;       // kummer_m parameter a
    double c_re = 0.5, c_im = 0.0;       // kummer_m parameter c
    double tau_re = -1.0 / std::numbers::sqrt2;
    double tau_im = -1.0 / std::numbers::sqrt2;
    double mu_re = -1.0, mu_im = 0.0;
    double eta_star_re = 0.0, eta_star_im = 0.0;
    double upp = 0.0;
    bool upp_given = false;
    double a_loc = 0.0;
};

const char* kRegistry[] = {"kummer_m", "erf",         "erfi",     "gamma",
                           "x_tau1",   "x_tau2",      "y_mu1",    "y_mu2",
                           "r1",       "r2",          "psi1",     "psi2",
                           "g_mu1",    "w_criterion", "tau_criterion",
                           "upsilon1", "upsilon2",    "V"};

int run_eval(const EvalConfig& cfg) {
    const Complex z{cfg.re, cfg.im};
    const Complex tau{cfg.tau_re, cfg.tau_im};
    const Complex mu{cfg.mu_re, cfg.mu_im};
    const Complex eta_star{cfg.eta_star_re, cfg.eta_star_im};
    const std::string& n = cfg.name;
    bool known = false;
    for (const char* r : kRegistry) known = known || n == r;
    if (!known) {
        std::fprintf(stderr, "unknown function: %s\navailable:", n.c_str());
        for (const char* r : kRegistry) std::fprintf(stderr, " %s", r);
        std::fprintf(stderr, "\n");
        return 2;
    }
    Complex value;
    try {
        if (n == "kummer_m") {
            value = specfun::kummer_m({cfg.a_re, cfg.a_im}, {cfg.c_re, cfg.c_im}, z);
        } else if (n == "erf") {
            value = specfun::erf_c(z);
        } else if (n == "erfi") {
            value = specfun::erfi_c(z);
        } else if (n == "gamma") {
            value = specfun::gamma_c(z);
        } else if (n == "x_tau1") {
            value = solutions::x_tau(tau, 1, z);
        } else if (n == "x_tau2") {
            value = solutions::x_tau(tau, 2, z);
        } else if (n == "y_mu1") {
            value = solutions::y_mu(mu, 1, z);
        } else if (n == "y_mu2") {
            value = solutions::y_mu(mu, 2, z);
        } else if (n == "r1") {
            value = solutions::r_series(mu, 1, z);
        } else if (n == "r2") {
            value = solutions::r_series(mu, 2, z);
        } else if (n == "psi1") {
            value = solutions::psi_mu(mu, 1, z);
        } else if (n == "psi2") {
            value = solutions::psi_mu(mu, 2, z);
        } else if (n == "g_mu1") {
            value = solutions::g_mu1(z);
        } else if (n == "w_criterion") {
            value = solutions::w_criterion(z);
        } else if (n == "tau_criterion") {
            value = solutions::tau_criterion();
        } else if (n == "upsilon1" || n == "upsilon2") {
            const modes::UpsilonBasis basis(mu, eta_star);
            value = modes::upsilon(basis, n == "upsilon1" ? 1 : 2, z);
        } else {  // V
            if (cfg.im != 0.0) throw prandtl::Error("V takes a real argument");
            const shearlayer::CriticalPoint cp =
                cfg.upp_given ? shearlayer::CriticalPoint(cfg.a_loc, cfg.upp)
                              : shearlayer::example_flow_critical_point();
            value = shearlayer::shear_layer_V(cp, cfg.re);
        }
    } catch (const prandtl::Error& e) {
        std::fprintf(stderr, "evaluation error: %s\n", e.what());
        return 3;
    }
    std::printf("%.17g %.17g\n", value.real(), value.imag());
    return 0;
}

// ---------------------------------------------------------------- mode ----

struct ModeConfig {
    double alpha = 0.0;
    double beta = -1.0;
    double a = 0.0;
    long long k = 1;
    double sigma_re = 1.0 / std::numbers::sqrt2;
    double sigma_im = -1.0 / std::numbers::sqrt2;
    // Defaults are the free worked example: phi_k(0) = -sqrt(pi/2).
    double c0_re = std::sqrt(kPi / 2.0), c0_im = 0.0;
    double c1_re = 2.0, c1_im = 0.0;
    double c2_re = 0.0, c2_im = 0.0;
    std::vector<double> grid{0.0, 3.0, 301.0};
    std::string out;
    bool no_slip = false;
};

int run_mode(const ModeConfig& cfg) {
    try {
        if (cfg.grid.size() != 3) throw prandtl::Error("--grid needs MIN MAX N");
        const int n = static_cast<int>(cfg.grid[2]);
        if (n < 2) throw prandtl::Error("grid sample count must be at least 2");
        const frames::ShearFlow sh{cfg.alpha, cfg.beta, cfg.a};
        const frames::ModeSpec ms{cfg.k, Complex{cfg.sigma_re, cfg.sigma_im}};
        const frames::Frame frame = frames::build_frame(sh, ms);
        modes::CoefficientTriple c{{cfg.c0_re, cfg.c0_im},
                                   {cfg.c1_re, cfg.c1_im},
                                   {cfg.c2_re, cfg.c2_im}};
        if (cfg.no_slip) {
            const auto triples = modes::solve_boundary_coefficients(frame.mu, frame.eta_star);
            c = triples.front();
            std::fprintf(stderr,
                         "no-slip triple: c0 = %.17g%+.17gi, c1 = %.17g%+.17gi, "
                         "c2 = %.17g%+.17gi\n",
                         c.c0.real(), c.c0.imag(), c.c1.real(), c.c1.imag(), c.c2.real(),
                         c.c2.imag());
        }
        const modes::SampledProfile prof =
            modes::sample_profile(frame, c, cfg.grid[0], cfg.grid[1], n);
        modes::write_profile_csv(prof, cfg.out);
        std::fprintf(stderr, "wrote %s and %s.meta.json (%d samples)\n", cfg.out.c_str(),
                     cfg.out.c_str(), n);
        return 0;
    } catch (const prandtl::DegenerateSystem& e) {
        std::fprintf(stderr, "degenerate boundary system: %s\n", e.what());
        return 4;
    } catch (const prandtl::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}

// ---------------------------------------------------------- shearlayer ----

struct ShearLayerConfig {
    bool example = false;
    double upp = 0.0;
    bool upp_given = false;
    double a = 0.0;
    std::vector<double> grid{-6.0, 6.0, 601.0};
    std::string out;
};

int run_shearlayer(const ShearLayerConfig& cfg) {
    if (!cfg.example && !cfg.upp_given) {
        std::fprintf(stderr, "provide --upp (negative curvature) or --example\n");
        return 2;
    }
    double a = cfg.a;
    double upp = cfg.upp;
    if (cfg.example) {
        const shearlayer::CriticalPoint ex = shearlayer::example_flow_critical_point();
        a = ex.a;
        upp = ex.Upp;
    }
    if (!(upp < 0.0)) {
        std::fprintf(stderr, "curvature at the critical point must be negative, got %g\n", upp);
        return 2;
    }
    try {
        if (cfg.grid.size() != 3) throw prandtl::Error("--grid needs MIN MAX N");
        const int n = static_cast<int>(cfg.grid[2]);
        if (n < 2) throw prandtl::Error("grid sample count must be at least 2");
        const double z_min = cfg.grid[0];
        const double z_max = cfg.grid[1];
        if (!(z_max > z_min)) throw prandtl::Error("grid must satisfy MIN < MAX");
        const shearlayer::CriticalPoint cp(a, upp);
        std::vector<double> coords(n);
        std::vector<Complex> values(n);
        for (int i = 0; i < n; ++i) {
            coords[i] = i == n - 1 ? z_max : z_min + (z_max - z_min) * i / (n - 1);
            values[i] = shearlayer::shear_layer_V(cp, coords[i]);
        }
        modes::write_csv(cfg.out, "z", coords, values);
        std::fprintf(stderr, "wrote %s (%d samples)\n", cfg.out.c_str(), n);
        return 0;
    } catch (const prandtl::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}

// -------------------------------------------------------------- verify ----

struct VerifyConfig {
    std::string suite;
    std::uint64_t seed = 0x5EED;
    double perturb_tau_re = 0.0;
    double tol_rel = 0.0;  // 0 keeps the per-check defaults
    double tol_abs = 0.0;
    std::string out;
};

struct Check {
    std::string suite;
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

class CheckList {
  public:
    CheckList(const VerifyConfig& cfg) : cfg_(cfg) {}

    // Residual-style check: threshold overridable by --tol-rel.
    void add_rel(const std::string& suite, const std::string& name, double value,
                 double def_threshold) {
        push(suite, name, value, cfg_.tol_rel > 0.0 ? cfg_.tol_rel : def_threshold);
    }
    // Absolute-difference check: threshold overridable by --tol-abs.
    void add_abs(const std::string& suite, const std::string& name, double value,
                 double def_threshold) {
        push(suite, name, value, cfg_.tol_abs > 0.0 ? cfg_.tol_abs : def_threshold);
    }

    const std::vector<Check>& checks() const { return checks_; }

  private:
    void push(const std::string& suite, const std::string& name, double value,
              double threshold) {
        checks_.push_back({suite, name, value, threshold, value <= threshold});
    }
    const VerifyConfig& cfg_;
    std::vector<Check> checks_;
};

void suite_recurrences(CheckList& out, const VerifyConfig&) {
    const Complex mus[] = {{-1.0, 0.0}, {2.0, 1.0},  std::polar(1.0, kPi / 4.0),
                           {-5.0, 0.0}, {1.0, 1.0},  {1.0, -1.0}};
    int idx = 0;
    for (const Complex& mu : mus) {
        const oracle::ResidualReport rep = oracle::check_recurrences(mu, 200);
        out.add_rel("recurrences", "mu-" + std::to_string(idx++), rep.max_rel_residual, 1e-12);
    }
}

void suite_criterion(CheckList& out, const VerifyConfig& cfg) {
    const Complex tau = solutions::tau_criterion() + Complex{cfg.perturb_tau_re, 0.0};
    out.add_abs("criterion", "tau-re-vs-shooting", std::abs(tau.real() + 0.706), 2e-3);
    out.add_abs("criterion", "tau-im-vs-shooting", std::abs(tau.imag() + 0.706), 2e-3);
    out.add_abs("criterion", "w-limit-plus",
                std::abs(solutions::w_criterion(Complex{8.0, 0.0}) - 1.0), 1e-6);
    out.add_abs("criterion", "w-limit-minus",
                std::abs(solutions::w_criterion(Complex{-8.0, 0.0})), 1e-6);
    oracle::ResidualParams rp;
    rp.parameter = tau;
    const Complex root = std::sqrt(tau);
    const auto pts =
        oracle::seeded_points(cfg.seed, 24, -4.0, 4.0, 0.0, 0.0, {root, -root}, 0.3);
    const oracle::ResidualReport rep = oracle::residual(
        oracle::Equation::kW, [](Complex w) { return solutions::w_criterion(w); }, rp, pts);
    out.add_rel("criterion", "w-ode-residual", rep.max_rel_residual, 1e-8);
}

void suite_odes(CheckList& out, const VerifyConfig& cfg) {
    const Complex taus[] = {solutions::tau_criterion(), {2.0, 0.5}, {-1.0, 2.0}};
    int ti = 0;
    for (const Complex& tau : taus) {
        const Complex root = std::sqrt(tau);
        const auto pts = oracle::seeded_points(cfg.seed + 100 + ti, 10, -3.0, 3.0, -3.0, 3.0,
                                               {root, -root}, 0.3);
        for (int b : {1, 2}) {
            oracle::ResidualParams rp;
            rp.parameter = tau;
            const oracle::ResidualReport rep = oracle::residual(
                oracle::Equation::kX, [tau, b](Complex w) { return solutions::x_tau(tau, b, w); },
                rp, pts);
            out.add_rel("odes", "x-ode-tau" + std::to_string(ti) + "-b" + std::to_string(b),
                        rep.max_rel_residual, 1e-8);
        }
        ++ti;
    }
    const Complex mus[] = {{-1.0, 0.0}, {2.0, 1.0}};
    int mi = 0;
    for (const Complex& mu : mus) {
        const Complex root = std::sqrt(mu);
        const auto pts = oracle::seeded_points(cfg.seed + 200 + mi, 10, -2.0, 2.0, -2.0, 2.0,
                                               {root, -root}, 0.3);
        for (int b : {1, 2}) {
            oracle::ResidualParams rp;
            rp.parameter = mu;
            const oracle::ResidualReport rser = oracle::residual(
                oracle::Equation::kR,
                [mu, b](Complex w) { return solutions::r_series(mu, b, w); }, rp, pts);
            out.add_rel("odes", "r-ode-mu" + std::to_string(mi) + "-b" + std::to_string(b),
                        rser.max_rel_residual, 1e-8);
            const oracle::ResidualReport rpsi = oracle::residual(
                oracle::Equation::kSchrodinger,
                [mu, b](Complex w) { return solutions::psi_mu(mu, b, w); }, rp, pts);
            out.add_rel("odes",
                        "schrodinger-mu" + std::to_string(mi) + "-b" + std::to_string(b),
                        rpsi.max_rel_residual, 1e-8);
        }
        ++mi;
    }
    const modes::UpsilonBasis basis(Complex{-1.0, 0.0}, Complex{0.0, 0.0});
    const auto pts = oracle::seeded_points(cfg.seed + 300, 6, -2.0, 2.0, -1.0, 1.0,
                                           {{0.0, 1.0}, {0.0, -1.0}}, 0.3);
    for (int b : {1, 2}) {
        oracle::ResidualParams rp;
        rp.parameter = Complex{-1.0, 0.0};
        const oracle::ResidualReport rep = oracle::residual(
            oracle::Equation::kUpsilon,
            [&basis, b](Complex w) { return modes::upsilon(basis, b, w); }, rp, pts);
        out.add_rel("odes", "upsilon-ode-b" + std::to_string(b), rep.max_rel_residual, 1e-8);
    }
}

void suite_asymptotics(CheckList& out, const VerifyConfig& cfg) {
    const double z = 8.0;
    const Complex b = std::polar(1.0, -kPi / 8.0);
    const auto generic_mus =
        oracle::seeded_points(cfg.seed + 400, 4, -2.5, 0.5, -1.5, -0.2);
    int gi = 0;
    for (const Complex& mu : generic_mus) {
        const modes::UpsilonBasis basis(mu, Complex{0.0, 0.0});
        for (int br : {1, 2}) {
            const Complex exact = modes::upsilon(basis, br, b * z);
            const Complex asym = asymptotics::upsilon_asymptotic(mu, br, 1, z);
            out.add_rel("asymptotics",
                        "generic-ratio-mu" + std::to_string(gi) + "-b" + std::to_string(br),
                        std::abs(exact / asym - 1.0), 0.05);
        }
        ++gi;
    }
    for (const double mur : {-3.0, -5.0}) {
        const Complex mu{mur, 0.0};
        const modes::UpsilonBasis basis(mu, Complex{0.0, 0.0});
        for (int br : {1, 2}) {
            const Complex exact = modes::upsilon(basis, br, b * z);
            const Complex asym = asymptotics::upsilon_asymptotic(mu, br, 1, z);
            out.add_rel("asymptotics",
                        "neg-odd-ratio-mu" + std::to_string(static_cast<int>(-mur)) + "-b" +
                            std::to_string(br),
                        std::abs(exact / asym - 1.0), 0.05);
        }
    }
    // Seed-integral growth law at z = 10 for three exponents.
    const double z10 = 10.0;
    const Complex b2 = b * b;
    const Complex gammas[] = {{0.0, 0.0}, {-1.0, 0.0}, {0.7, 0.1}};
    int ci = 0;
    for (const Complex& g : gammas) {
        quadrature::PathIntegralSpec spec;
        spec.from = Complex{1.0, 0.0};
        spec.to = Complex{z10, 0.0};
        const Complex integral = quadrature::integrate_segment(
            [&](Complex w) {
                return std::exp(0.5 * b2 * w * w) *
                       std::exp(g * (std::log(w * w) + Complex{0.0, -kPi / 4.0}));
            },
            spec);
        const Complex asym = std::exp(0.5 * b2 * z10 * z10) *
                             std::exp(g * (std::log(z10 * z10) + Complex{0.0, -kPi / 4.0})) /
                             (b * b * z10);
        out.add_rel("asymptotics", "seed-integral-gamma" + std::to_string(ci++),
                    std::abs(integral / asym - 1.0), 0.05);
    }
    const asymptotics::ScanReport scan =
        asymptotics::criterion_uniqueness_scan(asymptotics::default_scan_grid(), 8.0);
    const bool unique = scan.bounded_mus.size() == 1 &&
                        std::abs(scan.bounded_mus[0] - Complex{-1.0, 0.0}) < 1e-6;
    out.add_abs("asymptotics", "uniqueness-scan", unique ? 0.0 : 1.0, 0.5);
}

void suite_boundary(CheckList& out, const VerifyConfig&) {
    const Complex sigma{1.0 / std::numbers::sqrt2, -1.0 / std::numbers::sqrt2};
    for (const long long k : {1LL, 100LL}) {
        const frames::ShearFlow sh{0.0, -1.0, 1.0};
        const frames::Frame frame = frames::build_frame(sh, frames::ModeSpec{k, sigma});
        const auto triples = modes::solve_boundary_coefficients(frame.mu, frame.eta_star);
        const oracle::ResidualReport rep = oracle::boundary_residual(frame, triples.front());
        out.add_rel("boundary", "no-slip-k" + std::to_string(k), rep.max_rel_residual, 1e-10);
    }
    const frames::ShearFlow sh{0.0, -1.0, 1.0};
    const frames::Frame big = frames::build_frame(sh, frames::ModeSpec{1000000LL, sigma});
    out.add_abs("boundary", "far-field-w-zstar",
                std::abs(solutions::w_criterion(Complex{big.z_star, 0.0})), 1e-6);
}

int run_verify(const VerifyConfig& cfg) {
    const std::vector<std::string> known{"recurrences", "odes", "criterion",
                                        "asymptotics", "boundary", "all"};
    bool ok = false;
    for (const std::string& s : known) ok = ok || s == cfg.suite;
    if (!ok) {
        std::fprintf(stderr, "unknown suite: %s (pick one of", cfg.suite.c_str());
        for (const std::string& s : known) std::fprintf(stderr, " %s", s.c_str());
        std::fprintf(stderr, ")\n");
        return 2;
    }
    CheckList list(cfg);
    try {
        const bool all = cfg.suite == "all";
        if (all || cfg.suite == "recurrences") suite_recurrences(list, cfg);
        if (all || cfg.suite == "odes") suite_odes(list, cfg);
        if (all || cfg.suite == "criterion") suite_criterion(list, cfg);
        if (all || cfg.suite == "asymptotics") suite_asymptotics(list, cfg);
        if (all || cfg.suite == "boundary") suite_boundary(list, cfg);
    } catch (const prandtl::Error& e) {
        std::fprintf(stderr, "verification aborted: %s\n", e.what());
        return 1;
    }
    nlohmann::json report;
    report["suite"] = cfg.suite;
    report["seed"] = cfg.seed;
    report["perturb_tau_re"] = cfg.perturb_tau_re;
    report["checks"] = nlohmann::json::array();
    int failures = 0;
    for (const Check& c : list.checks()) {
        nlohmann::json jc;
        jc["suite"] = c.suite;
        jc["name"] = c.name;
        jc["value"] = c.value;
        jc["threshold"] = c.threshold;
        jc["pass"] = c.pass;
        report["checks"].push_back(jc);
        if (!c.pass) {
            ++failures;
            std::fprintf(stderr, "FAIL %s/%s: %.3e > %.3e\n", c.suite.c_str(), c.name.c_str(),
                         c.value, c.threshold);
        }
    }
    report["failures"] = failures;
    const std::string text = report.dump(2) + "\n";
    if (!cfg.out.empty()) {
        std::FILE* f = std::fopen(cfg.out.c_str(), "wb");
        if (!f) {
            std::fprintf(stderr, "cannot write %s\n", cfg.out.c_str());
            return 1;
        }
        std::fwrite(text.data(), 1, text.size(), f);
        std::fclose(f);
    } else {
        std::fputs(text.c_str(), stderr);
    }
    std::fprintf(stderr, "suite %s: %s (%zu checks, %d failures)\n", cfg.suite.c_str(),
                 failures == 0 ? "PASS" : "FAIL", list.checks().size(), failures);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit quasi-eigenmodes of the linearised Prandtl equations "
                 "around a quadratic shear flow"};
    app.require_subcommand(1);

    EvalConfig ec;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one registered function at a point");
    eval->add_option("name", ec.name, "function name")->required();
    eval->add_option("re", ec.re, "real part of the argument")->required();
    eval->add_option("im", ec.im, "imaginary part of the argument");
    eval->add_option("--a", ec.a_re, "kummer_m parameter a (real part)");
    eval->add_option("--a-im", ec.a_im, "kummer_m parameter a (imaginary part)");
    eval->add_option("--c", ec.c_re, "kummer_m parameter c (real part)");
    eval->add_option("--c-im", ec.c_im, "kummer_m parameter c (imaginary part)");
    eval->add_option("--tau-re", ec.tau_re, "tau (real part) for x_tau1/x_tau2");
    eval->add_option("--tau-im", ec.tau_im, "tau (imaginary part)");
    eval->add_option("--mu-re", ec.mu_re, "mu (real part) for the eta-frame families");
    eval->add_option("--mu-im", ec.mu_im, "mu (imaginary part)");
    eval->add_option("--eta-star-re", ec.eta_star_re, "base point (real part) for upsilon1/2");
    eval->add_option("--eta-star-im", ec.eta_star_im, "base point (imaginary part)");
    eval->add_option("--upp", ec.upp, "critical-point curvature for V")
        ->each([&ec](const std::string&) { ec.upp_given = true; });
    eval->add_option("--a-loc", ec.a_loc, "critical-point location for V");

    ModeConfig mc;
    CLI::App* mode = app.add_subcommand("mode", "sample a stream-function profile to CSV");
    mode->add_option("--alpha", mc.alpha, "shear profile offset");
    mode->add_option("--beta", mc.beta, "shear profile curvature (negative)");
    mode->add_option("--a", mc.a, "critical-point location (nonnegative)");
    mode->add_option("--k", mc.k, "tangential wavenumber (nonzero integer)");
    mode->add_option("--sigma-re", mc.sigma_re, "growth-rate coefficient (real part)");
    mode->add_option("--sigma-im", mc.sigma_im, "growth-rate coefficient (imaginary part)");
    mode->add_option("--c0-re", mc.c0_re, "quadratic-branch weight (real part)");
    mode->add_option("--c0-im", mc.c0_im, "quadratic-branch weight (imaginary part)");
    mode->add_option("--c1-re", mc.c1_re, "first-branch weight (real part)");
    mode->add_option("--c1-im", mc.c1_im, "first-branch weight (imaginary part)");
    mode->add_option("--c2-re", mc.c2_re, "second-branch weight (real part)");
    mode->add_option("--c2-im", mc.c2_im, "second-branch weight (imaginary part)");
    mode->add_option("--grid", mc.grid, "Y_MIN Y_MAX N sampling grid")->expected(3);
    mode->add_option("--out", mc.out, "output CSV path")->required();
    mode->add_flag("--no-slip", mc.no_slip,
                   "solve the boundary system and use its first nullspace triple");

    ShearLayerConfig sc;
    CLI::App* shear = app.add_subcommand("shearlayer", "sample the shear-layer profile V to CSV");
    shear->add_flag("--example", sc.example, "use the example flow 2 y e^(-y^2)");
    shear->add_option("--upp", sc.upp, "curvature at the critical point (negative)")
        ->each([&sc](const std::string&) { sc.upp_given = true; });
    shear->add_option("--a", sc.a, "critical-point location");
    shear->add_option("--grid", sc.grid, "Z_MIN Z_MAX N sampling grid")->expected(3);
    shear->add_option("--out", sc.out, "output CSV path")->required();

    VerifyConfig vc;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", vc.suite,
                       "recurrences | odes | criterion | asymptotics | boundary | all")
        ->required();
    verify->add_option("--seed", vc.seed, "sample-point seed");
    verify->add_option("--perturb-tau-re", vc.perturb_tau_re,
                       "shift applied to tau before the criterion suite (sensitivity hook)");
    verify->add_option("--tol-rel", vc.tol_rel, "override for residual thresholds")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tol-abs", vc.tol_abs, "override for absolute thresholds")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", vc.out, "write the JSON report here instead of stderr");

    CLI11_PARSE(app, argc, argv);

    if (eval->parsed()) return run_eval(ec);
    if (mode->parsed()) return run_mode(mc);
    if (shear->parsed()) return run_shearlayer(sc);
    if (verify->parsed()) return run_verify(vc);
    return 0;
}
