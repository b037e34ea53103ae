// Independent brute-force checks: governing-equation residuals with
// quadrature-based derivatives, recurrence verification of the power-series
// coefficients, series-vs-closed-form equivalence and no-slip boundary
// residuals. Everything here avoids the closed-form machinery it checks;
// derivatives come from Cauchy integrals, never from differentiated formulas.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "prandtl/core.hpp"
#include "prandtl/frames.hpp"
#include "prandtl/modes.hpp"

namespace prandtl::oracle {

using Evaluator = std::function<Complex(Complex)>;

// Outcome of one residual sweep. max_rel_residual is the worst pointwise
// residual after dividing by the largest term entering the identity at that
// point; scale is the largest such term magnitude seen anywhere, recorded so
// a vacuously tiny check is visible as such.
struct ResidualReport {
    std::string equation;
    std::vector<Complex> points;
    double max_rel_residual = 0.0;
    double scale = 0.0;
};

std::string report_json(const ResidualReport& report);

// Deterministic sample points: uniform draws in the rectangle, discarding
// points within `clearance` of any listed singularity.
std::vector<Complex> seeded_points(std::uint64_t seed, int count, double re_min,
                                   double re_max, double im_min, double im_max,
                                   const std::vector<Complex>& singularities = {},
                                   double clearance = 0.3);

// The governing identities a candidate evaluator can be tested against.
// kW, kX, kF live in the z frame with spectral parameter tau; the rest live
// in the eta frame with parameter mu.
enum class Equation {
    kW,            // (tau - s z^2)^2 W' + i d^3/dz^3 [(tau - s z^2) W] = 0
    kX,            // i (tau - s z^2) X'' - 6 s i z X' + ((tau - s z^2)^2 - 6 s i) X = 0
    kF,            // (tau - s z^2) F' + 2 s z F + i F''' = 0
    kUpsilon,      // (mu - eta^2) U' + 2 eta U + U''' = 0
    kR,            // (mu - eta^2) R'' - 2 eta (mu-1-eta^2) R' + (mu+1)(mu-2-eta^2) R = 0
    kSchrodinger,  // -psi'' + eta^2 psi = (mu + 2) psi
    kBsquared,     // (-d^2 + eta^2 - mu)^2 psi = 4 psi
    kLadder,       // up/down ladder image solves the mu +- 2 oscillator equation
};

struct ResidualParams {
    Complex parameter{0.0, 0.0};  // tau for the z-frame equations, mu otherwise
    int sign_k = 1;               // s in the z-frame equations
    char ladder_direction = 'u';  // 'u' or 'd', kLadder only
};

ResidualReport residual(Equation equation, const Evaluator& f,
                        const ResidualParams& params, const std::vector<Complex>& points);

// Inserts the closed-form series coefficients into their three-term
// recurrences (and the two starting conditions) for all n <= N.
ResidualReport check_recurrences(Complex mu, int N);

// Truncated power-series branch against (mu - eta^2)^2 e^(eta^2/2) times the
// compact Kummer-form branch at the given eta points.
ResidualReport series_equivalence(Complex mu, int branch,
                                  const std::vector<Complex>& eta_points);

// No-slip residual of an assembled mode: |phi_k(0)| and |phi_k'(0)| divided
// by max(1, sup |phi_k|) with the sup sampled on [0, y_ref].
ResidualReport boundary_residual(const frames::Frame& frame,
                                 const modes::CoefficientTriple& coeffs,
                                 double y_ref = 2.0);

}  // namespace prandtl::oracle
