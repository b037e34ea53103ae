// Large-argument behaviour: truncated Kummer expansions, leading-order growth
// laws for the integral-operator solutions, growth classification of the
// spectral parameter, and the boundedness scan that isolates the criterion pair.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prandtl/core.hpp"

namespace prandtl::asymptotics {

// Constants entering the leading-order growth laws on one rotation branch.
// b is the frame rotation exp(-i sign_k pi/8); powers (b^2 z^2)^gamma are made
// single-valued by fixing arg(b^2) = -sign_k pi/4, so
//   (b^2 z^2)^gamma = exp(gamma (log z^2 + i arg_b2)),  z real nonzero.
struct AsymptoticConstants {
    Complex mu;
    Complex C1;      // Gamma(1/2) / Gamma(-(mu+1)/4), zero at the poles
    Complex C2;      // Gamma(3/2) / Gamma((1-mu)/4), zero at the poles
    Complex b;
    double arg_b2 = 0.0;
};

AsymptoticConstants asymptotic_constants(Complex mu, int sign_k);

// Truncated large-|zeta| expansion
//   Gamma(c)/Gamma(a) e^zeta zeta^(a-c) sum_{s<terms} (c-a)_s (1-a)_s / (s! zeta^s)
// valid in the sector |arg zeta| < pi/2 - 0.05. Throws SectorViolation outside
// the sector and ExcludedParameter when a or c - a sits on a nonpositive
// integer (the expansion degenerates there).
Complex kummer_asymptotic(Complex a, Complex c, Complex zeta, int terms = 8);

// Leading-order value of the integral-operator solution with base point 0 at
// eta = b z for real z != 0. Dispatches on mu: the generic power law away from
// odd integers, the polynomial-collapse laws at mu = -(2m+3). Throws
// UnsupportedMu at mu = -1 and at positive odd integers, where the surviving
// branch stays comparable to mu - eta^2 and no single growth law applies.
Complex upsilon_asymptotic(Complex mu, int branch, int sign_k, double z);

// How solutions at this spectral parameter grow along the rotated rays.
struct GrowthClass {
    enum Kind { kBoundState, kSpecialMuOne, kGenericExponential };
    Kind kind = kGenericExponential;
    // mu = 2n - 1 for the discrete family; -1 otherwise.
    int n = -1;
    std::string note;
};

GrowthClass classify_growth(Complex mu);

// One scanned spectral value: the ray-end ratios |Upsilon_i(+-bZ)/(mu - b^2 Z^2)|
// for both branches and the resulting verdict.
struct ScanRecord {
    Complex mu;
    double ratio1_plus = 0.0;
    double ratio1_minus = 0.0;
    double ratio2_plus = 0.0;
    double ratio2_minus = 0.0;
    bool bounded = false;
};

struct ScanReport {
    double Z = 8.0;
    std::vector<ScanRecord> records;
    std::vector<Complex> bounded_mus;
};

// Default grid: 21 x 21 points with Re mu in [-3, 1], Im mu in [-2, 2],
// keeping only Re mu + Im mu < 0 (decaying temporal factor) and |mu| <= 3.
std::vector<Complex> default_scan_grid();

// Evaluates the quadrature-built solutions at eta = +-bZ for every mu in the
// grid. A value is bounded when at least one branch keeps both ray-end ratios
// at or below 1e3 while staying at or above 1e-3, so the profile can reach the
// far-field limits without blowing up. On the default grid only mu = -1 passes.
ScanReport criterion_uniqueness_scan(const std::vector<Complex>& grid, double Z = 8.0);

std::string scan_report_json(const ScanReport& report);

}  // namespace prandtl::asymptotics
