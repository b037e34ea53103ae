// Complex straight-line path integration (adaptive Gauss-Kronrod) and
// Cauchy-integral numerical differentiation of holomorphic functions.
#pragma once

#include <functional>
#include <vector>

#include "prandtl/core.hpp"

namespace prandtl::quadrature {

using Evaluator = std::function<Complex(Complex)>;

struct PathIntegralSpec {
    Complex from;
    Complex to;
    double rel_tol = 1e-11;
    double abs_tol = 1e-13;
    int max_depth = 30;  // hard ceiling 40
};

struct DerivativeSpec {
    Complex center;
    int order = 1;  // 1, 2 or 3
    double radius = 0.5;
    int nodes = 64;  // >= 32, power of two
    double rel_tol = 1e-11;
};

// Integral of f along the straight segment from..to, by adaptive 15-point
// Gauss-Kronrod bisection. A panel is accepted when its error estimate is
// below max(rel_tol * |panel value|, abs_tol scaled by panel length).
Complex integrate_segment(const Evaluator& f, const PathIntegralSpec& spec);

// n-th derivative of f at spec.center via the Cauchy integral on a circle,
// trapezoidal rule with node doubling until two consecutive levels agree.
Complex cauchy_derivative(const Evaluator& f, const DerivativeSpec& spec);

// Default derivative radius, shrunk to keep clear of declared singularities:
// min(0.5, 0.4 * distance to the nearest singularity).
double derivative_radius(Complex center, const std::vector<Complex>& singularities);

}  // namespace prandtl::quadrature
