#include <cmath>
#include <complex>

#include <doctest.h>

#include "prandtl/quadrature.hpp"

namespace {

using prandtl::Complex;
namespace quad = prandtl::quadrature;

}  // namespace

TEST_CASE("integrate_segment on polynomials and entire functions") {
    quad::PathIntegralSpec spec;
    spec.from = Complex{0.0, 0.0};
    spec.to = Complex{1.0, 1.0};

    const Complex cube = quad::integrate_segment([](Complex z) { return z * z; }, spec);
    const Complex want = spec.to * spec.to * spec.to / 3.0;
    CHECK(std::abs(cube - want) < 1e-13);

    const Complex expo = quad::integrate_segment([](Complex z) { return std::exp(z); }, spec);
    CHECK(std::abs(expo - (std::exp(spec.to) - 1.0)) < 1e-12);
}

TEST_CASE("integrate_segment handles oscillatory integrands") {
    quad::PathIntegralSpec spec;
    spec.from = Complex{0.0, 0.0};
    spec.to = Complex{10.0, 0.0};
    const Complex got = quad::integrate_segment(
        [](Complex z) { return std::exp(Complex{0.0, 1.0} * z); }, spec);
    const Complex want = (std::exp(Complex{0.0, 10.0}) - 1.0) / Complex{0.0, 1.0};
    CHECK(std::abs(got - want) < 1e-11);
}

TEST_CASE("integrate_segment zero-length path is zero") {
    quad::PathIntegralSpec spec;
    spec.from = Complex{2.0, -1.0};
    spec.to = spec.from;
    const Complex got =
        quad::integrate_segment([](Complex z) { return std::exp(z * z); }, spec);
    CHECK(got == Complex{0.0, 0.0});
}

TEST_CASE("integrate_segment reports depth exhaustion with its best estimate") {
    quad::PathIntegralSpec spec;
    spec.from = Complex{0.0, 0.0};
    spec.to = Complex{1.0, 0.0};
    spec.max_depth = 4;
    spec.rel_tol = 1e-15;
    spec.abs_tol = 1e-16;
    // Integrable endpoint singularity, too sharp for four bisection levels.
    const auto f = [](Complex z) { return 1.0 / std::sqrt(z + 1e-12); };
    try {
        quad::integrate_segment(f, spec);
        FAIL("expected MaxDepthExceeded");
    } catch (const prandtl::MaxDepthExceeded& e) {
        // True value is essentially 2 sqrt(1) = 2.
        CHECK(std::abs(e.best_estimate - Complex{2.0, 0.0}) < 0.2);
        CHECK(e.error_bound > 0.0);
    }
}

TEST_CASE("cauchy_derivative reproduces derivatives of exp") {
    const Complex z0{0.3, 0.2};
    const Complex want = std::exp(z0);
    for (int order = 1; order <= 3; ++order) {
        quad::DerivativeSpec spec;
        spec.center = z0;
        spec.order = order;
        const Complex got =
            quad::cauchy_derivative([](Complex z) { return std::exp(z); }, spec);
        CHECK(std::abs(got - want) / std::abs(want) < 1e-9);
    }
}

TEST_CASE("cauchy_derivative on a polynomial is near exact") {
    quad::DerivativeSpec spec;
    spec.center = Complex{1.0, -2.0};
    spec.order = 2;
    const Complex got =
        quad::cauchy_derivative([](Complex z) { return z * z * z; }, spec);
    CHECK(std::abs(got - 6.0 * spec.center) < 1e-10);
}

TEST_CASE("cauchy_derivative validates its inputs") {
    quad::DerivativeSpec bad_order;
    bad_order.order = 4;
    CHECK_THROWS_AS(quad::cauchy_derivative([](Complex z) { return z; }, bad_order),
                    prandtl::Error);
    quad::DerivativeSpec bad_radius;
    bad_radius.radius = 0.0;
    CHECK_THROWS_AS(quad::cauchy_derivative([](Complex z) { return z; }, bad_radius),
                    prandtl::Error);
}

TEST_CASE("derivative_radius shrinks near declared singularities") {
    CHECK(quad::derivative_radius(Complex{0.0, 0.0}, {}) == 0.5);
    const double r = quad::derivative_radius(Complex{0.0, 0.0}, {Complex{1.0, 0.0}});
    CHECK(std::abs(r - 0.4) < 1e-15);
    const double far = quad::derivative_radius(Complex{0.0, 0.0}, {Complex{10.0, 0.0}});
    CHECK(far == 0.5);
    const double near2 = quad::derivative_radius(
        Complex{0.0, 0.0}, {Complex{5.0, 0.0}, Complex{0.0, 0.25}});
    CHECK(std::abs(near2 - 0.1) < 1e-15);
}
