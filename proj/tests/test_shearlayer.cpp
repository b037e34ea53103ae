#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "prandtl/shearlayer.hpp"
#include "prandtl/solutions.hpp"

namespace {

using prandtl::Complex;
namespace sl = prandtl::shearlayer;
namespace sol = prandtl::solutions;

constexpr double pi = std::numbers::pi;

}  // namespace

TEST_CASE("critical point invariant") {
    CHECK_THROWS_AS(sl::CriticalPoint(0.0, 0.5), prandtl::InvalidShear);
    CHECK_THROWS_AS(sl::CriticalPoint(0.0, 0.0), prandtl::InvalidShear);
    const sl::CriticalPoint cp(1.0, -2.0);
    CHECK(cp.a == 1.0);
    CHECK(cp.Upp == -2.0);
}

TEST_CASE("example flow critical point values") {
    const sl::CriticalPoint cp = sl::example_flow_critical_point();
    CHECK(std::abs(cp.a - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(cp.Upp - (-4.0 * std::sqrt(2.0) / std::sqrt(std::exp(1.0)))) < 1e-14);
    // These are U'(a) = 0 and U''(a) for U(y) = 2 y e^(-y^2).
    const double a = cp.a;
    const double up = 2.0 * std::exp(-a * a) * (1.0 - 2.0 * a * a);
    CHECK(std::abs(up) < 1e-15);
    const double upp = 2.0 * std::exp(-a * a) * (4.0 * a * a * a - 6.0 * a);
    CHECK(std::abs(cp.Upp - upp) < 1e-13);
}

TEST_CASE("profile factors through the transition profile") {
    // V(z) = e^(5 i pi/4) sqrt(|Upp|)/sqrt(2) (1 + f^2) (W(kappa z) - H(z))
    // with kappa = (|Upp|/2)^(1/4) and f = kappa e^(-i pi/8) z.
    const sl::CriticalPoint cp(0.3, -1.7);
    const double mag = -cp.Upp;
    const double kappa = std::pow(mag / 2.0, 0.25);
    const Complex pref = std::polar(1.0, 5.0 * pi / 4.0) * std::sqrt(mag) / std::sqrt(2.0);
    for (const double z : {-3.0, -1.0, -0.1, 0.1, 1.0, 3.0}) {
        const Complex f = kappa * std::polar(1.0, -pi / 8.0) * z;
        const double H = z > 0.0 ? 1.0 : 0.0;
        const Complex want =
            pref * (1.0 + f * f) * (sol::w_criterion(Complex{kappa * z, 0.0}) - H);
        const Complex got = sl::shear_layer_V(cp, z);
        CHECK(std::abs(got - want) < 1e-12 * std::max(1.0, std::abs(want)));
    }
    // At z = 0 the half step cancels W(0) = 1/2 exactly.
    CHECK(sl::shear_layer_V(cp, 0.0) == Complex{0.0, 0.0});
}

TEST_CASE("jump across the layer center") {
    const sl::CriticalPoint cp = sl::example_flow_critical_point();
    const double mag = -cp.Upp;
    const double d = 1e-14;
    const Complex jump = sl::shear_layer_V(cp, -d) - sl::shear_layer_V(cp, d);
    const Complex want = std::polar(1.0, 5.0 * pi / 4.0) * std::sqrt(mag) / std::sqrt(2.0);
    CHECK(std::abs(jump - want) < 1e-12);
    CHECK(std::abs(std::abs(jump) - std::sqrt(mag) / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("profile decays away from the layer") {
    const sl::CriticalPoint cp = sl::example_flow_critical_point();
    double peak = 0.0;
    for (double z = -6.0; z <= 6.0; z += 0.05) {
        peak = std::max(peak, std::abs(sl::shear_layer_V(cp, z)));
    }
    CHECK(peak > 0.0);
    CHECK(std::abs(sl::shear_layer_V(cp, 6.0)) < 1e-3 * peak);
    CHECK(std::abs(sl::shear_layer_V(cp, -6.0)) < 1e-3 * peak);
}

TEST_CASE("rescaled corrector centering and scaling") {
    const sl::CriticalPoint cp(0.8, -2.5);
    const double eps = 0.01;
    // At y = a the argument is 0, so v_sl vanishes exactly.
    CHECK(sl::v_sl(cp, eps, cp.a) == Complex{0.0, 0.0});
    const double y = 1.1;
    const Complex want =
        std::sqrt(eps) * sl::shear_layer_V(cp, (y - cp.a) / std::pow(eps, 0.25));
    CHECK(std::abs(sl::v_sl(cp, eps, y) - want) < 1e-15);
    CHECK_THROWS_AS(sl::v_sl(cp, 0.0, 1.0), prandtl::Error);
    CHECK_THROWS_AS(sl::v_sl(cp, -0.1, 1.0), prandtl::Error);
}

TEST_CASE("layer width scales like the quarter power") {
    // Width measured as where |v_sl| falls to half its near-center plateau;
    // ratio between eps and eps/16 should be 2 (quarter power), i.e. the
    // bigger eps gives twice the width.
    const sl::CriticalPoint cp = sl::example_flow_critical_point();
    const auto width = [&](double eps) {
        const double probe = std::abs(sl::v_sl(cp, eps, cp.a + 0.01 * std::pow(eps, 0.25)));
        double w = 0.0;
        for (double d = 1e-4; d < 2.0; d += 1e-4) {
            if (std::abs(sl::v_sl(cp, eps, cp.a + d)) < 0.25 * probe) {
                w = d;
                break;
            }
        }
        return w;
    };
    const double w1 = width(1.0 / 16.0);
    const double w2 = width(1.0 / 256.0);
    REQUIRE(w2 > 0.0);
    CHECK(std::abs(w1 / w2 - 2.0) < 0.1);
}
