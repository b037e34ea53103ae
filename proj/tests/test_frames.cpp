#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "prandtl/frames.hpp"

namespace {

using prandtl::Complex;
namespace frames = prandtl::frames;

constexpr double pi = std::numbers::pi;

frames::Frame reference_frame() {
    frames::ShearFlow shear;  // alpha 0, beta -1, a 0
    frames::ModeSpec mode;
    mode.k = 1;
    mode.sigma = Complex{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};
    return frames::build_frame(shear, mode);
}

}  // namespace

TEST_CASE("reference frame lands on the spectral pair") {
    const frames::Frame f = reference_frame();
    CHECK(f.sign == 1);
    CHECK(f.scale == doctest::Approx(1.0).epsilon(1e-14));
    const Complex tau_want = std::polar(1.0, 5.0 * pi / 4.0);
    CHECK(std::abs(f.tau - tau_want) < 1e-14);
    CHECK(std::abs(f.mu - Complex{-1.0, 0.0}) < 1e-14);
    CHECK(f.z_star == 0.0);
    CHECK(std::abs(f.eta_star) < 1e-15);
    CHECK(std::abs(f.rot - std::polar(1.0, -pi / 8.0)) < 1e-15);
}

TEST_CASE("mu is the signed quarter-turn of tau") {
    // Substituting eta = e^(-i s pi/8) z into tau - s z^2 factors it as
    // s e^(i s pi/4) (mu - eta^2) with mu = s tau e^(-i s pi/4), so the
    // quarter-turn picks up an overall sign for negative frequencies.
    frames::ShearFlow shear;
    shear.alpha = 0.3;
    shear.beta = -2.0;
    shear.a = 0.5;
    for (const long long k : {3LL, -3LL}) {
        frames::ModeSpec mode;
        mode.k = k;
        mode.sigma = Complex{0.4, -0.9};
        const frames::Frame f = frames::build_frame(shear, mode);
        const double s = k > 0 ? 1.0 : -1.0;
        const Complex expect = s * f.tau * std::polar(1.0, -s * pi / 4.0);
        CHECK(std::abs(f.mu - expect) < 1e-14);
        CHECK(std::abs(f.rot - std::polar(1.0, -s * pi / 8.0)) < 1e-15);
    }
}

TEST_CASE("build_frame validates its inputs") {
    frames::ShearFlow shear;
    frames::ModeSpec mode;
    shear.beta = 0.5;
    CHECK_THROWS_AS(frames::build_frame(shear, mode), prandtl::InvalidShear);
    shear.beta = -1.0;
    shear.a = -0.1;
    CHECK_THROWS_AS(frames::build_frame(shear, mode), prandtl::InvalidShear);
    shear.a = 0.0;
    mode.k = 0;
    CHECK_THROWS_AS(frames::build_frame(shear, mode), prandtl::InvalidMode);
}

TEST_CASE("coordinate maps compose to the identity") {
    frames::ShearFlow shear;
    shear.alpha = -0.2;
    shear.beta = -2.0;
    shear.a = 1.5;
    frames::ModeSpec mode;
    mode.k = 8;
    mode.sigma = Complex{0.1, 0.2};
    const frames::Frame f = frames::build_frame(shear, mode);
    CHECK(f.scale == doctest::Approx(2.0).epsilon(1e-14));  // (2*8)^(1/4)
    CHECK(f.z_star == doctest::Approx(-3.0).epsilon(1e-14));

    const double y = 0.7;
    const double z = frames::y_to_z(f, y);
    CHECK(z == doctest::Approx((y - shear.a) * f.scale).epsilon(1e-14));
    CHECK(frames::z_to_y(f, z) == doctest::Approx(y).epsilon(1e-13));

    const Complex eta = frames::z_to_eta(f, z);
    CHECK(std::abs(eta - f.rot * z) < 1e-14);
    CHECK(frames::eta_to_z(f, eta) == doctest::Approx(z).epsilon(1e-13));
    CHECK(std::abs(frames::y_to_eta(f, y) - eta) < 1e-14);
    CHECK(frames::eta_to_y(f, eta) == doctest::Approx(y).epsilon(1e-13));

    // eta_star is the image of the wall y = 0.
    CHECK(std::abs(f.eta_star - frames::y_to_eta(f, 0.0)) < 1e-14);
}

TEST_CASE("inputs survive a JSON round trip") {
    frames::ShearFlow shear;
    shear.alpha = 1.25;
    shear.beta = -0.75;
    shear.a = 2.0;
    frames::ModeSpec mode;
    mode.k = -17;
    mode.sigma = Complex{0.125, -3.5};
    const std::string text = frames::inputs_to_json(shear, mode);

    frames::ShearFlow shear2;
    frames::ModeSpec mode2;
    frames::inputs_from_json(text, &shear2, &mode2);
    CHECK(shear2.alpha == shear.alpha);
    CHECK(shear2.beta == shear.beta);
    CHECK(shear2.a == shear.a);
    CHECK(mode2.k == mode.k);
    CHECK(mode2.sigma == mode.sigma);
}

TEST_CASE("frame_to_json carries the derived constants") {
    const frames::Frame f = reference_frame();
    const std::string text = frames::frame_to_json(f);
    CHECK(text.find("tau_re") != std::string::npos);
    CHECK(text.find("mu_re") != std::string::npos);
    CHECK(text.find("scale") != std::string::npos);
    CHECK(text.find("eta_star_re") != std::string::npos);
}
