#include "prandtl/frames.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

namespace prandtl::frames {

namespace {
constexpr double kPi = std::numbers::pi;
}

Frame build_frame(const ShearFlow& shear, const ModeSpec& mode) {
    if (shear.beta >= 0.0) throw InvalidShear("build_frame: beta must be negative");
    if (shear.a < 0.0) throw InvalidShear("build_frame: a must be nonnegative");
    if (mode.k == 0) throw InvalidMode("build_frame: k must be nonzero");

    Frame f;
    f.shear = shear;
    f.mode = mode;
    f.sign = mode.k > 0 ? 1 : -1;
    const double abs_beta = std::abs(shear.beta);
    const double abs_k = std::abs(static_cast<double>(mode.k));
    f.scale = std::pow(abs_beta * abs_k, 0.25);
    const double sqrt_beta = std::sqrt(abs_beta);
    const double s = static_cast<double>(f.sign);

    // tau = -i sigma / sqrt|beta| + sgn(k) alpha sqrt(|k|/|beta|)
    const Complex minus_i{0.0, -1.0};
    f.tau = minus_i * mode.sigma / sqrt_beta + s * shear.alpha * std::sqrt(abs_k) / sqrt_beta;

    // mu = -sigma e^(sgn(k) i pi/4)/sqrt|beta| + alpha sqrt|k| e^(-sgn(k) i pi/4)/sqrt|beta|
    const Complex rot_quarter = std::polar(1.0, s * kPi / 4.0);
    f.mu = -mode.sigma * rot_quarter / sqrt_beta +
           shear.alpha * std::sqrt(abs_k) * std::conj(rot_quarter) / sqrt_beta;

    f.z_star = -shear.a * f.scale;
    f.rot = std::polar(1.0, -s * kPi / 8.0);
    f.eta_star = f.rot * f.z_star;
    return f;
}

double y_to_z(const Frame& f, double y) { return f.scale * (y - f.shear.a); }

double z_to_y(const Frame& f, double z) { return z / f.scale + f.shear.a; }

Complex z_to_eta(const Frame& f, double z) { return f.rot * z; }

double eta_to_z(const Frame& f, Complex eta) {
    // rot has unit modulus, so division is multiplication by the conjugate.
    return (eta * std::conj(f.rot)).real();
}

Complex y_to_eta(const Frame& f, double y) { return z_to_eta(f, y_to_z(f, y)); }

double eta_to_y(const Frame& f, Complex eta) { return z_to_y(f, eta_to_z(f, eta)); }

std::string inputs_to_json(const ShearFlow& shear, const ModeSpec& mode) {
    nlohmann::json j;
    j["alpha"] = shear.alpha;
    j["beta"] = shear.beta;
    j["a"] = shear.a;
    j["k"] = mode.k;
    j["sigma_re"] = mode.sigma.real();
    j["sigma_im"] = mode.sigma.imag();
    return j.dump();
}

void inputs_from_json(const std::string& text, ShearFlow* shear, ModeSpec* mode) {
    const nlohmann::json j = nlohmann::json::parse(text);
    shear->alpha = j.at("alpha").get<double>();
    shear->beta = j.at("beta").get<double>();
    shear->a = j.at("a").get<double>();
    mode->k = j.at("k").get<long long>();
    mode->sigma = Complex{j.at("sigma_re").get<double>(), j.at("sigma_im").get<double>()};
}

std::string frame_to_json(const Frame& f) {
    nlohmann::json j;
    j["alpha"] = f.shear.alpha;
    j["beta"] = f.shear.beta;
    j["a"] = f.shear.a;
    j["k"] = f.mode.k;
    j["sigma_re"] = f.mode.sigma.real();
    j["sigma_im"] = f.mode.sigma.imag();
    j["sign"] = f.sign;
    j["scale"] = f.scale;
    j["tau_re"] = f.tau.real();
    j["tau_im"] = f.tau.imag();
    j["mu_re"] = f.mu.real();
    j["mu_im"] = f.mu.imag();
    j["z_star"] = f.z_star;
    j["eta_star_re"] = f.eta_star.real();
    j["eta_star_im"] = f.eta_star.imag();
    j["rot_re"] = f.rot.real();
    j["rot_im"] = f.rot.imag();
    return j.dump(2);
}

}  // namespace prandtl::frames
