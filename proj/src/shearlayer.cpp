#include "prandtl/shearlayer.hpp"

#include <cmath>
#include <numbers>

#include "prandtl/specfun.hpp"

namespace prandtl::shearlayer {

namespace {
constexpr double kPi = std::numbers::pi;

double heaviside(double z) {
    if (z > 0.0) return 1.0;
    if (z < 0.0) return 0.0;
    return 0.5;
}
}  // namespace

CriticalPoint example_flow_critical_point() {
    return CriticalPoint(1.0 / std::sqrt(2.0), -4.0 * std::sqrt(2.0) / std::sqrt(std::exp(1.0)));
}

Complex shear_layer_V(const CriticalPoint& cp, double z) {
    const double mag = std::abs(cp.Upp);
    const Complex f = std::pow(mag / 2.0, 0.25) * std::polar(1.0, -kPi / 8.0) * z;
    const Complex f2 = f * f;
    const Complex bracket = 0.5 + 0.5 * specfun::erf_c(f / std::sqrt(2.0)) +
                            f * std::exp(-0.5 * f2) / (std::sqrt(2.0 * kPi) * (1.0 + f2)) -
                            heaviside(z);
    return std::polar(1.0, 5.0 * kPi / 4.0) * (std::sqrt(mag) / std::sqrt(2.0)) *
           (1.0 + f2) * bracket;
}

Complex v_sl(const CriticalPoint& cp, double eps, double y) {
    if (!(eps > 0.0)) throw Error("v_sl: eps must be positive");
    return std::sqrt(eps) * shear_layer_V(cp, (y - cp.a) / std::pow(eps, 0.25));
}

}  // namespace prandtl::shearlayer
