// Variable and parameter transformations linking the physical description
// (y, sigma) to the rescaled (z, tau) and rotated (eta, mu) descriptions.
#pragma once

#include <string>

#include "prandtl/core.hpp"

namespace prandtl::frames {

// Quadratic shear profile alpha + beta (y - a)^2 with beta < 0, a >= 0.
struct ShearFlow {
    double alpha = 0.0;
    double beta = -1.0;
    double a = 0.0;
};

// One tangential mode: integer wavenumber k != 0 and the growth-rate
// coefficient sigma multiplying sqrt(|k|) t in the exponential.
struct ModeSpec {
    long long k = 1;
    Complex sigma{0.0, 0.0};
};

// All derived constants of the transformation chain, cached once.
struct Frame {
    ShearFlow shear;
    ModeSpec mode;
    int sign = 1;              // sgn k
    double scale = 1.0;        // (|beta| |k|)^(1/4)
    Complex tau{0.0, 0.0};
    Complex mu{0.0, 0.0};
    double z_star = 0.0;       // -a * scale
    Complex eta_star{0.0, 0.0};
    Complex rot{1.0, 0.0};     // e^(-i pi/8) for k > 0, conjugate for k < 0
};

Frame build_frame(const ShearFlow& shear, const ModeSpec& mode);

double y_to_z(const Frame& f, double y);
double z_to_y(const Frame& f, double z);
Complex z_to_eta(const Frame& f, double z);
double eta_to_z(const Frame& f, Complex eta);
Complex y_to_eta(const Frame& f, double y);
double eta_to_y(const Frame& f, Complex eta);

// JSON round trip of the input fields (field names: alpha, beta, a, k,
// sigma_re, sigma_im); frame_to_json additionally carries the derived
// constants for output metadata.
std::string inputs_to_json(const ShearFlow& shear, const ModeSpec& mode);
void inputs_from_json(const std::string& text, ShearFlow* shear, ModeSpec* mode);
std::string frame_to_json(const Frame& f);

}  // namespace prandtl::frames
