// Full mode assembly: the integral-operator basis Upsilon, the no-slip
// coefficient solve, the stream function phi_k, the velocity field and
// profile sampling / CSV export.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "prandtl/core.hpp"
#include "prandtl/frames.hpp"

namespace prandtl::modes {

// Weights of the three basis solutions: c0 multiplies the quadratic
// mu - eta^2, c1 and c2 the two integral-operator branches.
struct CoefficientTriple {
    Complex c0{0.0, 0.0};
    Complex c1{0.0, 0.0};
    Complex c2{0.0, 0.0};
};

// The solution basis attached to (mu, eta_star). Branch 2's kernel switches
// from psi_{mu,2} to g(eta) = e^(eta^2/2) erf(eta) when mu = 1.
class UpsilonBasis {
  public:
    UpsilonBasis(Complex mu, Complex eta_star);

    Complex mu() const { return mu_; }
    Complex eta_star() const { return eta_star_; }
    bool special_mu1() const { return special_mu1_; }

    Complex kernel(int branch, Complex xi) const;
    Complex kernel_prime(int branch, Complex xi) const;
    Complex quadratic(Complex eta) const { return mu_ - eta * eta; }

  private:
    Complex mu_;
    Complex eta_star_;
    bool special_mu1_ = false;
};

// Integral-operator solution on kernel psi = basis branch 1 or 2:
//   Upsilon(eta) = Int_{eta*}^{eta} (1 + (eta^2 - xi^2)/2) psi(xi) dxi
//                  - psi'(eta*)/2
// and its derivative  Upsilon'(eta) = psi(eta) + eta Int_{eta*}^{eta} psi.
Complex upsilon(const UpsilonBasis& basis, int branch, Complex eta);
Complex upsilon_prime(const UpsilonBasis& basis, int branch, Complex eta);

namespace detail {
// Nullspace of the 2x3 system with the given rows; throws DegenerateSystem
// when both rows are numerically zero.
std::vector<CoefficientTriple> solve_rows(const std::array<Complex, 3>& r1,
                                          const std::array<Complex, 3>& r2);
}  // namespace detail

// Nullspace basis of the no-slip system
//   [ mu - eta*^2   -psi1'(eta*)/2   -psi2'(eta*)/2 ] (c0)   (0)
//   [ -2 eta*        psi1(eta*)       psi2(eta*)    ] (c1) = (0),
//                                                      (c2)
// each triple scaled so its largest-modulus component (lowest index on
// ties) is exactly 1. One triple when the matrix has rank 2, two when it
// degenerates to rank 1.
std::vector<CoefficientTriple> solve_boundary_coefficients(Complex mu, Complex eta_star);

// phi_k(y) = c0 (mu - eta(y)^2) + c1 Upsilon_1(eta(y)) + c2 Upsilon_2(eta(y))
// with eta(y) from the frame, and its y derivative by the chain rule
// (d eta/dy = rot * scale).
Complex stream_function(const frames::Frame& f, const CoefficientTriple& c, double y);
Complex stream_function_prime(const frames::Frame& f, const CoefficientTriple& c, double y);

// u = phi_k'(y) E and v = -i k phi_k(y) E, E = exp(i k x + sigma sqrt|k| t).
struct Velocity {
    Complex u;
    Complex v;
};
Velocity velocity_field(const frames::Frame& f, const CoefficientTriple& c,
                        double t, double x, double y);

// Uniform grid sampling of phi_k on [y_min, y_max], with the frame and
// coefficients kept for metadata export.
struct SampledProfile {
    std::vector<double> coords;
    std::vector<Complex> values;
    frames::Frame frame;
    CoefficientTriple coeffs;
};

SampledProfile sample_profile(const frames::Frame& f, const CoefficientTriple& c,
                              double y_min, double y_max, int n);

// Shared CSV format: header `<coord_name>,re,im`, then one row per sample
// with 17 significant digits.
void write_csv(const std::string& path, const std::string& coord_name,
               const std::vector<double>& coords, const std::vector<Complex>& values);

// CSV at `path` plus a `<path>.meta.json` sidecar holding the frame
// snapshot, the coefficient triple and the grid.
void write_profile_csv(const SampledProfile& profile, const std::string& path);

std::string profile_meta_json(const SampledProfile& profile);

}  // namespace prandtl::modes
