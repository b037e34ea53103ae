// Closed-form evaluators for the explicit solution families: the X and Y
// Kummer-form branches, the power-series branches R, the spectral-criterion
// pair (tau, W), the oscillator kernels psi and the mu = 1 kernel g, the
// semi-explicit negative-odd-mu solutions, ladder-operator action, and the
// explicit mu = -1 integral-operator solutions.
#pragma once

#include <functional>
#include <vector>

#include "prandtl/core.hpp"

namespace prandtl::solutions {

// Kummer parameters attached to tau; b = a + 1 and d = c + 1.
struct TauConstants {
    Complex a_tau;
    Complex b_tau;
    Complex c_tau;
    Complex d_tau;
};

TauConstants tau_constants(Complex tau);

// Guard distance around the double poles z^2 = tau (and eta^2 = mu).
inline constexpr double kSingularGuard = 1e-10;

// The two solution branches in the z frame; branch 1 is even, 2 is odd.
Complex x_tau(Complex tau, int branch, Complex z);

// The two solution branches in the rotated eta frame (compact Kummer form).
Complex y_mu(Complex mu, int branch, Complex eta);

// Power-series coefficients: kind 'a' for the even branch, 'b' for the odd.
Complex series_coeff(Complex mu, char kind, int n);

// Same coefficient in mantissa-exponent form, value = result * 2^(*exp2).
// The coefficients decay superfactorially and leave the double range near
// n ~ 170; this form keeps deep indices usable for recurrence checks.
Complex series_coeff_scaled(Complex mu, char kind, int n, int* exp2);

// Truncated power series R_{mu,1} (even) / R_{mu,2} (odd); 200 terms or
// tail below 1e-17 of the partial sum, whichever comes first.
Complex r_series(Complex mu, int branch, Complex eta);

// The unique spectral-criterion pair: tau = e^(5 i pi/4) and the explicit
// transition profile W with W(-inf) = 0, W(+inf) = 1 on the real line.
Complex tau_criterion();
Complex w_criterion(Complex z);

// Oscillator kernels: -psi'' + eta^2 psi = (mu + 2) psi, normalized so that
// psi_{mu,1}(0) = 1 and psi_{mu,2}'(0) = 1.
Complex psi_mu(Complex mu, int branch, Complex eta);
Complex psi_mu_prime(Complex mu, int branch, Complex eta);

// Replacement kernel for mu = 1: g(eta) = e^(eta^2/2) erf(eta), which the
// shifted oscillator maps to -2 g.
Complex g_mu1(Complex eta);
Complex g_mu1_prime(Complex eta);

// Exact integer polynomial data for the negative-odd eigenvalues
// mu = -(2m+3), produced by applying the down operator m times to the
// m = 0 seeds. Branch i is p(eta) e^(eta^2/2); branch j is
// q(eta) e^(eta^2/2) Int_0^eta e^(-s^2) ds + qt(eta) e^(-eta^2/2).
// The stored coefficient vectors are unnormalized; the prefactor fractions
// carry the normalization making psi(0) = 1 or psi'(0) = 1.
struct LadderPolynomials {
    std::vector<long long> p;
    std::vector<long long> q;
    std::vector<long long> qt;
    long long i_num = 1, i_den = 1;
    long long j_num = 1, j_den = 1;
};

const LadderPolynomials& neg_odd_polynomials(int m);

// Evaluate the negative-odd-mu solution for mu = -(2m+3); branch is 'i'
// (polynomial times e^(eta^2/2)) or 'j' (the error-function companion).
Complex psi_neg_odd(int m, char branch, Complex eta);

// Which numbered branch (1 or 2) the 'i' solution occupies for this m:
// 1 when m is even, 2 when m is odd ('j' takes the other slot).
int neg_odd_branch_of_i(int m);

// Ladder action on an evaluator: up is eta f - f', down is eta f + f',
// with f' computed by a Cauchy derivative.
Complex ladder(char direction, const std::function<Complex(Complex)>& f, Complex eta);

// Explicit mu = -1, eta* = 0 integral-operator solutions; branch 2 uses
// quadrature for its two erfi integrals.
Complex upsilon_m1_explicit(int branch, Complex eta);

}  // namespace prandtl::solutions
