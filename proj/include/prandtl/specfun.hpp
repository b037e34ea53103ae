// Complex special functions: Pochhammer symbol, Kummer's confluent
// hypergeometric function M(a,c,z) with its derivative identity, the
// complex Gamma function, and the error functions erf/erfi on C.
#pragma once

#include "prandtl/core.hpp"

namespace prandtl::specfun {

// Parameter bundle for M(a,c,zeta). The invariant c not in {0,-1,-2,...}
// is checked (to tolerance 1e-12) when the bundle is evaluated.
struct KummerArgs {
    Complex a;
    Complex c;
    Complex zeta;
};

// True when z lies within tol of a nonpositive integer; if so and out is
// non-null, *out receives that integer (<= 0).
bool near_nonpositive_integer(Complex z, double tol, long* out = nullptr);

// Rising factorial a(a+1)...(a+n-1); 1 for n = 0.
Complex pochhammer(Complex a, int n);

// M(a,c,zeta) = sum_n (a)_n/(c)_n zeta^n/n!. Exact finite sum when a is a
// nonpositive integer; Taylor summation with a compensated accumulator
// otherwise, switching to the large-|zeta| expansion past the crossover.
Complex kummer_m(Complex a, Complex c, Complex zeta);
Complex kummer_m(const KummerArgs& args);

// dM/dzeta = (a/c) M(a+1, c+1, zeta).
Complex kummer_m_prime(Complex a, Complex c, Complex zeta);
Complex kummer_m_prime(const KummerArgs& args);

// erf(z) = (2z/sqrt(pi)) M(1/2, 3/2, -z^2); entire and odd.
Complex erf_c(Complex z);

// erfi(z) = -i erf(iz).
Complex erfi_c(Complex z);

// Complex Gamma via a Lanczos approximation with reflection for Re z < 1/2.
Complex gamma_c(Complex z);

namespace detail {

// Truncated large-|zeta| expansion of M without sector/parameter guards:
// Gamma(c)/Gamma(a) e^zeta zeta^(a-c) sum_s (c-a)_s (1-a)_s / (s! zeta^s).
// Callers are responsible for staying inside |arg zeta| < pi/2 and away
// from nonpositive-integer a. Exposed for the asymptotics module.
Complex kummer_asymptotic_sum(Complex a, Complex c, Complex zeta, int terms);

// Plain Taylor sum with the compensated accumulator and stopping rule.
Complex kummer_taylor(Complex a, Complex c, Complex zeta);

// Exact polynomial sum for a = -n.
Complex kummer_polynomial(long n, Complex c, Complex zeta);

}  // namespace detail

}  // namespace prandtl::specfun
