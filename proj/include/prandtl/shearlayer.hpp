// Explicit shear-layer corrector around a non-degenerate critical point of
// the background flow: the profile V, its rescaling v_sl, and the worked
// example flow 2 y e^(-y^2).
#pragma once

#include "prandtl/core.hpp"

namespace prandtl::shearlayer {

// Non-degenerate critical point data: location a and curvature Upp < 0.
struct CriticalPoint {
    CriticalPoint(double a_, double Upp_) : a(a_), Upp(Upp_) {
        if (!(Upp < 0.0)) {
            throw InvalidShear("CriticalPoint: curvature at the critical point must be negative");
        }
    }
    double a;
    double Upp;
};

// The critical point of the example flow U(y) = 2 y e^(-y^2):
// a = 1/sqrt(2), curvature -4 sqrt(2) / sqrt(e).
CriticalPoint example_flow_critical_point();

// Shear-layer profile
//   V(z) = e^(5 i pi/4) (|Upp|^(1/2)/sqrt(2)) (1 + f^2)
//          * (1/2 + erf(f/sqrt(2))/2 + f e^(-f^2/2)/(sqrt(2 pi)(1 + f^2)) - H(z))
// with f(z) = (|Upp|/2)^(1/4) e^(-i pi/8) z and the Heaviside step H,
// H(0) = 1/2 (symmetric convention; the jump midpoint).
Complex shear_layer_V(const CriticalPoint& cp, double z);

// v_sl(y) = eps^(1/2) V((y - a)/eps^(1/4)); requires eps > 0.
Complex v_sl(const CriticalPoint& cp, double eps, double y);

}  // namespace prandtl::shearlayer
