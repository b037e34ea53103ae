// Shared scalar type and error hierarchy for the prandtl-modes library.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace prandtl {

using Complex = std::complex<double>;

// Base class for every library error; subclasses identify the failure kind.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A series or iteration failed to reach the requested tolerance.
struct NonConvergent : Error {
    explicit NonConvergent(const std::string& msg) : Error(msg) {}
};

// Gamma evaluated at a nonpositive integer.
struct PoleArgument : Error {
    explicit PoleArgument(const std::string& msg) : Error(msg) {}
};

// Evaluation point inside the guard distance of a double pole.
struct SingularPoint : Error {
    explicit SingularPoint(const std::string& msg) : Error(msg) {}
};

// Shear profile curvature has the wrong sign.
struct InvalidShear : Error {
    explicit InvalidShear(const std::string& msg) : Error(msg) {}
};

// Wavenumber zero or otherwise unusable.
struct InvalidMode : Error {
    explicit InvalidMode(const std::string& msg) : Error(msg) {}
};

// Adaptive bisection ran out of depth; carries the best estimate found.
struct MaxDepthExceeded : Error {
    MaxDepthExceeded(const std::string& msg, Complex best, double bound)
        : Error(msg), best_estimate(best), error_bound(bound) {}
    Complex best_estimate;
    double error_bound;
};

// Argument outside the validity sector of an asymptotic expansion.
struct SectorViolation : Error {
    explicit SectorViolation(const std::string& msg) : Error(msg) {}
};

// Parameter combination excluded from an asymptotic expansion.
struct ExcludedParameter : Error {
    explicit ExcludedParameter(const std::string& msg) : Error(msg) {}
};

// Asymptotic family not defined for this eigenvalue; use an exact evaluator.
struct UnsupportedMu : Error {
    explicit UnsupportedMu(const std::string& msg) : Error(msg) {}
};

// Boundary system collapsed to rank zero.
struct DegenerateSystem : Error {
    explicit DegenerateSystem(const std::string& msg) : Error(msg) {}
};

}  // namespace prandtl
