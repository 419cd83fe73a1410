#pragma once

#include <stdexcept>
#include <string>

namespace rdshock {

/// Numerical failure in a solver or evaluator. The CLI maps these to exit code 3.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation requested inside the guard band around a diffusivity root,
/// where the reaction term has a simple pole.
class PoleAtRootError : public NumericError {
public:
    PoleAtRootError(double u, double root)
        : NumericError("reaction evaluated at u=" + std::to_string(u) +
                       ", inside the pole guard around the diffusivity root " +
                       std::to_string(root)),
          u(u), root(root) {}
    double u;
    double root;
};

/// Flux-potential inversion target outside the range of Phi on [0, 1].
class NoRootError : public NumericError {
public:
    explicit NoRootError(double level)
        : NumericError("no u in [0,1] with Phi(u) = " + std::to_string(level)),
          level(level) {}
    double level;
};

/// A shock pair was found but violates u_l > 0 (or landed outside (0,a)x(b,1)).
class InfeasibleShockError : public NumericError {
public:
    InfeasibleShockError(double u_l, double u_r)
        : NumericError("shock endpoints infeasible: u_l=" + std::to_string(u_l) +
                       ", u_r=" + std::to_string(u_r)),
          u_l(u_l), u_r(u_r) {}
    double u_l;
    double u_r;
};

/// Nonlinear solve stalled; carries the final residuals for diagnosis.
class NoConvergenceError : public NumericError {
public:
    NoConvergenceError(const std::string& what, double r1, double r2)
        : NumericError(what + " (residuals " + std::to_string(r1) + ", " +
                       std::to_string(r2) + ")"),
          residual1(r1), residual2(r2) {}
    double residual1;
    double residual2;
};

/// A shock level that the profile does not attain although it is multi-valued.
class LevelNotCrossedError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Finite-difference stencil would straddle a shock or fold.
class StencilTooCloseError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Bad configuration file or CLI usage. The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rdshock
