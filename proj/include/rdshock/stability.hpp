#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "rdshock/model.hpp"
#include "rdshock/shock.hpp"

namespace rdshock {

enum class StateClass { Stable, Unstable, Marginal };

std::string to_string(StateClass cls);

/// Linear stability verdict for a constant state u_bar in {0, 1}. Since
/// D(u_bar) > 0 damps every nonzero wavenumber, the classification reduces to
/// the sign of R'(u_bar); the most unstable mode sits at alpha = 0.
struct ConstantStateReport {
    double u_bar;
    StateClass cls;
    double r_prime;              // R'(u_bar)
    double most_unstable_alpha;  // always 0
    double lambda_max;           // R'(u_bar)
    bool long_wavelength;        // growth confined to small |alpha|
};

ConstantStateReport classify_constant_state(const DiffusivityModel& model,
                                            const SolutionParams& params, double u_bar);

struct DispersionCurve {
    std::vector<double> alphas;
    std::vector<std::complex<double>> lambdas;
    double max_re_lambda;
    double alpha_at_max;
};

/// lambda(alpha) = -alpha^2 D(u_bar) + R'(u_bar) for a constant state.
DispersionCurve constant_state_dispersion(const DiffusivityModel& model,
                                          const SolutionParams& params, double u_bar,
                                          std::span<const double> alphas);

/// Essential-spectrum boundary of the travelling wave:
/// lambda(alpha) = -alpha^2 D(1) - i k D(0) alpha + R'(1).
DispersionCurve essential_spectrum_curve(const DiffusivityModel& model,
                                         const SolutionParams& params,
                                         std::span<const double> alphas);

/// Pointwise value of (1/2) D(u(z))_zz + R'(u) along the travelling wave,
/// using u_z = k Phi(u) / D(u) to take the z-derivatives through the wave.
/// The u = 1 endpoint reduces to R'(1) because Phi(1) = 0 removes every
/// derivative term.
double sturm_criterion_value(const DiffusivityModel& model, const SolutionParams& params,
                             double u);

struct SturmCriterionTrace {
    std::vector<double> u;
    std::vector<double> criterion;
    double max_value;
    double u_at_max;
};

/// Criterion sampled over [0, u_l] and [u_r, 1]; spectral stability needs the
/// maximum to be negative. n_samples points per interval plus the exact
/// endpoints u = 0 and u = 1 (inner endpoints offset by delta = 1e-9).
SturmCriterionTrace sturm_criterion_trace(const DiffusivityModel& model,
                                          const SolutionParams& params, const ShockPair& pair,
                                          int n_samples);

struct StabilityGridSpec {
    double a_min = 0.01, a_max = 1.0;
    int na = 100;
    double b_min = 0.01, b_max = 1.0;
    int nb = 100;
    int trace_samples = 200;
};

struct StabilityCell {
    double a, b;
    bool shock_feasible;  // b < a (2 + sqrt(3)), i.e. u_l > 0
    bool sturm_ok;        // criterion < 0 over the (clamped) trace intervals
    bool stable;          // shock_feasible && sturm_ok
};

struct StabilityRegionMask {
    StabilityGridSpec spec;
    std::vector<StabilityCell> cells;  // only nodes with 0 < a < b < 1, a + b < 1
};

/// Scans (a, b) nodes with kappa = -1 (the criterion scales by k^2, so its
/// sign is k-independent). Infeasible cells evaluate the criterion on the
/// clamped intervals so both boundary mechanisms stay distinguishable.
StabilityRegionMask stability_region_scan(const StabilityGridSpec& spec);

}  // namespace rdshock
