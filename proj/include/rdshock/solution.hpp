#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rdshock/model.hpp"

namespace rdshock {

enum class SolutionFamily { Receding, Colliding, Travelling };
enum class Branch { Lower, Middle, Upper };

std::string to_string(SolutionFamily family);
std::string to_string(Branch branch);
SolutionFamily family_from_string(const std::string& name);

/// Psi(x) = c1 e^{kx} + c2 e^{-kx} and its x-derivative.
double helmholtz(const SolutionParams& params, double x);
double helmholtz_derivative(const SolutionParams& params, double x);

/// Throws std::invalid_argument when (c1, c2) do not match the family:
/// receding needs c2 = -c1 with c1 < 0, colliding c1 < 0 and c2 < 0,
/// travelling c2 = 0 with c1 < 0.
void check_family(const SolutionParams& params, SolutionFamily family);

struct RootBranch {
    double u;
    Branch branch;
};

/// All u in [0, 1] with Phi(u) = v, labelled lower/middle/upper by ordering.
/// One root outside the fold band, three inside it (counting multiplicity at
/// the fold points). Quadratic models use the closed-form cubic solution
/// (trigonometric method); other kinds use safeguarded bisection on each
/// monotone piece of Phi, delimited by the roots a, b of Phi' = D.
/// Throws NoRootError when v is outside the range of Phi on [0, 1].
std::vector<RootBranch> invert_flux_potential(const DiffusivityModel& model, double v);

/// u-band [(3a-b)/2, (3b-a)/2] where the solution is multi-valued (closed
/// form for quadratic D; fold-level inversion otherwise).
std::array<double, 2> multivalued_band(const DiffusivityModel& model);

struct ProfileSample {
    double x;
    double u;
    Branch branch;
};

struct MultiValuedProfile {
    double t = 0.0;
    std::vector<ProfileSample> samples;  // ordered along the solution curve
    std::array<double, 2> band{0.0, 0.0};
};

/// Samples u(x, t) from Phi(u) = e^{At} Psi(x) at every grid point, attaching
/// all branch values. Grid points outside the support become gaps, not errors.
/// Samples are ordered so the fold renders as a continuous curve.
MultiValuedProfile sample_profile(const DiffusivityModel& model, const SolutionParams& params,
                                  double t, std::span<const double> x_grid);

/// All x with e^{At} Psi(x) = level, ascending. Closed form: with w = e^{kx}
/// the level equation is the quadratic c1 w^2 - (level e^{-At}) w + c2 = 0.
std::vector<double> level_crossings(const SolutionParams& params, double t, double level);

/// d/dt of the crossing position, by differentiating the closed form.
double level_crossing_speed(const SolutionParams& params, double t, double level, double x);

/// Positions of the sharp front u = 0 at time t: one value for receding and
/// travelling families, two (or none after the collision time) for colliding.
std::vector<double> boundary_position(const DiffusivityModel& model,
                                      const SolutionParams& params, SolutionFamily family,
                                      double t);

/// Collision time for the colliding family: boundaries exist only for t <= t*.
double collision_time(const DiffusivityModel& model, const SolutionParams& params);

struct BoundaryPoint {
    double t;
    double position;         // L(t)
    double flux;             // -D(u) u_x at x = L(t), equals -e^{At} Psi'(L)
    double speed;            // L'(t)
    double stefan_residual;  // u_x|_L - kappa Phi(0) / L'(t)
};

/// Boundary samples at time t (empty when no boundary exists).
std::vector<BoundaryPoint> boundary_points(const DiffusivityModel& model,
                                           const SolutionParams& params,
                                           SolutionFamily family, double t);

struct BoundaryTrack {
    SolutionFamily family;
    std::vector<BoundaryPoint> points;  // two rows per time for colliding
};

BoundaryTrack track_boundary(const DiffusivityModel& model, const SolutionParams& params,
                             SolutionFamily family, std::span<const double> times);

/// Travelling-wave profile in the wave coordinate z = x - ct at t = 0;
/// requires c2 = 0 and c1 < 0. Identical to sample_profile at t = 0.
MultiValuedProfile travelling_wave_profile(const DiffusivityModel& model,
                                           const SolutionParams& params,
                                           std::span<const double> z_grid);

/// z-coordinate of a given u on the travelling wave: z = (1/k) ln(Phi(u)/c1).
double travelling_wave_z(const DiffusivityModel& model, const SolutionParams& params,
                         double u);

/// Wave speed c = -A/k = -k D(0).
double travelling_wave_speed(const DiffusivityModel& model, const SolutionParams& params);

}  // namespace rdshock
