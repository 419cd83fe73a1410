#pragma once

#include <span>
#include <vector>

#include "rdshock/model.hpp"
#include "rdshock/shock.hpp"

namespace rdshock {

/// Point of the travelling-wave system in (u, q) with q = D(u) du/dz.
struct PhasePoint {
    double u;
    double q;
};

/// |D(u)| below this flags the point as sitting on a wall of singularities.
inline constexpr double kWallGuard = 1e-9;

struct FieldSample {
    double u, q;
    double du_dz, dq_dz;  // zeroed when wall is set
    bool wall;
};

/// Direction field (du/dz, dq/dz) = (q/D, (-c q - D R)/D) with c = -k D(0).
/// The product D R is evaluated pole-free as (A + kappa D) Phi.
FieldSample vector_field(const DiffusivityModel& model, const SolutionParams& params,
                         PhasePoint point);

/// Analytic solution trajectory q(u) = k Phi(u); runs from (1, 0) to
/// (0, k Phi(0)).
std::vector<PhasePoint> analytic_trajectory(const DiffusivityModel& model,
                                            const SolutionParams& params,
                                            std::span<const double> u_grid);

/// The shocked trajectory is reported as two branches, never stitched:
/// u in [0, u_l] and u in [u_r, 1], joined by the Phi-preserving jump.
struct TrajectoryBranches {
    std::vector<PhasePoint> lower;  // u in [0, u_l]
    std::vector<PhasePoint> upper;  // u in [u_r, 1]
    ShockPair pair;
};

TrajectoryBranches shock_split_trajectory(const DiffusivityModel& model,
                                          const SolutionParams& params, const ShockPair& pair,
                                          int points_per_branch);

struct Nullclines {
    std::vector<PhasePoint> q_nullcline;  // q = (A + kappa D) Phi / (k D(0))
    std::array<double, 2> walls;          // u = a, u = b
};

Nullclines nullclines_and_walls(const DiffusivityModel& model, const SolutionParams& params,
                                double u_lo, double u_hi, int n);

enum class FrontVariant { Smooth, Sharp };

/// Necessary condition for a left-moving wave, evaluated on the analytic wave
/// where g(u) = D(u) u_z = k Phi(u):
///   int_0^{u_a} D R du  <  -g(u_a)^2 / 2                     (smooth front)
///   int_0^{u_a} D R du  <  -g(u_a)^2 / 2 + g(0)^2 / 2        (sharp front)
/// The integrand (A + kappa D) Phi is a polynomial and is integrated exactly.
struct LeftMovingReport {
    FrontVariant variant;
    double u_a;
    double integral;  // int_0^{u_a} D(u) R(u) du
    double g_ua;      // k Phi(u_a)
    double g_zero;    // k Phi(0)
    double bound;     // right-hand side for the chosen variant
    double margin;    // bound - integral (> 0 means the condition holds)
    bool holds;
};

/// Throws std::domain_error unless u_a lies in (0, u_l) for the
/// continuity-rule shock of the model.
LeftMovingReport left_moving_condition(const DiffusivityModel& model,
                                       const SolutionParams& params, double u_a,
                                       FrontVariant variant);

}  // namespace rdshock
