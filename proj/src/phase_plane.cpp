#include "rdshock/phase_plane.hpp"

#include <cmath>
#include <stdexcept>

namespace rdshock {

FieldSample vector_field(const DiffusivityModel& model, const SolutionParams& params,
                         PhasePoint point) {
    FieldSample s;
    s.u = point.u;
    s.q = point.q;
    const double d = model.diffusivity(point.u);
    if (std::fabs(d) < kWallGuard) {
        s.du_dz = 0.0;
        s.dq_dz = 0.0;
        s.wall = true;
        return s;
    }
    const double c = -params.k * model.diffusivity(0.0);
    const double dr = reaction_times_diffusivity(model, params, point.u);
    s.du_dz = point.q / d;
    s.dq_dz = (-c * point.q - dr) / d;
    s.wall = false;
    return s;
}

std::vector<PhasePoint> analytic_trajectory(const DiffusivityModel& model,
                                            const SolutionParams& params,
                                            std::span<const double> u_grid) {
    std::vector<PhasePoint> traj;
    traj.reserve(u_grid.size());
    for (double u : u_grid) {
        if (u < 0.0 || u > 1.0)
            throw std::invalid_argument("trajectory u grid must lie in [0, 1]");
        traj.push_back({u, params.k * model.flux_potential(u)});
    }
    return traj;
}

TrajectoryBranches shock_split_trajectory(const DiffusivityModel& model,
                                          const SolutionParams& params, const ShockPair& pair,
                                          int points_per_branch) {
    TrajectoryBranches out;
    out.pair = pair;
    const int n = std::max(points_per_branch, 2);
    for (int i = 0; i < n; ++i) {
        const double ul = pair.u_l * i / (n - 1.0);
        out.lower.push_back({ul, params.k * model.flux_potential(ul)});
        const double uu = pair.u_r + (1.0 - pair.u_r) * i / (n - 1.0);
        out.upper.push_back({uu, params.k * model.flux_potential(uu)});
    }
    return out;
}

Nullclines nullclines_and_walls(const DiffusivityModel& model, const SolutionParams& params,
                                double u_lo, double u_hi, int n) {
    Nullclines nc;
    nc.walls = {model.root_a(), model.root_b()};
    const double kd0 = params.k * model.diffusivity(0.0);
    for (int i = 0; i < std::max(n, 2); ++i) {
        const double u = u_lo + (u_hi - u_lo) * i / (std::max(n, 2) - 1.0);
        nc.q_nullcline.push_back({u, reaction_times_diffusivity(model, params, u) / kd0});
    }
    return nc;
}

LeftMovingReport left_moving_condition(const DiffusivityModel& model,
                                       const SolutionParams& params, double u_a,
                                       FrontVariant variant) {
    const ShockPair pair = model.kind() == ModelKind::Quadratic
                               ? shock_quadratic_closed_form(model)
                               : shock_by_continuity(model);
    if (!(0.0 < u_a && u_a < pair.u_l))
        throw std::domain_error("left-moving condition requires u_a in (0, u_l)");

    // integrand D R = (A + kappa D) Phi is polynomial; integrate exactly
    const Polynomial integrand =
        (Polynomial{params.A} + model.diffusivity_poly().scaled(params.kappa)) *
        model.flux_potential_poly();
    const Polynomial anti = integrand.antiderivative();

    LeftMovingReport rep;
    rep.variant = variant;
    rep.u_a = u_a;
    rep.integral = anti(u_a) - anti(0.0);
    rep.g_ua = params.k * model.flux_potential(u_a);
    rep.g_zero = params.k * model.flux_potential(0.0);
    rep.bound = -0.5 * rep.g_ua * rep.g_ua;
    if (variant == FrontVariant::Sharp) rep.bound += 0.5 * rep.g_zero * rep.g_zero;
    rep.margin = rep.bound - rep.integral;
    rep.holds = rep.integral < rep.bound;
    return rep;
}

}  // namespace rdshock
