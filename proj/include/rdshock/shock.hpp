#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdshock/model.hpp"
#include "rdshock/solution.hpp"

namespace rdshock {

enum class ShockRule { Continuity, EqualArea };

std::string to_string(ShockRule rule);
ShockRule rule_from_string(const std::string& name);

/// A shock jump from u_r down to u_l, skipping the negative-diffusivity band.
/// Both rules keep Phi continuous; the continuity rule additionally matches
/// D(u_l) = D(u_r), the equal-area rule balances the two lobes Phi cuts off
/// the level line.
struct ShockPair {
    ShockRule rule = ShockRule::Continuity;
    double u_l = 0.0;
    double u_r = 0.0;
    double phi_level = 0.0;                // Phi(u_l)
    std::optional<double> location;        // x_s (or z_s) once placed in a profile
};

/// Closed-form continuity endpoints for quadratic D (free of any model so the
/// degenerate a = b collapse stays testable).
std::pair<double, double> quadratic_shock_endpoints(double a, double b);

/// Continuity-rule pair for quadratic D from the closed form.
/// Throws InfeasibleShockError when u_l <= 0 (i.e. b >= a(2 + sqrt(3))).
ShockPair shock_quadratic_closed_form(const DiffusivityModel& model);

/// Continuity-rule pair for any supported D: damped Newton on
/// (Phi(u_l) - Phi(u_r), D(u_l) - D(u_r)) started from the quadratic closed
/// form, with a level-scan bisection fallback. When several pairs solve the
/// system, the one maximising u_r - u_l is returned.
ShockPair shock_by_continuity(const DiffusivityModel& model);

/// Equal-area pair: Phi(u_l) = Phi(u_r) and the signed area of Phi above the
/// level vanishes. The area uses the exact antiderivative of Phi.
ShockPair shock_by_equal_area(const DiffusivityModel& model);

/// All solution pairs of the chosen rule found by the level scan (verbose
/// diagnostics; the main solvers return the tie-broken best).
std::vector<ShockPair> find_all_shock_pairs(const DiffusivityModel& model, ShockRule rule);

/// Signed area int_{u_l}^{u_r} (Phi(u) - Phi(u_l)) du via the exact
/// antiderivative of Phi.
double equal_area_residual(const DiffusivityModel& model, double u_l, double u_r);

struct ShockedProfile {
    double t = 0.0;
    std::vector<ProfileSample> samples;    // graph of u over x, ascending x
    std::vector<double> shock_locations;   // empty when no shock was needed
    ShockPair pair;
};

/// Splices a single-valued profile: the upper branch is kept where
/// e^{At} Psi(x) >= phi_level, the lower branch elsewhere; middles drop out.
/// A still-multi-valued profile that never attains the level throws
/// LevelNotCrossedError; a profile already entirely on the lower branch is
/// returned unchanged (the smooth late-time colliding case).
ShockedProfile apply_shock(const DiffusivityModel& model, const SolutionParams& params,
                           const MultiValuedProfile& profile, const ShockPair& pair);

/// Single-valued shocked solution value at (x, t); empty outside the support.
std::optional<double> evaluate_shocked(const DiffusivityModel& model,
                                       const SolutionParams& params, const ShockPair& pair,
                                       double x, double t);

/// Left/right states of {Phi, D, R, u_x, u_t} across the shock and their
/// jumps. The left side is the upper state u_r. u_x and u_t are evaluated in
/// the travelling frame, where Phi_x = k Phi and Phi_t = A Phi, so the report
/// is independent of the time gauge.
struct ShockJumpReport {
    double phi_left, phi_right, jump_phi;
    double d_left, d_right, jump_d;
    double r_left, r_right, jump_r;
    double ux_left, ux_right, jump_ux;
    double ut_left, ut_right, jump_ut;
};

ShockJumpReport shock_continuity_report(const DiffusivityModel& model,
                                        const SolutionParams& params, const ShockPair& pair);

}  // namespace rdshock
