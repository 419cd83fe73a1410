#include "rdshock/shock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rdshock {

std::string to_string(ShockRule rule) {
    return rule == ShockRule::Continuity ? "continuity" : "equal_area";
}

ShockRule rule_from_string(const std::string& name) {
    if (name == "continuity") return ShockRule::Continuity;
    if (name == "equal_area") return ShockRule::EqualArea;
    throw ConfigError("unknown shock rule '" + name + "' (expected continuity|equal_area)");
}

std::pair<double, double> quadratic_shock_endpoints(double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * std::sqrt(3.0) * (b - a);
    return {mid - half, mid + half};
}

ShockPair shock_quadratic_closed_form(const DiffusivityModel& model) {
    if (model.kind() != ModelKind::Quadratic)
        throw std::invalid_argument("closed-form shock endpoints require quadratic diffusivity");
    const auto [u_l, u_r] = quadratic_shock_endpoints(model.root_a(), model.root_b());
    if (u_l <= 0.0) throw InfeasibleShockError(u_l, u_r);
    ShockPair pair;
    pair.rule = ShockRule::Continuity;
    pair.u_l = u_l;
    pair.u_r = u_r;
    pair.phi_level = model.flux_potential(u_l);
    return pair;
}

double equal_area_residual(const DiffusivityModel& model, double u_l, double u_r) {
    const Polynomial second = model.flux_potential_poly().antiderivative();
    return second(u_r) - second(u_l) - model.flux_potential(u_l) * (u_r - u_l);
}

namespace {

constexpr double kResidualTol = 1e-13;
constexpr int kMaxIterations = 200;

double rule_mismatch(const DiffusivityModel& model, ShockRule rule, double u_l, double u_r) {
    if (rule == ShockRule::Continuity)
        return model.diffusivity(u_l) - model.diffusivity(u_r);
    return equal_area_residual(model, u_l, u_r);
}

/// Root of Phi(u) = v on the increasing piece right of b (Phi' = D > 0 there).
std::optional<double> upper_partner(const DiffusivityModel& model, double v, double hi) {
    const auto& phi = model.flux_potential_poly();
    double lo = model.root_b();
    double flo = phi(lo) - v;
    double fhi = phi(hi) - v;
    if (flo > 0.0 || fhi < 0.0) return std::nullopt;
    for (int it = 0; it < 200 && (hi - lo) > 1e-16 * std::max(1.0, std::fabs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (phi(mid) - v <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double u = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        const double d = model.diffusivity(u);
        if (d == 0.0) break;
        const double next = u - (phi(u) - v) / d;
        if (next == u) break;
        u = next;
    }
    return u;
}

struct NewtonResult {
    double u_l = 0.0, u_r = 0.0;
    double r1 = 0.0, r2 = 0.0;
    bool converged = false;
};

NewtonResult newton_pair(const DiffusivityModel& model, ShockRule rule, double u_l, double u_r,
                         double ul_lo, double ul_hi, double ur_lo, double ur_hi) {
    auto residuals = [&](double l, double r, double& f1, double& f2) {
        f1 = model.flux_potential(l) - model.flux_potential(r);
        f2 = rule_mismatch(model, rule, l, r);
    };
    double f1, f2;
    residuals(u_l, u_r, f1, f2);
    for (int it = 0; it < kMaxIterations; ++it) {
        const double norm = std::max(std::fabs(f1), std::fabs(f2));
        if (norm <= kResidualTol) return {u_l, u_r, f1, f2, true};

        const double j11 = model.diffusivity(u_l);
        const double j12 = -model.diffusivity(u_r);
        double j21, j22;
        if (rule == ShockRule::Continuity) {
            j21 = model.diffusivity(u_l, 1);
            j22 = -model.diffusivity(u_r, 1);
        } else {
            j21 = -model.diffusivity(u_l) * (u_r - u_l);
            j22 = model.flux_potential(u_r) - model.flux_potential(u_l);
        }
        const double det = j11 * j22 - j12 * j21;
        if (det == 0.0) break;
        const double dl = (f1 * j22 - f2 * j12) / det;
        const double dr = (j11 * f2 - j21 * f1) / det;

        bool accepted = false;
        double lambda = 1.0;
        for (int h = 0; h < 40; ++h, lambda *= 0.5) {
            const double nl = std::clamp(u_l - lambda * dl, ul_lo, ul_hi);
            const double nr = std::clamp(u_r - lambda * dr, ur_lo, ur_hi);
            double g1, g2;
            residuals(nl, nr, g1, g2);
            if (std::max(std::fabs(g1), std::fabs(g2)) < norm) {
                u_l = nl;
                u_r = nr;
                f1 = g1;
                f2 = g2;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }
    return {u_l, u_r, f1, f2, std::max(std::fabs(f1), std::fabs(f2)) <= kResidualTol};
}

/// Bracketing scan over u_l of the one-parameter mismatch
/// g(u_l) = rule_mismatch(u_l, u_r(u_l)), with u_r the Phi-level partner.
/// Finds every sign change and refines each by bisection + Newton.
std::vector<NewtonResult> level_scan(const DiffusivityModel& model, ShockRule rule) {
    const double a = model.root_a();
    const auto band = multivalued_band(model);
    const double width = band[1] - band[0];
    const double lo = band[0] + 1e-9 * std::max(1.0, width);
    const double hi = a - 1e-9 * std::max(1.0, width);
    const double partner_hi = band[1] + 1e-6 * std::max(1.0, width);

    auto g = [&](double u_l) -> std::optional<double> {
        auto u_r = upper_partner(model, model.flux_potential(u_l), partner_hi);
        if (!u_r) return std::nullopt;
        return rule_mismatch(model, rule, u_l, *u_r);
    };

    std::vector<NewtonResult> found;
    const int n = 1200;
    double prev_u = lo;
    std::optional<double> prev_g = g(lo);
    for (int i = 1; i <= n; ++i) {
        const double u = lo + (hi - lo) * i / n;
        const std::optional<double> cur_g = g(u);
        if (prev_g && cur_g && (*prev_g == 0.0 || *prev_g * *cur_g < 0.0)) {
            double bl = prev_u, bh = u, fl = *prev_g;
            for (int it = 0; it < 200 && (bh - bl) > 1e-15; ++it) {
                const double mid = 0.5 * (bl + bh);
                const auto fm = g(mid);
                if (!fm) break;
                if (fl * *fm <= 0.0)
                    bh = mid;
                else {
                    bl = mid;
                    fl = *fm;
                }
            }
            const double u_l = 0.5 * (bl + bh);
            const auto u_r = upper_partner(model, model.flux_potential(u_l), partner_hi);
            if (u_r) {
                NewtonResult polished = newton_pair(model, rule, u_l, *u_r, band[0] - width,
                                                    a, model.root_b(), band[1] + width);
                found.push_back(polished);
            }
        }
        prev_u = u;
        prev_g = cur_g;
    }
    return found;
}

ShockPair select_pair(const DiffusivityModel& model, ShockRule rule) {
    const double a = model.root_a();
    const double b = model.root_b();
    const auto band = multivalued_band(model);
    const double width = band[1] - band[0];

    auto [gl, gr] = quadratic_shock_endpoints(a, b);
    gl = std::clamp(gl, band[0] + 1e-12, a - 1e-12);
    gr = std::clamp(gr, b + 1e-12, band[1] - 1e-12);
    std::vector<NewtonResult> candidates;
    candidates.push_back(
        newton_pair(model, rule, gl, gr, band[0] - width, a, b, band[1] + width));

    // Cheap exhaustive pass: picks up multiple solutions (tie-break below)
    // and serves as the bisection fallback when Newton stalls.
    for (const NewtonResult& r : level_scan(model, rule)) candidates.push_back(r);

    const NewtonResult* best = nullptr;
    for (const NewtonResult& r : candidates) {
        if (!r.converged) continue;
        if (!best || (r.u_r - r.u_l) > (best->u_r - best->u_l)) best = &r;
    }
    if (!best) {
        const NewtonResult& last = candidates.front();
        throw NoConvergenceError("shock solve (" + to_string(rule) + ") did not converge",
                                 last.r1, last.r2);
    }
    if (best->u_l <= 0.0 || best->u_l >= a || best->u_r <= b || best->u_r >= 1.0)
        throw InfeasibleShockError(best->u_l, best->u_r);

    ShockPair pair;
    pair.rule = rule;
    pair.u_l = best->u_l;
    pair.u_r = best->u_r;
    pair.phi_level = model.flux_potential(best->u_l);
    return pair;
}

}  // namespace

ShockPair shock_by_continuity(const DiffusivityModel& model) {
    return select_pair(model, ShockRule::Continuity);
}

ShockPair shock_by_equal_area(const DiffusivityModel& model) {
    return select_pair(model, ShockRule::EqualArea);
}

std::vector<ShockPair> find_all_shock_pairs(const DiffusivityModel& model, ShockRule rule) {
    std::vector<ShockPair> pairs;
    for (const NewtonResult& r : level_scan(model, rule)) {
        if (!r.converged) continue;
        const bool duplicate = std::any_of(pairs.begin(), pairs.end(), [&](const ShockPair& p) {
            return std::fabs(p.u_l - r.u_l) < 1e-9;
        });
        if (duplicate) continue;
        ShockPair pair;
        pair.rule = rule;
        pair.u_l = r.u_l;
        pair.u_r = r.u_r;
        pair.phi_level = model.flux_potential(r.u_l);
        pairs.push_back(pair);
    }
    return pairs;
}

ShockedProfile apply_shock(const DiffusivityModel& model, const SolutionParams& params,
                           const MultiValuedProfile& profile, const ShockPair& pair) {
    if (std::fabs(model.flux_potential(pair.u_l) - pair.phi_level) > 1e-10)
        throw std::invalid_argument("shock pair does not belong to this diffusivity model");
    const double growth = std::exp(params.A * profile.t);
    const double level = pair.phi_level;

    bool attained = false;
    bool multivalued = false;
    for (const ProfileSample& s : profile.samples) {
        if (s.branch != Branch::Lower) multivalued = true;
        if (growth * helmholtz(params, s.x) >= level) attained = true;
    }

    ShockedProfile out;
    out.t = profile.t;
    out.pair = pair;

    if (!attained) {
        if (multivalued)
            throw LevelNotCrossedError("profile does not attain the shock level Phi(u_l) = " +
                                       std::to_string(level));
        out.samples = profile.samples;  // already smooth and single-valued
        std::sort(out.samples.begin(), out.samples.end(),
                  [](const ProfileSample& p, const ProfileSample& q) { return p.x < q.x; });
        return out;
    }

    for (const ProfileSample& s : profile.samples) {
        const double v = growth * helmholtz(params, s.x);
        if (s.branch == Branch::Upper && v >= level) out.samples.push_back(s);
        if (s.branch == Branch::Lower && v < level) out.samples.push_back(s);
    }
    std::sort(out.samples.begin(), out.samples.end(),
              [](const ProfileSample& p, const ProfileSample& q) { return p.x < q.x; });

    out.shock_locations = level_crossings(params, profile.t, level);
    if (out.shock_locations.size() == 1) out.pair.location = out.shock_locations.front();
    return out;
}

std::optional<double> evaluate_shocked(const DiffusivityModel& model,
                                       const SolutionParams& params, const ShockPair& pair,
                                       double x, double t) {
    const double v = std::exp(params.A * t) * helmholtz(params, x);
    std::vector<RootBranch> roots;
    try {
        roots = invert_flux_potential(model, v);
    } catch (const NoRootError&) {
        return std::nullopt;
    }
    if (v >= pair.phi_level) {
        if (roots.back().branch == Branch::Upper) return roots.back().u;
    } else {
        if (roots.front().branch == Branch::Lower) return roots.front().u;
    }
    return std::nullopt;
}

ShockJumpReport shock_continuity_report(const DiffusivityModel& model,
                                        const SolutionParams& params, const ShockPair& pair) {
    ShockJumpReport rep;
    rep.phi_left = model.flux_potential(pair.u_r);
    rep.phi_right = model.flux_potential(pair.u_l);
    rep.d_left = model.diffusivity(pair.u_r);
    rep.d_right = model.diffusivity(pair.u_l);
    rep.r_left = reaction(model, params, pair.u_r);
    rep.r_right = reaction(model, params, pair.u_l);
    rep.ux_left = params.k * rep.phi_left / rep.d_left;
    rep.ux_right = params.k * rep.phi_right / rep.d_right;
    rep.ut_left = params.A * rep.phi_left / rep.d_left;
    rep.ut_right = params.A * rep.phi_right / rep.d_right;
    rep.jump_phi = std::fabs(rep.phi_left - rep.phi_right);
    rep.jump_d = std::fabs(rep.d_left - rep.d_right);
    rep.jump_r = std::fabs(rep.r_left - rep.r_right);
    rep.jump_ux = std::fabs(rep.ux_left - rep.ux_right);
    rep.jump_ut = std::fabs(rep.ut_left - rep.ut_right);
    return rep;
}

}  // namespace rdshock
