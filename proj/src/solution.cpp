#include "rdshock/solution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rdshock {

std::string to_string(SolutionFamily family) {
    switch (family) {
        case SolutionFamily::Receding: return "receding";
        case SolutionFamily::Colliding: return "colliding";
        case SolutionFamily::Travelling: return "travelling";
    }
    return "unknown";
}

std::string to_string(Branch branch) {
    switch (branch) {
        case Branch::Lower: return "lower";
        case Branch::Middle: return "middle";
        case Branch::Upper: return "upper";
    }
    return "unknown";
}

SolutionFamily family_from_string(const std::string& name) {
    if (name == "receding") return SolutionFamily::Receding;
    if (name == "colliding") return SolutionFamily::Colliding;
    if (name == "travelling") return SolutionFamily::Travelling;
    throw ConfigError("unknown family '" + name + "' (expected receding|colliding|travelling)");
}

double helmholtz(const SolutionParams& params, double x) {
    return params.c1 * std::exp(params.k * x) + params.c2 * std::exp(-params.k * x);
}

double helmholtz_derivative(const SolutionParams& params, double x) {
    return params.k * (params.c1 * std::exp(params.k * x) - params.c2 * std::exp(-params.k * x));
}

void check_family(const SolutionParams& params, SolutionFamily family) {
    const double c1 = params.c1;
    const double c2 = params.c2;
    switch (family) {
        case SolutionFamily::Receding:
            if (!(c1 < 0.0) || std::fabs(c1 + c2) > 1e-12 * std::fabs(c1))
                throw std::invalid_argument("receding family requires c1 < 0 and c2 = -c1");
            return;
        case SolutionFamily::Colliding:
            if (!(c1 < 0.0 && c2 < 0.0))
                throw std::invalid_argument("colliding family requires c1 < 0 and c2 < 0");
            return;
        case SolutionFamily::Travelling:
            if (!(c1 < 0.0) || c2 != 0.0)
                throw std::invalid_argument("travelling family requires c1 < 0 and c2 = 0");
            return;
    }
}

namespace {

constexpr double kRootTol = 1e-14;

/// Safeguarded bisection + Newton for Phi(u) = v on a monotone piece [lo, hi].
std::optional<double> root_in_piece(const DiffusivityModel& model, double v, double lo,
                                    double hi) {
    const auto& phi = model.flux_potential_poly();
    double flo = phi(lo) - v;
    double fhi = phi(hi) - v;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) return std::nullopt;

    double a = lo, b = hi;
    for (int it = 0; it < 200 && (b - a) > 1e-16 * std::max(1.0, std::fabs(b)); ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = phi(mid) - v;
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            b = mid;
        } else {
            a = mid;
            flo = fm;
        }
    }
    double u = 0.5 * (a + b);
    for (int it = 0; it < 4; ++it) {  // Newton polish, clamped to the piece
        const double f = phi(u) - v;
        const double d = model.diffusivity(u);
        if (d == 0.0) break;
        const double next = std::clamp(u - f / d, lo, hi);
        if (next == u) break;
        u = next;
    }
    return u;
}

/// Real roots (with multiplicity) of the cubic Phi(u) = v for quadratic D.
/// Standard trigonometric/Cardano split on the normalised cubic.
std::vector<double> cubic_phi_roots(const DiffusivityModel& model, double v) {
    const auto& c = model.flux_potential_poly().coeffs();
    const double a2 = c[2] / c[3];
    const double a1 = c[1] / c[3];
    const double a0 = (c[0] - v) / c[3];

    const double q = (a2 * a2 - 3.0 * a1) / 9.0;
    const double r = (a2 * (2.0 * a2 * a2 - 9.0 * a1) + 27.0 * a0) / 54.0;
    const double r2 = r * r;
    const double q3 = q * q * q;

    std::vector<double> roots;
    if (r2 < q3) {
        const double theta = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
        const double m = -2.0 * std::sqrt(q);
        constexpr double two_pi = 6.283185307179586476925286766559;
        roots.push_back(m * std::cos(theta / 3.0) - a2 / 3.0);
        roots.push_back(m * std::cos((theta + two_pi) / 3.0) - a2 / 3.0);
        roots.push_back(m * std::cos((theta - two_pi) / 3.0) - a2 / 3.0);
    } else {
        const double s = -std::copysign(std::cbrt(std::fabs(r) + std::sqrt(r2 - q3)), r);
        const double t = (s == 0.0) ? 0.0 : q / s;
        roots.push_back(s + t - a2 / 3.0);
        // Remaining pair is real only when it degenerates to a double root.
        const double imag = 0.5 * std::sqrt(3.0) * (s - t);
        if (std::fabs(imag) < 1e-12) {
            const double dbl = -0.5 * (s + t) - a2 / 3.0;
            roots.push_back(dbl);
            roots.push_back(dbl);
        }
    }
    return roots;
}

Branch branch_of(const DiffusivityModel& model, double u) {
    if (u <= model.root_a()) return Branch::Lower;
    if (u < model.root_b()) return Branch::Middle;
    return Branch::Upper;
}

}  // namespace

std::vector<RootBranch> invert_flux_potential(const DiffusivityModel& model, double v) {
    const double a = model.root_a();
    const double b = model.root_b();
    std::vector<RootBranch> out;

    if (model.kind() == ModelKind::Quadratic) {
        std::vector<double> roots = cubic_phi_roots(model, v);
        std::erase_if(roots, [](double u) { return u < -1e-9 || u > 1.0 + 1e-9; });
        for (double& u : roots) {
            u = std::clamp(u, 0.0, 1.0);
            // Polish against the polynomial; skip near fold points where
            // Phi' vanishes and the closed form is already accurate.
            for (int it = 0; it < 3; ++it) {
                const double d = model.diffusivity(u);
                if (std::fabs(d) < 1e-8) break;
                const double f = model.flux_potential(u) - v;
                const double next = std::clamp(u - f / d, 0.0, 1.0);
                if (next == u) break;
                u = next;
            }
        }
        std::sort(roots.begin(), roots.end());
        if (roots.empty()) throw NoRootError(v);
        if (roots.size() == 3) {
            out = {{roots[0], Branch::Lower}, {roots[1], Branch::Middle},
                   {roots[2], Branch::Upper}};
        } else {
            for (double u : roots) out.push_back({u, branch_of(model, u)});
            for (std::size_t i = 1; i < out.size(); ++i)  // fold tie-break
                if (out[i].branch <= out[i - 1].branch)
                    out[i].branch = static_cast<Branch>(static_cast<int>(out[i - 1].branch) + 1);
        }
        return out;
    }

    const std::array<std::pair<double, double>, 3> pieces{{{0.0, a}, {a, b}, {b, 1.0}}};
    const std::array<Branch, 3> labels{Branch::Lower, Branch::Middle, Branch::Upper};
    for (int i = 0; i < 3; ++i) {
        if (auto u = root_in_piece(model, v, pieces[i].first, pieces[i].second))
            out.push_back({*u, labels[i]});
    }
    if (out.empty()) throw NoRootError(v);
    return out;
}

std::array<double, 2> multivalued_band(const DiffusivityModel& model) {
    const double a = model.root_a();
    const double b = model.root_b();
    if (model.kind() == ModelKind::Quadratic)
        return {(3.0 * a - b) / 2.0, (3.0 * b - a) / 2.0};

    // Fold intersections: Phi(u) = Phi(b) left of a, Phi(u) = Phi(a) right of b.
    const auto& phi = model.flux_potential_poly();
    const double phi_a = phi(a);
    const double phi_b = phi(b);
    double lo = a - (b - a);
    for (int it = 0; it < 64 && phi(lo) > phi_b; ++it) lo -= (b - a);
    double hi = b + (b - a);
    for (int it = 0; it < 64 && phi(hi) < phi_a; ++it) hi += (b - a);

    auto bisect = [&phi](double lo_, double hi_, double target) {
        double flo = phi(lo_) - target;
        for (int it = 0; it < 200 && (hi_ - lo_) > 1e-15; ++it) {
            const double mid = 0.5 * (lo_ + hi_);
            const double fm = phi(mid) - target;
            if (flo * fm <= 0.0)
                hi_ = mid;
            else {
                lo_ = mid;
                flo = fm;
            }
        }
        return 0.5 * (lo_ + hi_);
    };
    return {bisect(lo, a, phi_b), bisect(b, hi, phi_a)};
}

MultiValuedProfile sample_profile(const DiffusivityModel& model, const SolutionParams& params,
                                  double t, std::span<const double> x_grid) {
    for (std::size_t i = 1; i < x_grid.size(); ++i)
        if (!(x_grid[i] > x_grid[i - 1]))
            throw std::invalid_argument("x grid must be strictly increasing");

    MultiValuedProfile profile;
    profile.t = t;
    profile.band = multivalued_band(model);

    // Psi is monotone except for one interior extremum when c1 and c2 share
    // a sign; split the grid there so every segment has monotone v(x).
    double x_split = std::numeric_limits<double>::infinity();
    if (params.c1 != 0.0 && params.c2 / params.c1 > 0.0)
        x_split = std::log(params.c2 / params.c1) / (2.0 * params.k);

    const double growth = std::exp(params.A * t);
    struct Segment {
        std::vector<ProfileSample> lower, middle, upper;
        bool increasing = false;
        bool any = false;
    };
    std::vector<Segment> segments(1);

    bool past_split = false;
    for (double x : x_grid) {
        if (!past_split && x > x_split) {
            past_split = true;
            segments.emplace_back();
        }
        Segment& seg = segments.back();
        const double v = growth * helmholtz(params, x);
        std::vector<RootBranch> roots;
        try {
            roots = invert_flux_potential(model, v);
        } catch (const NoRootError&) {
            continue;  // outside the support: a gap, not an error
        }
        if (!seg.any) {
            seg.any = true;
            seg.increasing = growth * helmholtz_derivative(params, x) > 0.0;
        }
        for (const RootBranch& rb : roots) {
            ProfileSample s{x, rb.u, rb.branch};
            switch (rb.branch) {
                case Branch::Lower: seg.lower.push_back(s); break;
                case Branch::Middle: seg.middle.push_back(s); break;
                case Branch::Upper: seg.upper.push_back(s); break;
            }
        }
    }

    // Emit each segment along the solution curve so folds stay continuous:
    // with v increasing the curve runs lower -> middle(reversed) -> upper,
    // with v decreasing it runs upper -> middle(reversed) -> lower.
    for (Segment& seg : segments) {
        std::reverse(seg.middle.begin(), seg.middle.end());
        auto append = [&profile](const std::vector<ProfileSample>& part) {
            profile.samples.insert(profile.samples.end(), part.begin(), part.end());
        };
        if (seg.increasing) {
            append(seg.lower);
            append(seg.middle);
            append(seg.upper);
        } else {
            append(seg.upper);
            append(seg.middle);
            append(seg.lower);
        }
    }
    return profile;
}

std::vector<double> level_crossings(const SolutionParams& params, double t, double level) {
    // e^{At} Psi(x) = level with w = e^{kx} is c1 w^2 - V w + c2 = 0,
    // V = level e^{-At}.
    const double V = level * std::exp(-params.A * t);
    const double c1 = params.c1;
    const double c2 = params.c2;
    std::vector<double> ws;

    if (c1 == 0.0) {
        if (c2 != 0.0 && V != 0.0 && c2 / V > 0.0) ws.push_back(c2 / V);
    } else {
        const double disc = V * V - 4.0 * c1 * c2;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            const double num = (V >= 0.0) ? V + sq : V - sq;
            if (num != 0.0) {
                ws.push_back(num / (2.0 * c1));
                ws.push_back(2.0 * c2 / num);
            } else {
                ws.push_back(sq / (2.0 * c1));
                ws.push_back(-sq / (2.0 * c1));
            }
        }
    }

    std::vector<double> xs;
    for (double w : ws)
        if (w > 0.0) xs.push_back(std::log(w) / params.k);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

double level_crossing_speed(const SolutionParams& params, double t, double level, double x) {
    const double V = level * std::exp(-params.A * t);
    const double w = std::exp(params.k * x);
    const double denom = params.k * (2.0 * params.c1 * w - V);
    if (denom == 0.0) return std::numeric_limits<double>::infinity();
    return -params.A * V / denom;
}

std::vector<double> boundary_position(const DiffusivityModel& model,
                                      const SolutionParams& params, SolutionFamily family,
                                      double t) {
    check_family(params, family);
    return level_crossings(params, t, model.flux_potential(0.0));
}

double collision_time(const DiffusivityModel& model, const SolutionParams& params) {
    if (!(params.c1 * params.c2 > 0.0))
        throw std::invalid_argument("collision time requires c1 c2 > 0");
    const double phi0 = model.flux_potential(0.0);
    return -std::log(4.0 * params.c1 * params.c2 / (phi0 * phi0)) / (2.0 * params.A);
}

std::vector<BoundaryPoint> boundary_points(const DiffusivityModel& model,
                                           const SolutionParams& params,
                                           SolutionFamily family, double t) {
    const double phi0 = model.flux_potential(0.0);
    const double d0 = model.diffusivity(0.0);
    const double growth = std::exp(params.A * t);

    std::vector<BoundaryPoint> points;
    for (double x : boundary_position(model, params, family, t)) {
        BoundaryPoint p;
        p.t = t;
        p.position = x;
        const double phi_x = growth * helmholtz_derivative(params, x);  // = D(u) u_x
        p.flux = -phi_x;
        p.speed = level_crossing_speed(params, t, phi0, x);
        p.stefan_residual = phi_x / d0 - params.kappa * phi0 / p.speed;
        points.push_back(p);
    }
    return points;
}

BoundaryTrack track_boundary(const DiffusivityModel& model, const SolutionParams& params,
                             SolutionFamily family, std::span<const double> times) {
    BoundaryTrack track;
    track.family = family;
    for (double t : times) {
        const auto pts = boundary_points(model, params, family, t);
        track.points.insert(track.points.end(), pts.begin(), pts.end());
    }
    return track;
}

MultiValuedProfile travelling_wave_profile(const DiffusivityModel& model,
                                           const SolutionParams& params,
                                           std::span<const double> z_grid) {
    check_family(params, SolutionFamily::Travelling);
    return sample_profile(model, params, 0.0, z_grid);
}

double travelling_wave_z(const DiffusivityModel& model, const SolutionParams& params,
                         double u) {
    return std::log(model.flux_potential(u) / params.c1) / params.k;
}

double travelling_wave_speed(const DiffusivityModel& model, const SolutionParams& params) {
    return -params.k * model.diffusivity(0.0);
}

}  // namespace rdshock
