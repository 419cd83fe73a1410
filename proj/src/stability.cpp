#include "rdshock/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rdshock {

std::string to_string(StateClass cls) {
    switch (cls) {
        case StateClass::Stable: return "stable";
        case StateClass::Unstable: return "unstable";
        case StateClass::Marginal: return "marginal";
    }
    return "unknown";
}

ConstantStateReport classify_constant_state(const DiffusivityModel& model,
                                            const SolutionParams& params, double u_bar) {
    if (u_bar != 0.0 && u_bar != 1.0)
        throw std::invalid_argument("constant-state classification expects u_bar in {0, 1}");
    ConstantStateReport rep;
    rep.u_bar = u_bar;
    rep.r_prime = reaction_derivative(model, params, u_bar);
    rep.most_unstable_alpha = 0.0;
    rep.lambda_max = rep.r_prime;
    if (rep.r_prime < 0.0)
        rep.cls = StateClass::Stable;
    else if (rep.r_prime > 0.0)
        rep.cls = StateClass::Unstable;
    else
        rep.cls = StateClass::Marginal;
    // Growth only survives where alpha^2 D(u_bar) < R'(u_bar).
    rep.long_wavelength = rep.cls == StateClass::Unstable;
    return rep;
}

namespace {

template <typename Lambda>
DispersionCurve build_curve(std::span<const double> alphas, Lambda&& lambda) {
    DispersionCurve curve;
    curve.max_re_lambda = -std::numeric_limits<double>::infinity();
    curve.alpha_at_max = 0.0;
    for (double alpha : alphas) {
        const std::complex<double> l = lambda(alpha);
        curve.alphas.push_back(alpha);
        curve.lambdas.push_back(l);
        if (l.real() > curve.max_re_lambda) {
            curve.max_re_lambda = l.real();
            curve.alpha_at_max = alpha;
        }
    }
    return curve;
}

}  // namespace

DispersionCurve constant_state_dispersion(const DiffusivityModel& model,
                                          const SolutionParams& params, double u_bar,
                                          std::span<const double> alphas) {
    const double d = model.diffusivity(u_bar);
    const double rp = reaction_derivative(model, params, u_bar);
    return build_curve(alphas, [d, rp](double alpha) {
        return std::complex<double>(-alpha * alpha * d + rp, 0.0);
    });
}

DispersionCurve essential_spectrum_curve(const DiffusivityModel& model,
                                         const SolutionParams& params,
                                         std::span<const double> alphas) {
    const double d1 = model.diffusivity(1.0);
    const double kd0 = params.k * model.diffusivity(0.0);
    const double rp1 = reaction_derivative(model, params, 1.0);
    return build_curve(alphas, [d1, kd0, rp1](double alpha) {
        return std::complex<double>(-alpha * alpha * d1 + rp1, -kd0 * alpha);
    });
}

double sturm_criterion_value(const DiffusivityModel& model, const SolutionParams& params,
                             double u) {
    if (u == 1.0) return reaction_derivative(model, params, 1.0);
    const double d = model.diffusivity(u);
    const double dp = model.diffusivity(u, 1);
    const double dpp = model.diffusivity(u, 2);
    const double phi = model.flux_potential(u);
    const double k = params.k;

    const double u_z = k * phi / d;
    const double du_z_du = k * (d * d - phi * dp) / (d * d);
    const double u_zz = u_z * du_z_du;
    return 0.5 * (dpp * u_z * u_z + dp * u_zz) + reaction_derivative(model, params, u);
}

SturmCriterionTrace sturm_criterion_trace(const DiffusivityModel& model,
                                          const SolutionParams& params, const ShockPair& pair,
                                          int n_samples) {
    n_samples = std::max(n_samples, 2);
    constexpr double delta = 1e-9;
    SturmCriterionTrace trace;
    trace.max_value = -std::numeric_limits<double>::infinity();
    trace.u_at_max = 0.0;

    auto push = [&](double u) {
        const double c = sturm_criterion_value(model, params, u);
        trace.u.push_back(u);
        trace.criterion.push_back(c);
        if (c > trace.max_value) {
            trace.max_value = c;
            trace.u_at_max = u;
        }
    };

    push(0.0);
    if (pair.u_l > delta) {
        for (int i = 0; i < n_samples; ++i)
            push(delta + (pair.u_l - delta) * i / (n_samples - 1.0));
    }
    if (pair.u_r < 1.0 - delta) {
        for (int i = 0; i < n_samples; ++i)
            push(pair.u_r + (1.0 - delta - pair.u_r) * i / (n_samples - 1.0));
    }
    push(1.0);
    return trace;
}

StabilityRegionMask stability_region_scan(const StabilityGridSpec& spec) {
    if (spec.na < 2 || spec.nb < 2)
        throw std::invalid_argument("stability scan needs at least 2 nodes per axis");

    StabilityRegionMask mask;
    mask.spec = spec;
    constexpr double root_condition = 2.0 + 1.7320508075688772;  // 2 + sqrt(3)

    for (int i = 0; i < spec.na; ++i) {
        const double a = spec.a_min + (spec.a_max - spec.a_min) * i / (spec.na - 1.0);
        for (int j = 0; j < spec.nb; ++j) {
            const double b = spec.b_min + (spec.b_max - spec.b_min) * j / (spec.nb - 1.0);
            if (!(0.0 < a && a < b && b < 1.0) || a + b >= 1.0) continue;

            StabilityCell cell;
            cell.a = a;
            cell.b = b;
            cell.shock_feasible = b < a * root_condition;

            const DiffusivityModel model = DiffusivityModel::quadratic(a, b);
            const SolutionParams params = SolutionParams::make(model, -1.0, -1.0, 0.0);
            auto [u_l, u_r] = quadratic_shock_endpoints(a, b);
            ShockPair pair;
            pair.rule = ShockRule::Continuity;
            pair.u_l = std::clamp(u_l, 0.0, a);
            pair.u_r = std::clamp(u_r, b, 1.0);
            pair.phi_level = model.flux_potential(pair.u_l);
            const SturmCriterionTrace trace =
                sturm_criterion_trace(model, params, pair, spec.trace_samples);
            cell.sturm_ok = trace.max_value < 0.0;
            cell.stable = cell.shock_feasible && cell.sturm_ok;
            mask.cells.push_back(cell);
        }
    }
    return mask;
}

}  // namespace rdshock
