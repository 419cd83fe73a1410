#include "rdshock/model.hpp"

#include <cmath>
#include <utility>

namespace rdshock {

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Quadratic: return "quadratic";
        case ModelKind::Quartic: return "quartic";
        case ModelKind::GenericPolynomial: return "generic-polynomial";
    }
    return "unknown";
}

DiffusivityModel::DiffusivityModel(ModelKind kind, double a, double b, double c, double d,
                                   Polynomial cofactor)
    : kind_(kind), a_(a), b_(b), c_(c), d_(d), cofactor_(std::move(cofactor)) {
    if (!(0.0 < a && a < b && b < 1.0))
        throw std::invalid_argument("diffusivity roots must satisfy 0 < a < b < 1");

    const Polynomial factor_a{-a, 1.0};
    const Polynomial factor_b{-b, 1.0};
    d_poly_ = factor_a * factor_b * cofactor_;
    d_prime_ = d_poly_.derivative();
    d_second_ = d_prime_.derivative();

    // Fold the integration constant into the coefficients. Horner at u = 1
    // then reproduces the accumulated sum and cancels it exactly.
    const Polynomial raw = d_poly_.antiderivative();
    phi_ = raw.with_constant(-raw(1.0));
}

DiffusivityModel DiffusivityModel::quadratic(double a, double b) {
    return DiffusivityModel(ModelKind::Quadratic, a, b, 0.0, 0.0, Polynomial{1.0});
}

DiffusivityModel DiffusivityModel::quartic(double a, double b, double c, double d) {
    if (!(d > 0.0)) throw std::invalid_argument("quartic offset d must be positive");
    // (u - c)^2 + d
    Polynomial q{c * c + d, -2.0 * c, 1.0};
    return DiffusivityModel(ModelKind::Quartic, a, b, c, d, std::move(q));
}

DiffusivityModel DiffusivityModel::generic_polynomial(std::vector<double> coeffs, double a,
                                                      double b) {
    Polynomial p(std::move(coeffs));
    double scale = 0.0;
    for (double c : p.coeffs()) scale = std::max(scale, std::fabs(c));
    if (scale == 0.0) throw std::invalid_argument("generic diffusivity is identically zero");

    double rem_a = 0.0;
    double rem_b = 0.0;
    Polynomial q = p.deflate(a, rem_a).deflate(b, rem_b);
    if (std::fabs(rem_a) > 1e-9 * scale || std::fabs(rem_b) > 1e-9 * scale)
        throw std::invalid_argument("supplied values are not roots of the polynomial");

    // Two simple roots in (0,1) means the cofactor may not vanish on [0,1].
    for (int i = 0; i <= 1000; ++i) {
        if (q(i / 1000.0) <= 0.0)
            throw std::invalid_argument(
                "diffusivity must have exactly two simple roots in (0,1)");
    }
    return DiffusivityModel(ModelKind::GenericPolynomial, a, b, 0.0, 0.0, std::move(q));
}

double DiffusivityModel::diffusivity(double u, int order) const {
    switch (order) {
        case 0: return (u - a_) * (u - b_) * cofactor_(u);
        case 1: return d_prime_(u);
        case 2: return d_second_(u);
        default: throw std::invalid_argument("diffusivity order must be 0, 1 or 2");
    }
}

SolutionParams SolutionParams::make(const DiffusivityModel& model, double kappa, double c1,
                                    double c2, double time_gauge) {
    if (!(kappa < 0.0)) throw std::invalid_argument("kappa must be negative");
    SolutionParams p;
    p.k = std::sqrt(-kappa);
    p.kappa = -(p.k * p.k);  // renormalised so kappa == -k*k exactly
    p.A = -p.kappa * model.diffusivity(0.0);
    const double scale = std::exp(p.A * time_gauge);
    p.c1 = c1 * scale;
    p.c2 = c2 * scale;
    p.time_gauge = time_gauge;
    p.feasibility = validate_params(model);
    return p;
}

FeasibilityReport validate_params(const DiffusivityModel& model) {
    const double a = model.root_a();
    const double b = model.root_b();
    FeasibilityReport r;
    r.roots_ordered = 0.0 < a && a < b && b < 1.0;
    r.sum_below_one = a + b < 1.0;
    r.phi_negative_bound = b < (a + 2.0) / 3.0;
    r.shock_feasible = b < a * (2.0 + std::sqrt(3.0));
    // Phi has its only interior local maximum at u = a, so Phi < 0 on [0,1)
    // if and only if Phi(a) < 0. Holds for any model kind.
    r.phi_negative_on_unit = model.flux_potential(a) < 0.0;
    return r;
}

namespace {

void check_pole_guard(const DiffusivityModel& model, double u, double guard) {
    if (std::fabs(u - model.root_a()) < guard) throw PoleAtRootError(u, model.root_a());
    if (std::fabs(u - model.root_b()) < guard) throw PoleAtRootError(u, model.root_b());
}

}  // namespace

double reaction(const DiffusivityModel& model, const SolutionParams& params, double u,
                double pole_guard) {
    check_pole_guard(model, u, pole_guard);
    const double d = model.diffusivity(u);
    return (params.A + params.kappa * d) * model.flux_potential(u) / d;
}

double reaction_derivative(const DiffusivityModel& model, const SolutionParams& params,
                           double u, double pole_guard) {
    if (u == 0.0) {
        const double d0 = model.diffusivity(0.0);
        return params.kappa * model.diffusivity(0.0, 1) * model.flux_potential(0.0) / d0;
    }
    if (u == 1.0) {
        const double d0 = model.diffusivity(0.0);
        const double d1 = model.diffusivity(1.0);
        return -params.kappa * d1 * (d0 / d1 - 1.0);
    }
    check_pole_guard(model, u, pole_guard);
    const double d = model.diffusivity(u);
    const double dp = model.diffusivity(u, 1);
    const double phi = model.flux_potential(u);
    return -params.A * dp / (d * d) * phi + (params.A / d + params.kappa) * d;
}

double reaction_times_diffusivity(const DiffusivityModel& model, const SolutionParams& params,
                                  double u) {
    return (params.A + params.kappa * model.diffusivity(u)) * model.flux_potential(u);
}

}  // namespace rdshock
