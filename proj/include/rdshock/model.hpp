#pragma once

#include <string>
#include <vector>

#include "rdshock/errors.hpp"
#include "rdshock/polynomial.hpp"

namespace rdshock {

enum class ModelKind { Quadratic, Quartic, GenericPolynomial };

std::string to_string(ModelKind kind);

/// Polynomial diffusivity with two simple roots 0 < a < b < 1 and D < 0
/// exactly on (a, b).
///
/// D is stored factored, D(u) = (u - a)(u - b) Q(u) with Q > 0 on [0, 1], so
/// the stored roots evaluate to exactly zero. The monomial expansion and the
/// flux potential Phi(u) = int_1^u D(s) ds are derived once at construction;
/// the constant term of Phi is chosen so that Horner evaluation at u = 1
/// returns exactly 0.
class DiffusivityModel {
public:
    static DiffusivityModel quadratic(double a, double b);
    /// D(u) = (u - a)(u - b)((u - c)^2 + d), d > 0.
    static DiffusivityModel quartic(double a, double b, double c, double d);
    /// Arbitrary polynomial coefficients (lowest degree first) with the two
    /// roots supplied, not searched for. The polynomial must vanish at both
    /// roots and its cofactor must be positive on [0, 1].
    static DiffusivityModel generic_polynomial(std::vector<double> coeffs, double a, double b);

    ModelKind kind() const { return kind_; }
    double root_a() const { return a_; }
    double root_b() const { return b_; }
    double quartic_center() const { return c_; }
    double quartic_offset() const { return d_; }

    /// D(u), D'(u) or D''(u). Order 0 uses the factored form so the stored
    /// roots map to exact zeros.
    double diffusivity(double u, int order = 0) const;

    /// Phi(u) with Phi(1) = 0 exactly.
    double flux_potential(double u) const { return phi_(u); }

    const Polynomial& diffusivity_poly() const { return d_poly_; }
    const Polynomial& flux_potential_poly() const { return phi_; }
    const Polynomial& cofactor() const { return cofactor_; }

private:
    DiffusivityModel(ModelKind kind, double a, double b, double c, double d,
                     Polynomial cofactor);

    ModelKind kind_;
    double a_;
    double b_;
    double c_ = 0.0;
    double d_ = 0.0;
    Polynomial cofactor_;   // Q(u), positive on [0,1]
    Polynomial d_poly_;     // monomial expansion of D
    Polynomial d_prime_;    // D'
    Polynomial d_second_;   // D''
    Polynomial phi_;        // antiderivative of D with phi(1) == 0
};

/// Pass/fail record of the parameter-regime constraints.
struct FeasibilityReport {
    bool roots_ordered;         // 0 < a < b < 1
    bool sum_below_one;         // a + b < 1
    bool phi_negative_bound;    // b < (a + 2)/3
    bool shock_feasible;        // b < a (2 + sqrt(3))
    bool phi_negative_on_unit;  // computed: Phi(a) < 0, i.e. Phi < 0 on [0,1)

    bool all() const {
        return roots_ordered && sum_below_one && phi_negative_bound && shock_feasible;
    }
};

FeasibilityReport validate_params(const DiffusivityModel& model);

/// Parameters of one analytic solution family. u* is fixed to 1 and
/// A = -kappa D(0), as required for R(1) = R(0) = 0; both are computed here,
/// never supplied. kappa is renormalised to -k^2 with k = sqrt(-kappa) so the
/// identity kappa = -k*k holds exactly in floating point.
struct SolutionParams {
    double kappa;       // < 0, equals -k*k exactly
    double k;           // > 0
    double A;           // -kappa * D(0) > 0
    double c1;          // gauge-adjusted
    double c2;          // gauge-adjusted
    double time_gauge;  // tau applied as (c1, c2) *= exp(A * tau)
    FeasibilityReport feasibility;

    static SolutionParams make(const DiffusivityModel& model, double kappa, double c1,
                               double c2, double time_gauge = 0.0);
};

/// Default half-width of the guard band around the diffusivity roots inside
/// which the reaction term is refused instead of evaluated.
inline constexpr double kPoleGuard = 1e-12;

/// R(u) = (A/D(u) + kappa) Phi(u), evaluated as (A + kappa D) Phi / D so that
/// u = 0, u = 1 (and u = a + b for quadratic D) give exact zeros.
/// Throws PoleAtRootError within pole_guard of a root of D.
double reaction(const DiffusivityModel& model, const SolutionParams& params, double u,
                double pole_guard = kPoleGuard);

/// R'(u); u = 0 and u = 1 use the pole-free closed forms
/// kappa D'(0) Phi(0) / D(0) and -kappa D(1) (D(0)/D(1) - 1).
double reaction_derivative(const DiffusivityModel& model, const SolutionParams& params,
                           double u, double pole_guard = kPoleGuard);

/// Pole-free product D(u) R(u) = (A + kappa D(u)) Phi(u); finite and nonzero
/// at the diffusivity roots.
double reaction_times_diffusivity(const DiffusivityModel& model,
                                  const SolutionParams& params, double u);

}  // namespace rdshock
