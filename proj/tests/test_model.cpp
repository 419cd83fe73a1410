#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "rdshock/model.hpp"

using namespace rdshock;

namespace {

const DiffusivityModel& reference_model() {
    static const DiffusivityModel model = DiffusivityModel::quadratic(0.2, 0.4);
    return model;
}

SolutionParams reference_params() {
    return SolutionParams::make(reference_model(), -1.0, -1.0, 0.0);
}

}  // namespace

TEST_CASE("diffusivity evaluation") {
    const auto& m = reference_model();
    CHECK(m.diffusivity(0.2) == 0.0);  // stored root, exact
    CHECK(m.diffusivity(0.4) == 0.0);
    CHECK(m.diffusivity(0.0) == doctest::Approx(0.08).epsilon(1e-15));
    CHECK(m.diffusivity(0.3) == doctest::Approx(-0.01).epsilon(1e-13));
    CHECK(m.diffusivity(0.3, 1) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(m.diffusivity(0.7, 2) == doctest::Approx(2.0).epsilon(1e-15));

    const auto quartic = DiffusivityModel::quartic(0.2, 0.4, 0.6, 0.2);
    CHECK(quartic.diffusivity(0.0) == doctest::Approx(0.0448).epsilon(1e-14));
    CHECK(quartic.diffusivity(0.2) == 0.0);
    CHECK(quartic.diffusivity(0.4) == 0.0);
    CHECK_THROWS_AS(quartic.diffusivity(0.5, 3), std::invalid_argument);
}

TEST_CASE("flux potential") {
    const auto& m = reference_model();
    CHECK(m.flux_potential(1.0) == 0.0);  // exact by construction

    const double phi0_oracle = oracle::quadrature(
        [&](double u) { return m.diffusivity(u); }, 1.0, 0.0, 1e-13);
    CHECK(std::fabs(m.flux_potential(0.0) - phi0_oracle) < 1e-12);
    CHECK(m.flux_potential(0.0) == doctest::Approx(-0.11333333333333334).epsilon(1e-13));

    // cubic factored form of the antiderivative for quadratic D
    const double a = 0.2, b = 0.4, u = 0.6;
    const double factored =
        (u - 1.0) * (2.0 * u * u + (2.0 - 3.0 * a - 3.0 * b) * u + 2.0 - 3.0 * a - 3.0 * b +
                     6.0 * a * b) / 6.0;
    CHECK(std::fabs(m.flux_potential(u) - factored) < 1e-14);
}

TEST_CASE("flux potential differentiates back to the diffusivity coefficients") {
    for (const auto& m : {DiffusivityModel::quadratic(0.2, 0.4),
                          DiffusivityModel::quartic(0.2, 0.4, 0.6, 0.2),
                          DiffusivityModel::generic_polynomial(
                              {0.08, -0.6, 1.0}, 0.2, 0.4)}) {
        const auto d_back = m.flux_potential_poly().derivative().coeffs();
        const auto d_ref = m.diffusivity_poly().coeffs();
        REQUIRE(d_back.size() == d_ref.size());
        for (std::size_t i = 0; i < d_ref.size(); ++i)
            CHECK(std::fabs(d_back[i] - d_ref[i]) <=
                  1e-14 * std::max(1.0, std::fabs(d_ref[i])));
    }
}

TEST_CASE("flux potential matches the quadrature oracle at random points") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const auto& m = reference_model();
    for (int i = 0; i < 1000; ++i) {
        const double u = uni(rng);
        const double ref = oracle::quadrature([&](double s) { return m.diffusivity(s); }, 1.0,
                                              u, 1e-12);
        CHECK(std::fabs(m.flux_potential(u) - ref) < 1e-10);
    }
}

TEST_CASE("reaction term zeros and pole guard") {
    const auto& m = reference_model();
    const auto p = reference_params();
    CHECK(reaction(m, p, 1.0) == 0.0);
    CHECK(std::fabs(reaction(m, p, 0.6)) < 1e-15);  // u = a + b
    CHECK(reaction(m, p, 0.0) == 0.0);  // enforced by A = -kappa D(0)
    CHECK_THROWS_AS(reaction(m, p, 0.2 + 1e-15), PoleAtRootError);
    CHECK_THROWS_AS(reaction(m, p, 0.4 - 1e-13), PoleAtRootError);
}

TEST_CASE("reaction and diffusivity product identity") {
    const auto& m = reference_model();
    const auto p = reference_params();
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    int checked = 0;
    while (checked < 1000) {
        const double u = uni(rng);
        if (std::fabs(u - 0.2) < 1e-6 || std::fabs(u - 0.4) < 1e-6) continue;
        const double lhs = reaction(m, p, u) * m.diffusivity(u);
        const double rhs = reaction_times_diffusivity(m, p, u);
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(rhs)));
        ++checked;
    }
}

TEST_CASE("reaction derivative closed forms and finite differences") {
    const auto& m = reference_model();
    const auto p = reference_params();
    CHECK(reaction_derivative(m, p, 0.0) == doctest::Approx(-0.85).epsilon(1e-13));
    CHECK(reaction_derivative(m, p, 1.0) == doctest::Approx(-0.4).epsilon(1e-13));

    // central finite difference of R, h = 1e-6, relative 1e-6
    const double h = 1e-6;
    for (double u : {0.0, 1.0, 0.05, 0.1, 0.55, 0.8, 0.95}) {
        const double lo = u - h, hi = u + h;
        if (lo < -0.5) continue;
        const double fd = (reaction(m, p, hi) - reaction(m, p, lo)) / (2.0 * h);
        const double an = reaction_derivative(m, p, u);
        CHECK(std::fabs(fd - an) <= 1e-6 * std::max(1.0, std::fabs(an)));
    }

    // a + b = 1 makes u = 1 marginal
    const auto balanced = DiffusivityModel::quadratic(0.3, 0.7);
    const auto bp = SolutionParams::make(balanced, -1.0, -1.0, 0.0);
    CHECK(reaction_derivative(balanced, bp, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("reaction derivative sign pattern") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    int below = 0, above = 0;
    while (below < 30 || above < 30) {
        const double a = 0.05 + 0.5 * uni(rng);
        const double b = a + 0.02 + (0.95 - a) * uni(rng) * 0.9;
        if (!(b < 1.0 && b > a)) continue;
        if (b >= (a + 2.0) / 3.0) continue;  // keep Phi < 0 on [0,1)
        const auto m = DiffusivityModel::quadratic(a, b);
        const auto p = SolutionParams::make(m, -1.0, -1.0, 0.0);
        if (a + b < 1.0 && below < 30) {
            CHECK(reaction_derivative(m, p, 0.0) < 0.0);
            CHECK(reaction_derivative(m, p, 1.0) < 0.0);
            ++below;
        } else if (a + b > 1.0 && above < 30) {
            CHECK(reaction_derivative(m, p, 1.0) > 0.0);
            ++above;
        }
    }
}

TEST_CASE("parameter validation report") {
    SUBCASE("reference parameters pass everything") {
        const auto r = validate_params(reference_model());
        CHECK(r.roots_ordered);
        CHECK(r.sum_below_one);
        CHECK(r.phi_negative_bound);  // 0.4 < 0.7333
        CHECK(r.shock_feasible);      // 0.4 < 0.7464
        CHECK(r.phi_negative_on_unit);
        CHECK(r.all());
    }
    SUBCASE("a=0.05, b=0.4 fails the shock-feasibility bound") {
        const auto r = validate_params(DiffusivityModel::quadratic(0.05, 0.4));
        CHECK_FALSE(r.shock_feasible);  // 0.4 >= 0.18660
        CHECK(r.roots_ordered);
        CHECK_FALSE(r.all());
    }
    SUBCASE("a=0.3, b=0.8 fails a+b<1") {
        const auto r = validate_params(DiffusivityModel::quadratic(0.3, 0.8));
        CHECK_FALSE(r.sum_below_one);
        CHECK_FALSE(r.all());
    }
}

TEST_CASE("solution parameter construction") {
    const auto& m = reference_model();
    const auto p = reference_params();
    CHECK(p.kappa == -(p.k * p.k));  // exact identity
    CHECK(p.A == doctest::Approx(0.08).epsilon(1e-15));
    CHECK(p.A > 0.0);
    CHECK_THROWS_AS(SolutionParams::make(m, 1.0, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("generic polynomial models need genuine roots and a positive cofactor") {
    CHECK_THROWS_AS(DiffusivityModel::generic_polynomial({1.0, 0.0, 1.0}, 0.2, 0.4),
                    std::invalid_argument);
    // (u - 0.2)(u - 0.4) expanded
    const auto m = DiffusivityModel::generic_polynomial({0.08, -0.6, 1.0}, 0.2, 0.4);
    CHECK(m.diffusivity(0.2) == 0.0);
    CHECK(m.diffusivity(0.3) == doctest::Approx(-0.01).epsilon(1e-13));
}
