#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "rdshock/phase_plane.hpp"

using namespace rdshock;

namespace {

const DiffusivityModel& model() {
    static const DiffusivityModel m = DiffusivityModel::quadratic(0.2, 0.4);
    return m;
}

SolutionParams params() {
    return SolutionParams::make(model(), -1.0, model().flux_potential(0.0), 0.0);
}

/// Angle between the lines spanned by v and w (orientation-free).
double angle_between(double vx, double vy, double wx, double wy) {
    const double cross = vx * wy - vy * wx;
    const double ratio = std::fabs(cross) / (std::hypot(vx, vy) * std::hypot(wx, wy));
    return std::asin(std::min(ratio, 1.0));
}

}  // namespace

TEST_CASE("direction field") {
    const auto p = params();
    SUBCASE("(1, 0) is an equilibrium") {
        const auto s = vector_field(model(), p, {1.0, 0.0});
        CHECK(!s.wall);
        CHECK(s.du_dz == 0.0);
        CHECK(s.dq_dz == 0.0);
    }
    SUBCASE("walls are flagged and carry no hole") {
        for (double wall_u : {0.2, 0.4}) {
            const auto s = vector_field(model(), p, {wall_u, 0.05});
            CHECK(s.wall);
            // D R stays bounded away from zero at the wall: no smooth crossing
            CHECK(std::fabs(reaction_times_diffusivity(model(), p, wall_u)) > 1e-6);
        }
        CHECK(reaction_times_diffusivity(model(), p, 0.2) ==
              doctest::Approx(p.A * model().flux_potential(0.2)).epsilon(1e-13));
    }
    SUBCASE("field is tangent to the analytic trajectory") {
        const auto s = vector_field(model(), p, {0.3, p.k * model().flux_potential(0.3)});
        const double slope_ratio = s.dq_dz / s.du_dz;  // dq/du along the flow
        CHECK(slope_ratio ==
              doctest::Approx(p.k * model().diffusivity(0.3)).epsilon(1e-10));
    }
    SUBCASE("tangency holds at 500 random points of the upper branch") {
        std::mt19937_64 rng(2024);
        const ShockPair pair = shock_quadratic_closed_form(model());
        std::uniform_real_distribution<double> pick(pair.u_r + 1e-6, 1.0 - 1e-9);
        for (int i = 0; i < 500; ++i) {
            const double u = pick(rng);
            const auto s = vector_field(model(), p, {u, p.k * model().flux_potential(u)});
            REQUIRE(!s.wall);
            const double angle =
                angle_between(s.du_dz, s.dq_dz, 1.0, p.k * model().diffusivity(u));
            CHECK(angle <= 1e-8);
        }
    }
    SUBCASE("flow direction reverses between the walls") {
        const double q = 0.05;
        CHECK(vector_field(model(), p, {0.1, q}).du_dz > 0.0);
        CHECK(vector_field(model(), p, {0.3, q}).du_dz < 0.0);
        CHECK(vector_field(model(), p, {0.5, q}).du_dz > 0.0);
    }
}

TEST_CASE("analytic trajectory") {
    const auto p = params();
    SUBCASE("endpoints (1, 0) and (0, k Phi(0))") {
        const auto traj =
            analytic_trajectory(model(), p, std::vector<double>{0.0, 0.5, 1.0});
        CHECK(traj.back().q == 0.0);  // Phi(1) = 0 exactly
        CHECK(traj.front().q ==
              doctest::Approx(-0.11333333333333333).epsilon(1e-13));
    }
    SUBCASE("shock-split branches share the q level at the jump") {
        const ShockPair pair = shock_quadratic_closed_form(model());
        const auto traj = shock_split_trajectory(model(), p, pair, 100);
        REQUIRE(traj.lower.size() == 100);
        REQUIRE(traj.upper.size() == 100);
        CHECK(traj.lower.front().u == 0.0);
        CHECK(traj.lower.back().u == doctest::Approx(pair.u_l).epsilon(1e-14));
        CHECK(traj.upper.front().u == doctest::Approx(pair.u_r).epsilon(1e-14));
        CHECK(traj.upper.back().u == 1.0);
        CHECK(std::fabs(traj.lower.back().q - traj.upper.front().q) <= 1e-12);
    }
    SUBCASE("u outside [0,1] is rejected") {
        CHECK_THROWS_AS(analytic_trajectory(model(), p, std::vector<double>{-0.1}),
                        std::invalid_argument);
    }
}

TEST_CASE("nullclines and walls") {
    const auto p = params();
    const auto nc = nullclines_and_walls(model(), p, 0.0, 1.0, 101);
    CHECK(nc.walls[0] == 0.2);
    CHECK(nc.walls[1] == 0.4);
    CHECK(nc.q_nullcline.front().u == 0.0);
    CHECK(nc.q_nullcline.front().q == 0.0);  // R(0) = 0 exactly
    CHECK(nc.q_nullcline.back().u == 1.0);
    CHECK(nc.q_nullcline.back().q == 0.0);   // Phi(1) = 0 exactly
    // pole-free evaluation right on a wall
    bool saw_wall_sample = false;
    for (const auto& s : nc.q_nullcline)
        if (s.u == 0.2) {
            saw_wall_sample = true;
            CHECK(std::isfinite(s.q));
        }
    CHECK(saw_wall_sample);
}

TEST_CASE("left-moving front condition") {
    const auto p = params();
    const ShockPair pair = shock_quadratic_closed_form(model());

    SUBCASE("integral matches the quadrature oracle") {
        for (double u_a : {0.02, 0.05, 0.1}) {
            const auto rep = left_moving_condition(model(), p, u_a, FrontVariant::Sharp);
            const double ref = oracle::quadrature(
                [&](double u) { return reaction_times_diffusivity(model(), p, u); }, 0.0, u_a,
                1e-13);
            CHECK(std::fabs(rep.integral - ref) <= 1e-10);
        }
    }
    SUBCASE("sharp variant holds along the analytic wave") {
        const auto rep = left_moving_condition(model(), p, 0.05, FrontVariant::Sharp);
        CHECK(rep.holds);
        CHECK(rep.margin > 0.0);
        CHECK(rep.g_zero == doctest::Approx(p.k * model().flux_potential(0.0)).epsilon(1e-15));
    }
    SUBCASE("sharp margin shrinks to zero as u_a -> 0+ but stays positive") {
        double prev = 1e300;
        for (double u_a : {0.05, 0.01, 1e-3, 1e-4, 1e-5}) {
            const auto rep = left_moving_condition(model(), p, u_a, FrontVariant::Sharp);
            CHECK(rep.margin > 0.0);
            CHECK(rep.margin < prev);
            prev = rep.margin;
        }
        // sharp and smooth bounds differ by g(0)^2/2 by construction
        const auto sharp = left_moving_condition(model(), p, 0.01, FrontVariant::Sharp);
        const auto smooth = left_moving_condition(model(), p, 0.01, FrontVariant::Smooth);
        CHECK(sharp.bound - smooth.bound ==
              doctest::Approx(0.5 * sharp.g_zero * sharp.g_zero).epsilon(1e-14));
    }
    SUBCASE("smooth variant fails near the front, as a smooth receding wave cannot exist") {
        const auto rep = left_moving_condition(model(), p, 0.05, FrontVariant::Smooth);
        CHECK(!rep.holds);
    }
    SUBCASE("report is produced at u_l/2 with the smooth variant") {
        const auto rep =
            left_moving_condition(model(), p, pair.u_l / 2.0, FrontVariant::Smooth);
        CHECK(rep.u_a == pair.u_l / 2.0);
        CHECK(std::isfinite(rep.margin));
    }
    SUBCASE("u_a outside (0, u_l) is a domain error") {
        CHECK_THROWS_AS(left_moving_condition(model(), p, pair.u_l + 0.01, FrontVariant::Sharp),
                        std::domain_error);
        CHECK_THROWS_AS(left_moving_condition(model(), p, 0.0, FrontVariant::Sharp),
                        std::domain_error);
    }
}
