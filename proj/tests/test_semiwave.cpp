#include <cmath>

#include "doctest.h"

#include "fbcd/semiwave.hpp"

#include "bvp_oracle.hpp"

using namespace fbcd;

namespace {

// Frozen reference for c(mu=1, a=1, b=1, d=1), produced by
// semiwave_speed_oracle and pinned here as a regression anchor.
constexpr double kSpeedUnitRef = 0.364370723894588;

double profile_defect(const SemiWave& sw, const SemiWaveParams& p) {
    const double hgrid = sw.y_grid[1] - sw.y_grid[0];
    double worst = 0;
    for (std::size_t i = 1; i + 1 < sw.q.size(); ++i) {
        const double qpp = (sw.q[i + 1] - 2 * sw.q[i] + sw.q[i - 1]) / (hgrid * hgrid);
        const double qp = (sw.q[i + 1] - sw.q[i - 1]) / (2 * hgrid);
        worst = std::max(worst,
                         std::abs(p.d * qpp - sw.c * qp + sw.q[i] * (p.a - p.b * sw.q[i])));
    }
    return worst;
}

} // namespace

TEST_CASE("semiwave: unit parameters match the BVP Newton oracle") {
    const double tol = 1e-8;
    const SemiWave sw = solve_semiwave(SemiWaveParams(1, 1, 1, 1), tol);
    CHECK(sw.c == doctest::Approx(kSpeedUnitRef).epsilon(5e-8));
    const double oracle = semiwave_speed_oracle(SemiWaveParams(1, 1, 1, 1));
    CHECK(oracle == doctest::Approx(kSpeedUnitRef).epsilon(1e-9));
    CHECK(std::abs(sw.c - oracle) <= 5 * tol);
}

TEST_CASE("semiwave: invariants of the returned profile") {
    const SemiWaveParams p(1.5, 2.0, 0.7, 0.8);
    const double tol = 1e-8;
    const SemiWave sw = solve_semiwave(p, tol);
    CHECK(sw.c > 0);
    CHECK(sw.c < p.c_max());
    CHECK(sw.q.front() == 0.0);
    for (std::size_t i = 0; i + 1 < sw.q.size(); ++i) CHECK(sw.q[i] < sw.q[i + 1]);
    CHECK(std::abs(sw.q.back() - p.a / p.b) < 1e-5 * (p.a / p.b));
    // first divided difference at 0 equals c/mu
    const double slope0 = (sw.q[1] - sw.q[0]) / (sw.y_grid[1] - sw.y_grid[0]);
    CHECK(slope0 == doctest::Approx(sw.c / p.mu).epsilon(2e-2));
    CHECK(sw.residual <= 10 * tol);
    CHECK(profile_defect(sw, p) <= 10 * tol);
}

TEST_CASE("semiwave: scaling symmetry c(l^2 mu, a, b, l^2 d) = l c(mu,a,b,d)") {
    const double tol = 1e-8;
    const double c0 = solve_semiwave(SemiWaveParams(1, 1, 1, 1), tol).c;
    for (double lambda : {0.5, 2.0, 4.0}) {
        const double cs =
            solve_semiwave(SemiWaveParams(lambda * lambda, 1, 1, lambda * lambda), tol).c;
        CHECK(std::abs(cs - lambda * c0) <= 2 * tol * std::max(1.0, lambda));
    }
}

TEST_CASE("semiwave: asymptotic regimes of the speed") {
    const double tol = 1e-8;
    const double big = solve_semiwave(SemiWaveParams(1e4, 1, 1, 1), tol).c / 2.0;
    CHECK(big >= 0.90);
    CHECK(big < 1.00);
    const double small = solve_semiwave(SemiWaveParams(1e-3, 1, 1, 1), tol).c / 1e-3;
    CHECK(small > 0.9 * (1 / std::sqrt(3.0)));
    CHECK(small < 1.1 * (1 / std::sqrt(3.0)));
}

TEST_CASE("semiwave: monotone in mu and a, antitone in b") {
    const double tol = 1e-8;
    auto c_of = [&](double mu, double a, double b) {
        return solve_semiwave(SemiWaveParams(mu, a, b, 1), tol).c;
    };
    const double grid[] = {0.25, 0.5, 1.0, 2.0, 4.0};
    for (int i = 0; i + 1 < 5; ++i) {
        CHECK(c_of(grid[i + 1], 1, 1) > c_of(grid[i], 1, 1) + 2 * tol);
        CHECK(c_of(1, grid[i + 1], 1) > c_of(1, grid[i], 1) + 2 * tol);
        CHECK(c_of(1, 1, grid[i + 1]) < c_of(1, 1, grid[i]) - 2 * tol);
    }
}

TEST_CASE("semiwave: oracle equivalence across a parameter grid") {
    const double tol = 1e-8;
    for (double mu : {0.5, 1.0, 2.0})
        for (double a : {0.5, 1.0, 2.0})
            for (double b : {0.5, 1.0, 2.0})
                for (double d : {0.5, 1.0, 2.0}) {
                    const SemiWaveParams p(mu, a, b, d);
                    const double c_shoot = solve_semiwave(p, tol).c;
                    const double c_newton = semiwave_speed_oracle(p);
                    CHECK_MESSAGE(std::abs(c_shoot - c_newton) <= 5 * tol,
                                  "mu=", mu, " a=", a, " b=", b, " d=", d, " shoot=", c_shoot,
                                  " newton=", c_newton);
                }
}

TEST_CASE("semiwave: degenerate parameters rejected at construction") {
    CHECK_THROWS_AS(SemiWaveParams(0, 1, 1, 1), ValueError);
    CHECK_THROWS_AS(SemiWaveParams(1, -1, 1, 1), ValueError);
    CHECK_THROWS_AS(SemiWaveParams(1, 1, 0, 1), ValueError);
    CHECK_THROWS_AS(SemiWaveParams(1, 1, 1, -2), ValueError);
}

TEST_CASE("competition_speeds: reduced speeds exist only below exclusion") {
    Params p;  // defaults: all ones, k=h=0
    p.k = 1.5;
    p.h = 0.5;
    const SpeedSummary s = competition_speeds(p);
    CHECK_FALSE(s.c1_reduced.has_value());
    CHECK(s.c2_reduced.has_value());
    CHECK(s.c2_free > 0);
}

TEST_CASE("competition_speeds: k=0 reduces to the free speed") {
    Params p;
    p.k = 0;
    p.h = 0;
    const SpeedSummary s = competition_speeds(p);
    REQUIRE(s.c1_reduced.has_value());
    const double c_free1 = solve_semiwave(SemiWaveParams(p.mu1, p.r1, p.r1, p.d1), 1e-8).c;
    CHECK(*s.c1_reduced == doctest::Approx(c_free1).epsilon(1e-7));
}

TEST_CASE("competition_speeds: symmetric parameters give equal reduced speeds") {
    Params p;
    p.k = p.h = 0.4;
    const SpeedSummary s = competition_speeds(p);
    REQUIRE(s.c1_reduced.has_value());
    REQUIRE(s.c2_reduced.has_value());
    CHECK(*s.c1_reduced == doctest::Approx(*s.c2_reduced).epsilon(1e-10));
}

TEST_CASE("in_region_A: tiny mu2 is inside, symmetric parameters are not") {
    Params p;
    p.k = 0.5;
    p.mu2 = 1e-4;
    CHECK(bool(in_region_A(p)));

    Params q;
    q.k = 0.5;  // same mu, same rates: c1(mu, r(1-k)) < c2(mu, r)
    const RegionAResult res = in_region_A(q);
    CHECK_FALSE(res.in_A);
    CHECK_FALSE(res.gap_below_resolution);

    Params bad;
    bad.k = 1.0;
    CHECK_THROWS_AS(in_region_A(bad), UndefinedRegion);
}
