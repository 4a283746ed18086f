#include <cmath>
#include <vector>

#include "doctest.h"

#include "fbcd/analysis.hpp"
#include "fbcd/solver.hpp"

using namespace fbcd;

namespace {

GridSpec small_grid(double t_end, int n_xi = 64, double dt = 1e-3) {
    GridSpec g;
    g.n_xi = n_xi;
    g.dt = dt;
    g.t_end = t_end;
    return g;
}

} // namespace

TEST_CASE("boundary_flux: one-sided second-order stencil") {
    const int n = 64;
    const double dxi = 1.0 / n;
    std::vector<double> linear(n + 1), quadratic(n + 1), zero(n + 1, 0.0);
    for (int j = 0; j <= n; ++j) {
        const double xi = dxi * j;
        linear[std::size_t(j)] = 1 - xi;
        quadratic[std::size_t(j)] = 1 - xi * xi;
    }
    CHECK(boundary_flux(linear, 2.0, dxi) == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(boundary_flux(quadratic, 1.0, dxi) == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(boundary_flux(zero, 1.0, dxi) == 0.0);
}

TEST_CASE("cross_interpolate: zero extension past the front") {
    const int n = 32;
    std::vector<double> ones(n + 1, 1.0), cosine = cosine_profile(1.0, n);
    const double s = 1.7;
    CHECK(cross_interpolate(cosine, s, s) == 0.0);
    CHECK(cross_interpolate(cosine, s, 2 * s) == 0.0);
    CHECK(cross_interpolate(ones, s, 0.3 * s) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("init_state: validation and exact mapping") {
    Params p;
    const GridSpec grid = small_grid(1.0);

    InitialData zero;
    zero.u0.assign(65, 0.0);
    zero.v0 = cosine_profile(0.5, 64);
    CHECK_THROWS_AS(init_state(p, zero, grid), BadInitialData);

    InitialData good;
    good.s1_0 = 2.0;
    good.s2_0 = 1.0;
    good.u0 = cosine_profile(1.0, 64);  // cos(pi x/(2 s0)) maps to cos(pi xi/2)
    good.v0 = cosine_profile(0.5, 64);
    const State st = init_state(p, good, grid);
    CHECK(st.u.size() == std::size_t(grid.n_xi) + 1);
    CHECK(st.u.back() == 0.0);
    CHECK(st.v.back() == 0.0);
    for (int j = 0; j <= grid.n_xi; ++j) {
        const double xi = double(j) / grid.n_xi;
        CHECK(st.u[std::size_t(j)] == doctest::Approx(std::cos(M_PI * xi / 2)).epsilon(1e-6));
    }

    // grid-aligned resampling is exact to round-off
    InitialData aligned = good;
    aligned.u0 = cosine_profile(1.0, grid.n_xi);
    aligned.v0 = cosine_profile(0.5, grid.n_xi);
    const State st2 = init_state(p, aligned, grid);
    for (int j = 0; j <= grid.n_xi; ++j)
        CHECK(st2.u[std::size_t(j)] ==
              doctest::Approx(aligned.u0[std::size_t(j)]).epsilon(1e-13));
}

TEST_CASE("step: the zero state is an equilibrium with static fronts") {
    Params p;
    const GridSpec grid = small_grid(1.0);
    State st;
    st.t = 0;
    st.s1 = 1.5;
    st.s2 = 2.5;
    st.u.assign(std::size_t(grid.n_xi) + 1, 0.0);
    st.v.assign(std::size_t(grid.n_xi) + 1, 0.0);
    const State next = step(st, p, grid);
    CHECK(next.t == doctest::Approx(grid.dt));
    CHECK(next.s1 == st.s1);
    CHECK(next.s2 == st.s2);
    for (double x : next.u) CHECK(x == 0.0);
    for (double x : next.v) CHECK(x == 0.0);
}

TEST_CASE("run: decoupled system matches the single-species solver") {
    Params p;  // k = h = 0
    InitialData init;
    init.s1_0 = init.s2_0 = 1.0;
    init.u0 = cosine_profile(0.5, 256);
    init.v0 = cosine_profile(0.5, 256);
    GridSpec grid = small_grid(5.0, 128, 5e-4);
    const Trajectory coupled = run(p, init, grid);

    SingleSpeciesSpec spec;
    spec.d = p.d1;
    spec.r = p.r1;
    spec.a = 1;
    spec.mu = p.mu1;
    spec.g0 = init.s1_0;
    spec.w0 = init.u0;
    const Trajectory single = solve_single_species(spec, grid);

    REQUIRE(coupled.t.size() == single.t.size());
    double worst = 0;
    for (std::size_t i = 0; i < coupled.t.size(); ++i) {
        worst = std::max(worst, std::abs(coupled.s1[i] - single.s1[i]));
        worst = std::max(worst, std::abs(coupled.u_max[i] - single.u_max[i]));
    }
    for (std::size_t i = 0; i < coupled.profiles.size(); ++i)
        for (std::size_t j = 0; j < coupled.profiles[i].u.size(); ++j)
            worst = std::max(worst,
                             std::abs(coupled.profiles[i].u[j] - single.profiles[i].u[j]));
    CHECK(worst < 1e-6);
}

TEST_CASE("run: fronts strictly increase and the upper barrier holds") {
    Params p;
    p.k = p.h = 0.5;
    InitialData init;
    init.s1_0 = init.s2_0 = 2.0;
    init.u0 = cosine_profile(1.2, 256);
    init.v0 = cosine_profile(0.5, 256);
    const GridSpec grid = small_grid(8.0, 128, 5e-4);
    const Trajectory traj = run(p, init, grid);

    const double barrier = std::max(1.0, 1.2) + 1e-3;
    for (std::size_t i = 0; i + 1 < traj.t.size(); ++i) {
        CHECK(traj.s1[i + 1] > traj.s1[i]);
        CHECK(traj.s2[i + 1] > traj.s2[i]);
    }
    for (double m : traj.u_max) CHECK(m <= barrier);
    CHECK_FALSE(traj.watchdog_fired);
}

TEST_CASE("run: front obeys the Stefan-rate bound from the certificate K") {
    Params p;
    p.mu1 = 0.3;
    InitialData init;
    init.s1_0 = 1.0;
    init.s2_0 = 5.0;
    init.u0 = cosine_profile(0.5, 512);
    init.v0 = cosine_profile(0.5, 512);
    const GridSpec grid = small_grid(10.0, 128, 5e-4);
    const Trajectory traj = run(p, init, grid);

    const Thm6Certificate cert = thm6_certificate(p, init);
    for (std::size_t i = 0; i < traj.t.size(); ++i)
        CHECK(traj.s1[i] <= cert.K * p.mu1 * traj.t[i] + init.s1_0 + 1e-3);
}

TEST_CASE("run: t_end=0 yields only the initial snapshot") {
    Params p;
    InitialData init;
    init.u0 = cosine_profile(0.5, 64);
    init.v0 = cosine_profile(0.5, 64);
    const Trajectory traj = run(p, init, small_grid(0.0));
    CHECK(traj.t.size() == 1);
    CHECK(traj.t[0] == 0.0);
    CHECK(traj.profiles.size() == 1);
}

TEST_CASE("solve_single_species: zero initial profile rejected") {
    SingleSpeciesSpec spec;
    spec.w0.assign(65, 0.0);
    CHECK_THROWS_AS(solve_single_species(spec, small_grid(1.0)), BadInitialData);
}

TEST_CASE("manufactured solution: temporal order at least 0.9") {
    // fixed fine space grid; halve dt and watch the front-position error
    const double A = 0.5, s0 = 1.0, beta = 0.4, t_end = 0.5;
    auto s_of = [=](double t) { return s0 * (1 + beta * t); };
    auto exact = [=](double t, double x) { return A * std::cos(M_PI * x / (2 * s_of(t))); };

    ManufacturedOptions opts;
    opts.front = s_of;
    opts.front_speed = [=](double) { return s0 * beta; };
    opts.source = [=](double t, double x) {
        const double s = s_of(t), sp = s0 * beta;
        const double th = M_PI * x / (2 * s);
        const double u = A * std::cos(th);
        const double ut = A * std::sin(th) * M_PI * x * sp / (2 * s * s);
        const double uxx = -A * (M_PI / (2 * s)) * (M_PI / (2 * s)) * std::cos(th);
        return ut - uxx - u * (1 - u);
    };

    auto error_at = [&](double dt) {
        const int n = 512;
        SingleSpeciesSpec spec;
        spec.g0 = s0;
        spec.w0.resize(n + 1);
        for (int j = 0; j <= n; ++j) spec.w0[std::size_t(j)] = exact(0, s0 * double(j) / n);
        spec.w0.back() = 0;
        const Trajectory traj = solve_single_species(spec, small_grid(t_end, n, dt), opts);
        const ProfileSnapshot& last = traj.profiles.back();
        double err = 0;
        for (int j = 0; j <= n; ++j)
            err = std::max(err, std::abs(last.u[std::size_t(j)] -
                                         exact(t_end, s_of(t_end) * double(j) / n)));
        return err;
    };

    const double e1 = error_at(8e-3);
    const double e2 = error_at(4e-3);
    const double order = std::log2(e1 / e2);
    CHECK_MESSAGE(order >= 0.9, "temporal order=", order, " errors=", e1, "/", e2);
}
