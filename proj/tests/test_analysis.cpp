#include <cmath>

#include "doctest.h"

#include "fbcd/analysis.hpp"
#include "fbcd/solver.hpp"

using namespace fbcd;

namespace {

// Hand-built trajectory with prescribed front series and scalar diagnostics.
Trajectory synthetic(double t_end, int n, double slope1, double drift1, double final_max1) {
    Trajectory traj;
    traj.n_xi = 64;
    for (int i = 0; i <= n; ++i) {
        const double t = t_end * double(i) / n;
        traj.t.push_back(t);
        traj.s1.push_back(slope1 * t + drift1);
        traj.s2.push_back(slope1 * t + drift1);
        traj.s1dot.push_back(slope1);
        traj.s2dot.push_back(slope1);
        const double val = final_max1;
        traj.u_origin.push_back(val);
        traj.v_origin.push_back(val);
        traj.u_mid.push_back(val);
        traj.v_mid.push_back(val);
        traj.u_max.push_back(val);
        traj.v_max.push_back(val);
        traj.u_c1norm.push_back(val);
        traj.v_c1norm.push_back(val);
    }
    return traj;
}

} // namespace

TEST_CASE("thresholds: printed formulas and undefined tilde branches") {
    Params p;
    const Thresholds t = thresholds(p);
    CHECK(t.s1_star == doctest::Approx(M_PI_2).epsilon(1e-14));
    CHECK(t.s2_star == doctest::Approx(M_PI_2).epsilon(1e-14));

    Params pk = p;
    pk.k = 0.75;
    const Thresholds tk = thresholds(pk);
    REQUIRE(tk.s1_tilde.has_value());
    CHECK(*tk.s1_tilde == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(*tk.s1_tilde > tk.s1_star);

    Params p1 = p;
    p1.k = 1.0;
    CHECK_FALSE(thresholds(p1).s1_tilde.has_value());

    // both thresholds scale as sqrt(d/r)
    Params ph = p;
    ph.r1 = 0.5;
    CHECK(thresholds(ph).s1_star == doctest::Approx(std::sqrt(2.0) * t.s1_star).epsilon(1e-13));
}

TEST_CASE("coexistence_limits: formula and degeneracy") {
    const auto [u, v] = coexistence_limits(0.5, 0.5);
    CHECK(u == doctest::Approx(2.0 / 3).epsilon(1e-15));
    CHECK(v == doctest::Approx(2.0 / 3).epsilon(1e-15));
    const auto [u0, v0] = coexistence_limits(0, 0);
    CHECK(u0 == 1.0);
    CHECK(v0 == 1.0);
    CHECK_THROWS_AS(coexistence_limits(1, 1), DegenerateCompetition);
}

TEST_CASE("iteration_bounds: recurrence values and geometric bracketing") {
    const IterationBounds b = iteration_bounds(0.5, 0.5, 60);
    CHECK(b.u_lower[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(b.v_upper[1] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(b.u_lower[1] == doctest::Approx(0.625).epsilon(1e-15));
    CHECK(b.v_upper[2] == doctest::Approx(0.6875).epsilon(1e-15));
    CHECK(b.converged);
    CHECK(std::abs(b.u_lower.back() - 2.0 / 3) < 1e-10);

    // bracket width contracts by hk per iteration
    const double limit = 2.0 / 3;
    for (std::size_t i = 1; i + 1 < b.u_lower.size(); ++i) {
        const double w_prev = std::abs(b.u_lower[i - 1] - limit);
        const double w = std::abs(b.u_lower[i] - limit);
        if (w_prev > 1e-14) CHECK(w <= 0.25 * w_prev + 1e-14);
    }

    const IterationBounds b0 = iteration_bounds(1e-12, 0.3, 5);
    for (double u : b0.u_lower) CHECK(u == doctest::Approx(1.0).epsilon(1e-9));
    for (std::size_t i = 1; i < b0.v_upper.size(); ++i)
        CHECK(b0.v_upper[i] == doctest::Approx(0.7).epsilon(1e-9));
}

TEST_CASE("fit_front_speed: exact and perturbed linear data") {
    const Trajectory lin = synthetic(100, 400, 2.0, 3.0, 0.5);
    const FrontFit fit = fit_front_speed(lin, 1, 0.3);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.drift == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(fit.rms_residual < 1e-10);

    Trajectory wobble = lin;
    for (std::size_t i = 0; i < wobble.t.size(); ++i)
        wobble.s1[i] += 1e-3 * std::sin(wobble.t[i]);
    const FrontFit fit2 = fit_front_speed(wobble, 1, 0.3);
    CHECK(std::abs(fit2.slope - 2.0) < 1e-3);

    Trajectory tiny = synthetic(1, 2, 1, 1, 1);
    CHECK_THROWS_AS(fit_front_speed(tiny, 1, 0.5), InsufficientData);
}

TEST_CASE("classify: the three label branches") {
    Params p;
    const Thresholds thr = thresholds(p);

    const Trajectory vanish = synthetic(100, 200, 0.0, 1.0, 1e-6);
    CHECK(classify(vanish, thr).species1.label == Label::Vanishing);

    const Trajectory spread = synthetic(100, 200, 0.4, 0.5, 1.0);
    CHECK(classify(spread, thr).species1.label == Label::Spreading);

    const Trajectory stuck = synthetic(100, 200, 1e-5, 1.0, 0.5);
    CHECK(classify(stuck, thr).species1.label == Label::Indeterminate);
}

TEST_CASE("dichotomy_consistency: implications fire only when observed") {
    Params p;
    p.k = p.h = 0.5;
    const Thresholds thr = thresholds(p);

    // bounded species 1 ending above s1*: species 2 must spread, and here it does not
    Trajectory traj = synthetic(100, 200, 0.0, 2.0, 1e-6);
    const Outcome both_vanish = classify(traj, thr);
    bool saw_fail = false;
    for (const CheckResult& c : dichotomy_consistency(both_vanish, thr, traj, p))
        if (c.status == CheckStatus::Fail) saw_fail = true;
    CHECK(saw_fail);

    // hypotheses unobserved: everything not-applicable or passing
    Trajectory spread = synthetic(100, 200, 0.4, 4.0, 0.66);
    const Outcome both_spread = classify(spread, thr);
    for (const CheckResult& c : dichotomy_consistency(both_spread, thr, spread, p))
        CHECK(c.status != CheckStatus::Fail);
}

TEST_CASE("thm6_certificate: the printed K and L formulas") {
    Params p;
    p.mu1 = 0.1;
    InitialData init;
    init.s1_0 = 1.0;
    init.s2_0 = 7.0;
    init.u0 = cosine_profile(1.0, 2048);  // ||u0||=1, min u0' = -pi/2
    init.v0 = cosine_profile(0.8, 2048);
    const Thm6Certificate cert = thm6_certificate(p, init);
    CHECK(cert.K == doctest::Approx(M_PI).epsilon(1e-3));
    REQUIRE(cert.L_of_mu1.has_value());
    const double expect_L = 2 * M_PI / std::sqrt(2 - M_PI * M_PI * 0.01);
    CHECK(*cert.L_of_mu1 == doctest::Approx(expect_L).epsilon(1e-2));
    CHECK(cert.mu1_bar == doctest::Approx(cert.sigma_bar / cert.K).epsilon(1e-12));
    CHECK(cert.sigma_bar < std::sqrt(2.0));

    // K is stable under refining the sampling beyond 512 nodes
    InitialData coarse = init;
    coarse.u0 = cosine_profile(1.0, 512);
    coarse.v0 = cosine_profile(0.8, 512);
    const Thm6Certificate c2 = thm6_certificate(p, coarse);
    CHECK(std::abs(c2.K - cert.K) / cert.K < 0.01);

    Params fast = p;
    fast.mu1 = 1.0;  // K*mu1 > sqrt(2 d2 r2): L undefined, certificate cannot hold
    const Thm6Certificate c3 = thm6_certificate(fast, init);
    CHECK_FALSE(c3.L_of_mu1.has_value());
    CHECK_FALSE(c3.holds);

    InitialData inverted = init;
    inverted.s2_0 = 0.5;
    CHECK_THROWS_AS(thm6_certificate(p, inverted), GapTooSmall);
}

TEST_CASE("eigen_length: closed form and round trip") {
    CHECK(eigen_length(1, 1, 1, -0.5) == doctest::Approx(2 * M_PI).epsilon(1e-14));
    CHECK(eigen_length(1, 1, 0, 0) == doctest::Approx(M_PI).epsilon(1e-14));
    const double ell = eigen_length(2, 0.7, 0.3, 0.1);
    CHECK(M_PI / ell ==
          doctest::Approx(std::sqrt(4 * 2 * (0.7 + 0.1) - 0.09) / 4).epsilon(1e-14));
    CHECK_THROWS_AS(eigen_length(1, 1, 2, 0), ImaginaryRoot);
}

TEST_CASE("thm7_delta_max: quadratic root of the barrier constraint") {
    const double delta = thm7_delta_max(1, 1, 1, 0.5, 0.5);
    CHECK(delta == doctest::Approx((-1 + std::sqrt(2.5)) / 2).epsilon(1e-13));
    CHECK(delta * (1 + delta) == doctest::Approx(0.375).epsilon(1e-13));

    const double d1 = thm7_delta_max(1, 1, 1, 1.0, 0.7);  // k=1: RHS = r2/2
    CHECK(d1 * (1 + d1) == doctest::Approx(0.5).epsilon(1e-13));

    CHECK_THROWS_AS(thm7_delta_max(1, 1, 1, 0.0, 1.0), InfeasibleBarrier);
}

TEST_CASE("speed_lower_bound_check: synthetic slopes against reduced speeds") {
    Params p;
    p.k = 1.5;  // species-1 bound undefined
    p.h = 0.5;
    Trajectory slow = synthetic(100, 400, 0.1, 1.0, 0.8);
    const SpeedBoundReport rep = speed_lower_bound_check(slow, p);
    CHECK_FALSE(rep.species1.applicable);
    CHECK(rep.species2.applicable);
    CHECK_FALSE(rep.species2.pass);  // 0.1 is far below the reduced speed
    CHECK_FALSE(rep.all_pass());
}
