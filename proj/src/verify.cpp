#include "fbcd/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "fbcd/runspec.hpp"
#include "fbcd/semiwave.hpp"
#include "fbcd/solver.hpp"

namespace fbcd {

namespace {

using Results = std::vector<CheckResult>;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

void add(Results& r, const std::string& name, bool pass, const std::string& detail) {
    r.push_back({name, pass ? CheckStatus::Pass : CheckStatus::Fail, detail});
}

bool strictly_monotone(const std::vector<double>& v, int dir, double margin) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (dir * (v[i + 1] - v[i]) <= margin) return false;
    return true;
}

// ---------------------------------------------------------------- AC-1
Results ac1() {
    Results r;
    Timer timer;
    const double tol = 1e-8;

    const double c_big = solve_semiwave(SemiWaveParams(1e4, 1, 1, 1), tol).c;
    const double ratio_big = c_big / 2.0;
    add(r, "AC-1 large-mu limit c/(2*sqrt(ad)) in [0.90,1.00)",
        ratio_big >= 0.90 && ratio_big < 1.00, "ratio=" + fmt(ratio_big));

    const double c_small = solve_semiwave(SemiWaveParams(1e-3, 1, 1, 1), tol).c;
    const double ratio_small = c_small / 1e-3;  // c*(bd)/(a*mu*sqrt(ad))
    add(r, "AC-1 small-mu limit c*bd/(a*mu*sqrt(ad)) in [0.52,0.64]",
        ratio_small >= 0.52 && ratio_small <= 0.64,
        "ratio=" + fmt(ratio_small) + " (1/sqrt(3)=" + fmt(1 / std::sqrt(3.0)) + ")");

    auto sweep = [&](auto make) {
        std::vector<double> cs;
        for (double v : {0.25, 0.5, 1.0, 2.0, 4.0}) cs.push_back(solve_semiwave(make(v), tol).c);
        return cs;
    };
    const auto c_mu = sweep([](double m) { return SemiWaveParams(m, 1, 1, 1); });
    const auto c_a = sweep([](double a) { return SemiWaveParams(1, a, 1, 1); });
    const auto c_b = sweep([](double b) { return SemiWaveParams(1, 1, b, 1); });
    add(r, "AC-1 monotonicity: c increasing in mu", strictly_monotone(c_mu, +1, 2 * tol),
        fmt(c_mu.front()) + " .. " + fmt(c_mu.back()));
    add(r, "AC-1 monotonicity: c increasing in a", strictly_monotone(c_a, +1, 2 * tol),
        fmt(c_a.front()) + " .. " + fmt(c_a.back()));
    add(r, "AC-1 monotonicity: c decreasing in b", strictly_monotone(c_b, -1, 2 * tol),
        fmt(c_b.front()) + " .. " + fmt(c_b.back()));

    add(r, "AC-1 runtime < 10 s", timer.seconds() < 10, fmt(timer.seconds()) + " s");
    return r;
}

// ---------------------------------------------------------------- AC-2
Trajectory spreading_run(double t_end, int n_xi, double dt) {
    SingleSpeciesSpec spec;
    spec.d = spec.r = spec.a = spec.mu = 1;
    spec.g0 = 2;
    spec.w0 = cosine_profile(0.8, 1024);
    GridSpec grid;
    grid.n_xi = n_xi;
    grid.dt = dt;
    grid.t_end = t_end;
    return solve_single_species(spec, grid);
}

Results ac2() {
    Results r;
    Timer timer;
    const double c_star = solve_semiwave(SemiWaveParams(1, 1, 1, 1), 1e-8).c;
    const Trajectory traj = spreading_run(150, 512, 2e-4);

    const FrontFit fit = fit_front_speed(traj, 1, 0.3);
    const double rel = std::abs(fit.slope - c_star) / c_star;
    add(r, "AC-2 trailing front slope within 3% of semi-wave speed", rel < 0.03,
        "slope=" + fmt(fit.slope) + " c=" + fmt(c_star) + " rel=" + fmt(rel));

    const FrontFit half = fit_front_speed(traj, 1, 0.15);
    const double drift_change = std::abs(half.drift - fit.drift) / std::max(std::abs(fit.drift), 1e-12);
    add(r, "AC-2 drift estimate stable under window halving (<5%)", drift_change < 0.05,
        "drift=" + fmt(fit.drift) + " halved-window drift=" + fmt(half.drift));

    add(r, "AC-2 runtime < 60 s", timer.seconds() < 60, fmt(timer.seconds()) + " s");
    return r;
}

// ---------------------------------------------------------------- AC-3
bool fronts_monotone(const Trajectory& t) {
    for (std::size_t i = 0; i + 1 < t.s1.size(); ++i)
        if (t.s1[i + 1] < t.s1[i] || t.s2[i + 1] < t.s2[i]) return false;
    return true;
}

bool profiles_nonnegative(const Trajectory& t) {
    for (const ProfileSnapshot& p : t.profiles) {
        for (double x : p.u)
            if (x < 0) return false;
        for (double x : p.v)
            if (x < 0) return false;
    }
    return true;
}

Results ac3() {
    Results r;
    SingleSpeciesSpec spec;
    spec.d = spec.r = spec.a = 1;
    spec.mu = 0.05;
    spec.g0 = 0.5;
    spec.w0 = cosine_profile(0.8, 1024);
    GridSpec grid;
    grid.n_xi = 256;
    grid.dt = 5e-4;
    grid.t_end = 200;
    const Trajectory vanish = solve_single_species(spec, grid);

    Params p;  // d=r=1 so s1* = pi/2
    const Thresholds thr = thresholds(p);
    ClassifyCriteria crit;
    crit.vanish_tol = 1e-3;

    add(r, "AC-3 vanishing preset: max w < 1e-3 by t=200", vanish.u_max.back() < 1e-3,
        "max w=" + fmt(vanish.u_max.back()));
    add(r, "AC-3 vanishing preset: front stalls below pi/2", vanish.s1.back() < M_PI_2,
        "g(200)=" + fmt(vanish.s1.back()));
    add(r, "AC-3 vanishing preset classifies Vanishing",
        classify(vanish, thr, crit).species1.label == Label::Vanishing,
        to_string(classify(vanish, thr, crit).species1.label));

    const Trajectory spread = spreading_run(50, 256, 5e-4);
    add(r, "AC-3 spreading preset classifies Spreading",
        classify(spread, thr, crit).species1.label == Label::Spreading,
        "front=" + fmt(spread.s1.back()));

    add(r, "AC-3 front monotonicity at every snapshot",
        fronts_monotone(vanish) && fronts_monotone(spread), "");
    add(r, "AC-3 positivity at every snapshot",
        profiles_nonnegative(vanish) && profiles_nonnegative(spread), "");
    return r;
}

// ---------------------------------------------------------------- AC-4
Results ac4() {
    Results r;
    const RunSpec spec = preset("thm3-coexist");
    const Trajectory traj = run(spec.params, make_initial(spec.init), spec.grid);

    const auto [u_lim, v_lim] = coexistence_limits(spec.params.k, spec.params.h);
    const double ue = std::abs(traj.u_origin.back() - u_lim) / u_lim;
    const double ve = std::abs(traj.v_origin.back() - v_lim) / v_lim;
    add(r, "AC-4 u(t,0) within 2% of (1-k)/(1-hk)", ue < 0.02,
        "u(200,0)=" + fmt(traj.u_origin.back()) + " limit=" + fmt(u_lim));
    add(r, "AC-4 v(t,0) within 2% of (1-h)/(1-hk)", ve < 0.02,
        "v(200,0)=" + fmt(traj.v_origin.back()) + " limit=" + fmt(v_lim));

    const SpeedBoundReport rep = speed_lower_bound_check(traj, spec.params);
    add(r, "AC-4 front speeds respect reduced semi-wave lower bounds", rep.all_pass(),
        "s1: " + fmt(rep.species1.slope) + ">=" + fmt(0.95 * rep.species1.bound) +
            ", s2: " + fmt(rep.species2.slope) + ">=" + fmt(0.95 * rep.species2.bound));
    return r;
}

// ---------------------------------------------------------------- AC-5
Results ac5() {
    Results r;
    const RunSpec spec = preset("thm5-fast-strong");
    const RegionAResult region = in_region_A(spec.params);
    add(r, "AC-5 parameters lie in region A", region.in_A && !region.gap_below_resolution,
        "c1_reduced=" + fmt(region.c1_reduced) + " c2_free=" + fmt(region.c2_free));

    const Trajectory traj = run(spec.params, make_initial(spec.init), spec.grid);
    const Thresholds thr = thresholds(spec.params);
    ClassifyCriteria crit;
    crit.vanish_tol = 1e-3;
    const Outcome out = classify(traj, thr, crit);

    add(r, "AC-5 species 2 vanishes (max v < 1e-3)",
        out.species2.label == Label::Vanishing && traj.v_max.back() < 1e-3,
        "label=" + to_string(out.species2.label) + " max v=" + fmt(traj.v_max.back()));
    add(r, "AC-5 species 2 front stalls", out.species2.slope < 1e-2,
        "s2 slope=" + fmt(out.species2.slope) + " s2(end)=" + fmt(traj.s2.back()));
    add(r, "AC-5 species 1 spreads", out.species1.label == Label::Spreading,
        "s1 slope=" + fmt(out.species1.slope));
    const double ue = std::abs(traj.u_origin.back() - 1.0);
    add(r, "AC-5 u(t,0) within 2% of 1", ue < 0.02, "u(end,0)=" + fmt(traj.u_origin.back()));
    return r;
}

// ---------------------------------------------------------------- AC-6
Results ac6() {
    Results r;
    const RunSpec spec = preset("thm6-slow-strong");
    const InitialData init = make_initial(spec.init);
    const Thm6Certificate cert = thm6_certificate(spec.params, init);
    add(r, "AC-6 certificate holds (mu1 < mu1_bar, gap > L(mu1))", cert.holds,
        "K=" + fmt(cert.K) + " sigma_bar=" + fmt(cert.sigma_bar) + " mu1_bar=" + fmt(cert.mu1_bar) +
            " L=" + (cert.L_of_mu1 ? fmt(*cert.L_of_mu1) : std::string("undefined")));

    const Trajectory traj = run(spec.params, init, spec.grid);
    bool ok = cert.holds && cert.L_of_mu1.has_value();
    double worst = 1e300;
    if (ok) {
        for (std::size_t i = 0; i < traj.t.size(); ++i) {
            const double bound = cert.K * spec.params.mu1 * traj.t[i] + init.s1_0 + *cert.L_of_mu1;
            worst = std::min(worst, traj.s2[i] - bound);
            if (traj.s2[i] < bound) ok = false;
        }
    }
    add(r, "AC-6 s2(t) >= K*mu1*t + s1_0 + L(mu1) at every snapshot", ok,
        "min margin=" + fmt(worst));
    return r;
}

// ---------------------------------------------------------------- AC-7
struct MmsError {
    double err;
};

double mms_error(int n_xi, double dt) {
    // manufactured solution A*cos(pi x / (2 s(t))) with prescribed front
    const double A = 0.5, s0 = 1.0, beta = 0.4, t_end = 0.5;
    const double d = 1, rr = 1, a = 1;
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
        return ut - d * uxx - rr * u * (a - u);
    };

    SingleSpeciesSpec spec;
    spec.d = d;
    spec.r = rr;
    spec.a = a;
    spec.mu = 1;
    spec.g0 = s0;
    spec.w0.resize(std::size_t(n_xi) + 1);
    for (int j = 0; j <= n_xi; ++j) spec.w0[std::size_t(j)] = exact(0, s0 * double(j) / n_xi);
    spec.w0.back() = 0;

    GridSpec grid;
    grid.n_xi = n_xi;
    grid.dt = dt;
    grid.t_end = t_end;
    const Trajectory traj = solve_single_species(spec, grid, opts);

    const ProfileSnapshot& last = traj.profiles.back();
    double err = 0;
    const double s_end = s_of(t_end);
    for (int j = 0; j <= n_xi; ++j) {
        const double x = s_end * double(j) / n_xi;
        err = std::max(err, std::abs(last.u[std::size_t(j)] - exact(t_end, x)));
    }
    return err;
}

Results ac7() {
    Results r;
    // dt scaled with dxi^2 so the first-order-in-time error rides the spatial one
    const double e64 = mms_error(64, 4e-4);
    const double e128 = mms_error(128, 1e-4);
    const double e256 = mms_error(256, 2.5e-5);
    const double order21 = std::log2(e64 / e128);
    const double order32 = std::log2(e128 / e256);
    add(r, "AC-7 manufactured-solution spatial order >= 1.9", order32 >= 1.9,
        "errors=" + fmt(e64) + "/" + fmt(e128) + "/" + fmt(e256) + " orders=" + fmt(order21) +
            "," + fmt(order32));

    // scaling symmetry lambda=2: d,mu x4, fronts/profile x2; mapped profiles match
    auto make_run = [](double d, double mu, double g0, int n_xi, double dt) {
        SingleSpeciesSpec spec;
        spec.d = d;
        spec.r = 1;
        spec.a = 1;
        spec.mu = mu;
        spec.g0 = g0;
        spec.w0 = cosine_profile(0.5, 1024);
        GridSpec grid;
        grid.n_xi = n_xi;
        grid.dt = dt;
        grid.t_end = 2.0;
        return solve_single_species(spec, grid);
    };
    const Trajectory base = make_run(1, 1, 1.5, 128, 5e-4);
    const Trajectory scaled = make_run(4, 4, 3.0, 128, 5e-4);
    const Trajectory fine = make_run(1, 1, 1.5, 256, 2.5e-4);

    const double scheme_err = std::abs(base.s1.back() - fine.s1.back());
    const double front_dev = std::abs(2 * base.s1.back() - scaled.s1.back());
    double prof_dev = 0;
    for (std::size_t j = 0; j < base.profiles.back().u.size(); ++j)
        prof_dev = std::max(prof_dev,
                            std::abs(base.profiles.back().u[j] - scaled.profiles.back().u[j]));
    const double tol = 10 * std::max(scheme_err, 1e-13);
    add(r, "AC-7 scaling symmetry within 10x scheme error",
        front_dev <= tol && prof_dev <= tol,
        "front dev=" + fmt(front_dev) + " profile dev=" + fmt(prof_dev) + " scheme err=" +
            fmt(scheme_err));
    return r;
}

// ---------------------------------------------------------------- AC-8
Results ac8() {
    Results r;
    Timer timer;
    {
        Params p;
        const Thresholds t = thresholds(p);
        Params pk = p;
        pk.k = 0.75;
        const Thresholds tk = thresholds(pk);
        add(r, "AC-8 thresholds: s1*=pi/2, s1~=pi at k=0.75",
            std::abs(t.s1_star - M_PI_2) < 1e-12 && tk.s1_tilde &&
                std::abs(*tk.s1_tilde - M_PI) < 1e-12,
            "s1*=" + fmt(t.s1_star));
    }
    {
        const auto [u, v] = coexistence_limits(0.5, 0.5);
        add(r, "AC-8 coexistence limits (0.5,0.5) -> (2/3,2/3)",
            std::abs(u - 2.0 / 3) < 1e-14 && std::abs(v - 2.0 / 3) < 1e-14, fmt(u));
    }
    {
        const IterationBounds b = iteration_bounds(0.5, 0.5, 60);
        const bool seq_ok = std::abs(b.u_lower[0] - 0.5) < 1e-14 &&
                            std::abs(b.v_upper[1] - 0.75) < 1e-14 &&
                            std::abs(b.u_lower[1] - 0.625) < 1e-14 &&
                            std::abs(b.v_upper[2] - 0.6875) < 1e-14;
        add(r, "AC-8 iteration bounds: u_60 within 1e-10 of 2/3",
            seq_ok && b.converged && std::abs(b.u_lower.back() - 2.0 / 3) < 1e-10,
            "u_60=" + fmt(b.u_lower.back()));
    }
    {
        const double ell = eigen_length(1, 1, 1, -0.5);
        // round trip: pi/ell must reproduce sqrt(4 d2 (r2+lambda) - sigma^2)/(2 d2)
        const double lhs = M_PI / ell;
        const double rhs = std::sqrt(4 * 1 * (1 - 0.5) - 1) / 2;
        add(r, "AC-8 eigen length: ell=2*pi at (1,1,1,-1/2), relation round-trip",
            std::abs(ell - 2 * M_PI) < 1e-12 && std::abs(lhs - rhs) < 1e-14, fmt(ell));
    }
    {
        const double delta = thm7_delta_max(1, 1, 1, 0.5, 0.5);
        const double expect = (-1 + std::sqrt(2.5)) / 2;
        const bool root_ok = std::abs(delta * (1 + delta) - 0.375) < 1e-14;
        add(r, "AC-8 thm7 delta: positive root of the barrier quadratic",
            std::abs(delta - expect) < 1e-12 && root_ok, fmt(delta));
    }
    add(r, "AC-8 formula checks run < 1 s", timer.seconds() < 1, fmt(timer.seconds()) + " s");
    {
        // persistence scenario: l = 4*(pi/2)*sqrt(d/(ra)) with d=r=a=1
        SingleSpeciesSpec spec;
        spec.d = spec.r = spec.a = spec.mu = 1;
        spec.g0 = 2 * M_PI;
        spec.w0 = cosine_profile(0.5, 1024);
        GridSpec grid;
        grid.n_xi = 256;
        grid.dt = 5e-4;
        grid.t_end = 60;
        const Trajectory traj = solve_single_species(spec, grid);
        const double L = M_PI_2;
        double lim_inf = 1e300;
        const std::size_t i0 = traj.profiles.size() * 3 / 4;
        for (std::size_t i = i0; i < traj.profiles.size(); ++i) {
            const ProfileSnapshot& p = traj.profiles[i];
            const int n = int(p.u.size()) - 1;
            for (int j = 0; j <= n; ++j)
                if (p.s1 * double(j) / n <= L) lim_inf = std::min(lim_inf, p.u[std::size_t(j)]);
        }
        add(r, "AC-8 persistence: liminf w >= 1 - 0.05 on [0,L]", lim_inf >= 0.95,
            "liminf=" + fmt(lim_inf));
    }
    return r;
}

void append(Results& all, const Results& part) {
    all.insert(all.end(), part.begin(), part.end());
}

} // namespace

std::vector<std::string> suite_names() {
    return {"semiwave", "dichotomy", "coexistence", "thm5", "thm6", "convergence", "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite) {
    Results r;
    if (suite == "semiwave") {
        append(r, ac1());
    } else if (suite == "dichotomy") {
        append(r, ac2());
        append(r, ac3());
    } else if (suite == "coexistence") {
        append(r, ac4());
        append(r, ac8());
    } else if (suite == "thm5") {
        append(r, ac5());
    } else if (suite == "thm6") {
        append(r, ac6());
    } else if (suite == "convergence") {
        append(r, ac7());
    } else if (suite == "all") {
        append(r, ac1());
        append(r, ac2());
        append(r, ac3());
        append(r, ac4());
        append(r, ac5());
        append(r, ac6());
        append(r, ac7());
        append(r, ac8());
    } else {
        throw ValueError("unknown suite: " + suite +
                         " (expected semiwave|dichotomy|coexistence|thm5|thm6|convergence|all)");
    }
    return r;
}

bool print_report(const std::vector<CheckResult>& results, std::ostream& os) {
    bool all = true;
    for (const CheckResult& c : results) {
        const bool pass = c.status == CheckStatus::Pass;
        all = all && pass;
        os << (pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << '\n';
    }
    os << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << '\n';
    return all;
}

} // namespace fbcd
