#include "fbcd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fbcd/semiwave.hpp"

namespace fbcd {

Thresholds thresholds(const Params& params) {
    params.validate();
    Thresholds t;
    t.s1_star = M_PI_2 * std::sqrt(params.d1 / params.r1);
    t.s2_star = M_PI_2 * std::sqrt(params.d2 / params.r2);
    if (params.k < 1) t.s1_tilde = M_PI_2 * std::sqrt(params.d1 / (params.r1 * (1 - params.k)));
    if (params.h < 1) t.s2_tilde = M_PI_2 * std::sqrt(params.d2 / (params.r2 * (1 - params.h)));
    return t;
}

std::pair<double, double> coexistence_limits(double k, double h) {
    const double denom = 1 - h * k;
    if (std::abs(denom) < 1e-14) throw DegenerateCompetition("coexistence_limits: hk = 1");
    return {(1 - k) / denom, (1 - h) / denom};
}

IterationBounds iteration_bounds(double k, double h, int N) {
    if (!(k >= 0 && k < 1 && h >= 0 && h < 1))
        throw ValueError("iteration_bounds: k, h must lie in [0, 1)");
    if (N < 1) throw ValueError("iteration_bounds: N must be positive");
    IterationBounds b;
    b.u_lower.reserve(std::size_t(N));
    b.v_upper.reserve(std::size_t(N));
    double u = 1 - k, v = 1;
    b.u_lower.push_back(u);
    b.v_upper.push_back(v);
    for (int n = 2; n <= N; ++n) {
        v = 1 - h * u;
        u = 1 - k * v;
        b.u_lower.push_back(u);
        b.v_upper.push_back(v);
    }
    b.converged = std::abs(b.u_lower.back() - (1 - k) / (1 - h * k)) < 1e-10;
    return b;
}

std::string to_string(Label l) {
    switch (l) {
        case Label::Spreading: return "Spreading";
        case Label::Vanishing: return "Vanishing";
        default: return "Indeterminate";
    }
}

FrontFit fit_front_speed(const Trajectory& traj, int species, double window_fraction) {
    if (species != 1 && species != 2) throw ValueError("fit_front_speed: species must be 1 or 2");
    if (!(window_fraction > 0 && window_fraction < 1))
        throw ValueError("fit_front_speed: window_fraction must be in (0,1)");
    const std::vector<double>& s = (species == 1) ? traj.s1 : traj.s2;
    const std::size_t n = traj.t.size();
    const std::size_t nw = std::size_t(std::ceil(window_fraction * double(n)));
    if (nw < 2 || n < 2 * nw)
        throw InsufficientData("fit_front_speed: trajectory shorter than twice the fit window");

    const std::size_t i0 = n - nw;
    double st = 0, ss = 0, stt = 0, sts = 0;
    for (std::size_t i = i0; i < n; ++i) {
        st += traj.t[i];
        ss += s[i];
        stt += traj.t[i] * traj.t[i];
        sts += traj.t[i] * s[i];
    }
    const double m = double(nw);
    const double denom = m * stt - st * st;
    FrontFit fit;
    fit.window_t0 = traj.t[i0];
    fit.slope = (m * sts - st * ss) / denom;
    fit.drift = (ss - fit.slope * st) / m;
    double sq = 0;
    for (std::size_t i = i0; i < n; ++i) {
        const double r = s[i] - (fit.slope * traj.t[i] + fit.drift);
        sq += r * r;
    }
    fit.rms_residual = std::sqrt(sq / m);
    return fit;
}

namespace {

SpeciesOutcome classify_species(const Trajectory& traj, int species, double s_star,
                                const ClassifyCriteria& c) {
    SpeciesOutcome out;
    out.final_front = (species == 1) ? traj.s1.back() : traj.s2.back();
    out.final_max = (species == 1) ? traj.u_max.back() : traj.v_max.back();
    const FrontFit fit = fit_front_speed(traj, species, c.window_fraction);
    out.slope = fit.slope;
    out.drift = fit.drift;
    out.window_t0 = fit.window_t0;
    if (out.final_max < c.vanish_tol)
        out.label = Label::Vanishing;
    else if (out.final_front > s_star && out.slope > c.slope_floor)
        out.label = Label::Spreading;
    else
        out.label = Label::Indeterminate;
    return out;
}

} // namespace

Outcome classify(const Trajectory& traj, const Thresholds& thr, const ClassifyCriteria& criteria) {
    Outcome o;
    o.species1 = classify_species(traj, 1, thr.s1_star, criteria);
    o.species2 = classify_species(traj, 2, thr.s2_star, criteria);
    return o;
}

std::vector<CheckResult> dichotomy_consistency(const Outcome& outcome, const Thresholds& thr,
                                               const Trajectory& traj, const Params& params) {
    std::vector<CheckResult> checks;
    const Label l1 = outcome.species1.label, l2 = outcome.species2.label;
    const double s1_0 = traj.s1.front(), s2_0 = traj.s2.front();

    auto implied_spreading = [](Label l) {
        if (l == Label::Spreading) return CheckStatus::Pass;
        if (l == Label::Vanishing) return CheckStatus::Fail;
        return CheckStatus::NotApplicable;  // label unresolved at final time
    };

    // Bounded front with the other front past its critical length forces the
    // other species to spread.
    {
        CheckResult r{"bounded-s1-above-s1star-implies-s2-spreads", CheckStatus::NotApplicable, ""};
        if (l1 == Label::Vanishing && outcome.species1.final_front > thr.s1_star)
            r.status = implied_spreading(l2);
        checks.push_back(r);
    }
    {
        CheckResult r{"bounded-s2-above-s2star-implies-s1-spreads", CheckStatus::NotApplicable, ""};
        if (l2 == Label::Vanishing && outcome.species2.final_front > thr.s2_star)
            r.status = implied_spreading(l1);
        checks.push_back(r);
    }
    // At least one species spreads when either initial front starts critical.
    {
        CheckResult r{"initial-front-critical-implies-one-spreads", CheckStatus::NotApplicable, ""};
        if (s1_0 >= thr.s1_star || s2_0 >= thr.s2_star) {
            if (l1 == Label::Spreading || l2 == Label::Spreading)
                r.status = CheckStatus::Pass;
            else if (l1 == Label::Vanishing && l2 == Label::Vanishing)
                r.status = CheckStatus::Fail;
        }
        checks.push_back(r);
    }
    // Weak competition with both initial fronts past the reduced thresholds:
    // both species spread.
    {
        CheckResult r{"weak-competition-both-initial-critical-implies-both-spread",
                      CheckStatus::NotApplicable, ""};
        if (params.k < 1 && params.h < 1 && thr.s1_tilde && thr.s2_tilde &&
            s1_0 >= *thr.s1_tilde && s2_0 >= *thr.s2_tilde) {
            const CheckStatus a = implied_spreading(l1), b = implied_spreading(l2);
            if (a == CheckStatus::Fail || b == CheckStatus::Fail)
                r.status = CheckStatus::Fail;
            else if (a == CheckStatus::Pass && b == CheckStatus::Pass)
                r.status = CheckStatus::Pass;
        }
        checks.push_back(r);
    }
    // A front past its reduced threshold cannot stay bounded.
    {
        CheckResult r{"s1-above-s1tilde-implies-s1-spreads", CheckStatus::NotApplicable, ""};
        if (thr.s1_tilde && outcome.species1.final_front > *thr.s1_tilde)
            r.status = implied_spreading(l1);
        checks.push_back(r);
    }
    {
        CheckResult r{"s2-above-s2tilde-implies-s2-spreads", CheckStatus::NotApplicable, ""};
        if (thr.s2_tilde && outcome.species2.final_front > *thr.s2_tilde)
            r.status = implied_spreading(l2);
        checks.push_back(r);
    }
    return checks;
}

double eigen_length(double d2, double r2, double sigma, double lambda) {
    const double disc = 4 * d2 * (r2 + lambda) - sigma * sigma;
    if (!(disc > 0)) throw ImaginaryRoot("eigen_length: 4 d2 (r2 + lambda) must exceed sigma^2");
    return 2 * M_PI * d2 / std::sqrt(disc);
}

double thm7_delta_max(double c_sigma, double d2, double r2, double k, double h) {
    if (!(d2 > 0 && r2 > 0) || c_sigma < 0) throw ValueError("thm7_delta_max: bad rates");
    const double rhs = 0.5 * r2 * (1 - h * (1 - k));
    if (!(rhs > 0)) throw InfeasibleBarrier("thm7_delta_max: h(1-k) >= 1");
    // d2 delta^2 + c_sigma delta - rhs = 0, positive root
    return (-c_sigma + std::sqrt(c_sigma * c_sigma + 4 * d2 * rhs)) / (2 * d2);
}

namespace {

// Linear sample of the v0 data at physical position x (zero past the front).
double sample_initial(const std::vector<double>& w0, double s0, double x) {
    if (x >= s0 || x < 0) return 0.0;
    const std::size_t n = w0.size() - 1;
    const double pos = x / s0 * double(n);
    const std::size_t j = std::min(std::size_t(pos), n - 1);
    const double t = pos - double(j);
    return (1 - t) * w0[j] + t * w0[j + 1];
}

struct SigmaEval {
    double ell = 0, delta = 0, rhs = 0;
    bool ok = false;  // sigma < rhs
};

SigmaEval eval_sigma(const Params& p, const InitialData& init, double sigma) {
    SigmaEval e;
    const double disc = 2 * p.d2 * p.r2 - sigma * sigma;
    if (!(disc > 0)) return e;
    e.ell = 2 * M_PI * p.d2 / std::sqrt(disc);
    // delta_sigma: infimum over the open interval, discretized on interior nodes
    constexpr int M = 2048;
    double delta = std::numeric_limits<double>::infinity();
    for (int i = 1; i < M; ++i) {
        const double y = e.ell * double(i) / M;
        const double phi = std::exp(-sigma * y / (2 * p.d2)) * std::sin(M_PI * y / e.ell);
        if (!(phi > 0)) continue;
        const double w = sample_initial(init.v0, init.s2_0, y + init.s1_0);
        delta = std::min(delta, std::min(w / phi, 0.5 / phi));
    }
    if (!std::isfinite(delta) || delta <= 0) {
        e.delta = 0;
        return e;
    }
    e.delta = delta;
    e.rhs = p.mu2 * delta * (M_PI / e.ell) * std::exp(-sigma * e.ell / (2 * p.d2));
    e.ok = sigma < e.rhs;
    return e;
}

} // namespace

Thm6Certificate thm6_certificate(const Params& params, const InitialData& init) {
    params.validate();
    if (!(init.s2_0 > init.s1_0))
        throw GapTooSmall("thm6_certificate: requires s2_0 > s1_0");

    Thm6Certificate cert;
    // K from the initial u0 samples
    {
        const double dx = init.s1_0 / double(init.u0.size() - 1);
        double wmax = 0, min_slope = 0;
        for (double x : init.u0) wmax = std::max(wmax, std::abs(x));
        for (std::size_t j = 0; j + 1 < init.u0.size(); ++j)
            min_slope = std::min(min_slope, (init.u0[j + 1] - init.u0[j]) / dx);
        cert.K = 2 * std::max(std::max(1.0, wmax) * std::sqrt(params.r1 / (2 * params.d1)),
                              -min_slope);
    }

    const double sigma_max = std::sqrt(2 * params.d2 * params.r2);

    // sigma_bar: first failure of the comparison condition along an ascending
    // scan, refined by bisection. The condition holds on (0, sigma_bar).
    {
        constexpr int NS = 400;
        double last_ok = 0, first_fail = -1;
        for (int i = 1; i < NS; ++i) {
            const double sigma = sigma_max * double(i) / NS;
            if (eval_sigma(params, init, sigma).ok) {
                last_ok = sigma;
            } else {
                first_fail = sigma;
                break;
            }
        }
        if (last_ok == 0) {
            cert.sigma_bar = 0;  // NoSigma: no admissible comparison speed
        } else if (first_fail < 0) {
            cert.sigma_bar = last_ok;
        } else {
            double lo = last_ok, hi = first_fail;
            for (int it = 0; it < 60 && hi - lo > 1e-13 * sigma_max; ++it) {
                const double mid = 0.5 * (lo + hi);
                (eval_sigma(params, init, mid).ok ? lo : hi) = mid;
            }
            cert.sigma_bar = lo;
        }
    }
    cert.mu1_bar = cert.sigma_bar / cert.K;

    const double sigma1 = cert.K * params.mu1;
    if (sigma1 < sigma_max) {
        cert.L_of_mu1 = 2 * M_PI * params.d2 / std::sqrt(2 * params.d2 * params.r2 - sigma1 * sigma1);
        const SigmaEval e = eval_sigma(params, init, sigma1);
        cert.ell_sigma = e.ell;
        cert.delta_sigma = e.delta;
    }
    cert.holds = (cert.sigma_bar > 0) && (params.mu1 < cert.mu1_bar) && cert.L_of_mu1 &&
                 (init.s2_0 - init.s1_0 > *cert.L_of_mu1);
    return cert;
}

SpeedBoundReport speed_lower_bound_check(const Trajectory& traj, const Params& params,
                                         double tol_rel) {
    SpeedBoundReport rep;
    if (params.k < 1) {
        rep.species1.applicable = true;
        rep.species1.bound =
            solve_semiwave(SemiWaveParams(params.mu1, params.r1 * (1 - params.k), params.r1, params.d1))
                .c;
        rep.species1.slope = fit_front_speed(traj, 1, 0.3).slope;
        rep.species1.pass = rep.species1.slope >= (1 - tol_rel) * rep.species1.bound;
    }
    if (params.h < 1) {
        rep.species2.applicable = true;
        rep.species2.bound =
            solve_semiwave(SemiWaveParams(params.mu2, params.r2 * (1 - params.h), params.r2, params.d2))
                .c;
        rep.species2.slope = fit_front_speed(traj, 2, 0.3).slope;
        rep.species2.pass = rep.species2.slope >= (1 - tol_rel) * rep.species2.bound;
    }
    return rep;
}

} // namespace fbcd
