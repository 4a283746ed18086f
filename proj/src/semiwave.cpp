#include "fbcd/semiwave.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

#include "fbcd/ode2.hpp"
#include "fbcd/tridiag.hpp"

namespace fbcd {

namespace {

enum class Shot { Undershoot, Overshoot, Settled, Ambiguous };

// Integrate the profile IVP for a trial speed and classify the outcome.
// Undershoot: q' hits zero while q is still below a/b.
// Overshoot:  q exceeds a/b while still climbing.
// Settled:    reached y_limit glued to the plateau (trial speed is spot on).
Shot shoot(const SemiWaveParams& p, double c, double y_limit, double atol) {
    const double qstar = p.a / p.b;
    Rhs2 rhs = [&](double, const Vec2& x) -> Vec2 {
        return {x[1], (c * x[1] - x[0] * (p.a - p.b * x[0])) / p.d};
    };

    Shot result = Shot::Ambiguous;
    Vec2 last{0.0, c / p.mu};
    double y_last = 0;
    auto event = [&](const Vec2& x) -> int {
        if (x[0] > qstar * (1 + 1e-12)) return +1;
        if (x[1] <= 0 && x[0] < qstar * (1 - 1e-9)) return -1;
        return 0;
    };
    auto observe = [&](double y, const Vec2& x, double) -> bool {
        const int ev = event(x);
        if (ev != 0) {
            // Localize which event fires first by halving steps from the
            // previous event-free point.
            Vec2 a = last;
            double ya = y_last, yb = y;
            while (yb - ya > 1e-12 * std::max(1.0, yb)) {
                const double ym = 0.5 * (ya + yb);
                // single high-order step to the midpoint
                OdeStepResult r = dp54_step(rhs, ya, a, ym - ya, atol);
                if (event(r.x) != 0) {
                    yb = ym;
                } else {
                    ya = ym;
                    a = r.x;
                }
            }
            OdeStepResult r = dp54_step(rhs, ya, a, yb - ya, atol);
            result = (event(r.x) >= 0 && r.x[0] >= qstar * (1 - 1e-9)) ? Shot::Overshoot
                                                                       : Shot::Undershoot;
            if (event(r.x) == +1) result = Shot::Overshoot;
            if (event(r.x) == -1) result = Shot::Undershoot;
            return false;
        }
        last = x;
        y_last = y;
        return true;
    };
    integrate_adaptive(rhs, 0.0, y_limit, {0.0, c / p.mu}, atol, observe, 1e-6);

    if (result == Shot::Ambiguous) {
        if (std::abs(last[0] - qstar) < 1e-6 * qstar && std::abs(last[1]) < 1e-6 * std::max(1.0, qstar))
            result = Shot::Settled;
    }
    return result;
}

// Classify with automatic extension of the integration window; near the ends
// of the admissible speed interval the decisive event can take a long range
// to materialize.
Shot classify(const SemiWaveParams& p, double c, double y_max, double atol) {
    double y_limit = y_max;
    for (int attempt = 0; attempt < 7; ++attempt) {
        const Shot s = shoot(p, c, y_limit, atol);
        if (s != Shot::Ambiguous) return s;
        y_limit *= 2;
    }
    return Shot::Ambiguous;
}

} // namespace

double default_y_max(const SemiWaveParams& p) {
    return 50.0 * std::max(1.0, std::sqrt(p.d / p.a));
}

SemiWave solve_semiwave(const SemiWaveParams& p, double tol) {
    return solve_semiwave(p, tol, default_y_max(p));
}

SemiWave solve_semiwave(const SemiWaveParams& p, double tol, double y_max) {
    if (!(tol > 0 && tol <= 1e-3)) throw ValueError("solve_semiwave: tol must be in (0, 1e-3]");
    if (!(y_max > 0)) throw ValueError("solve_semiwave: y_max must be positive");
    const double cmax = p.c_max();
    const double qstar = p.a / p.b;
    const double atol = std::min(1e-12, tol / 100);

    // Probe both ends of (0, 2*sqrt(ad)) without presuming which side
    // overshoots; walk the probes inward until the classifications differ.
    double lo = cmax * 1e-2;
    Shot lo_class = classify(p, lo, y_max, atol);
    while (lo_class != Shot::Undershoot && lo_class != Shot::Settled && lo > cmax * 1e-14) {
        lo *= 0.1;
        lo_class = classify(p, lo, y_max, atol);
    }
    double delta = 1e-2;
    double hi = cmax * (1 - delta);
    Shot hi_class = classify(p, hi, y_max, atol);
    while (hi_class != Shot::Overshoot && hi_class != Shot::Settled && delta > 1e-14) {
        delta *= 0.1;
        hi = cmax * (1 - delta);
        hi_class = classify(p, hi, y_max, atol);
    }

    double c;
    if (lo_class == Shot::Settled) {
        c = lo;
    } else if (hi_class == Shot::Settled) {
        c = hi;
    } else if (lo_class == Shot::Undershoot && hi_class == Shot::Overshoot) {
        // Bisect well below the requested tolerance; the profile build wants
        // the trial speed as close to the connecting orbit as doubles allow.
        const double width_target = std::min(tol, cmax * 1e-14);
        int iters = 0;
        while (hi - lo > width_target) {
            if (++iters > 200) throw Nonconvergence("solve_semiwave: bisection iteration cap exceeded");
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;  // double resolution reached
            const Shot s = classify(p, mid, y_max, atol);
            if (s == Shot::Undershoot)
                lo = mid;
            else if (s == Shot::Overshoot)
                hi = mid;
            else
                break;  // settled or ambiguous at resolution limit
        }
        c = 0.5 * (lo + hi);
    } else {
        throw NoBracket("solve_semiwave: endpoint probes do not bracket the speed");
    }

    // Build the profile on a uniform grid. Follow the IVP while it is on the
    // connecting orbit; once within 1e-4 of the plateau, switch to the exact
    // linearized tail q = a/b - A exp(-kappa y), which keeps the profile
    // strictly increasing all the way to y_max.
    SemiWave sw;
    sw.c = c;
    const std::size_t n = std::max<std::size_t>(2049, std::size_t(y_max / 0.01) + 1);
    const double dy = y_max / double(n - 1);
    sw.y_grid.resize(n);
    sw.q.assign(n, qstar);
    for (std::size_t i = 0; i < n; ++i) sw.y_grid[i] = double(i) * dy;

    Rhs2 rhs = [&](double, const Vec2& x) -> Vec2 {
        return {x[1], (c * x[1] - x[0] * (p.a - p.b * x[0])) / p.d};
    };
    const double kappa = (-c + std::sqrt(c * c + 4 * p.a * p.d)) / (2 * p.d);
    std::size_t next = 0;
    std::size_t stitch = n - 1;
    Vec2 prev{0.0, c / p.mu};
    double y_prev = 0;
    Vec2 prev_k = rhs(0.0, prev);
    auto observe = [&](double y, const Vec2& x, double) -> bool {
        const Vec2 kx = rhs(y, x);
        // fill grid points passed by this step via cubic Hermite interpolation
        while (next < n && sw.y_grid[next] <= y + 1e-15) {
            const double hseg = y - y_prev;
            double val;
            if (hseg <= 0) {
                val = x[0];
            } else {
                const double t = (sw.y_grid[next] - y_prev) / hseg;
                const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
                const double h10 = t * (1 - t) * (1 - t);
                const double h01 = t * t * (3 - 2 * t);
                const double h11 = t * t * (t - 1);
                val = h00 * prev[0] + h10 * hseg * prev_k[0] + h01 * x[0] + h11 * hseg * kx[0];
            }
            sw.q[next] = std::min(val, qstar);
            ++next;
        }
        y_prev = y;
        prev = x;
        prev_k = kx;
        if (x[0] >= qstar * (1 - 1e-4) || x[1] <= 0) {
            stitch = (next == 0) ? 0 : next - 1;
            return false;
        }
        return true;
    };
    integrate_adaptive(rhs, 0.0, y_max, {0.0, c / p.mu}, atol, observe, 1e-6, dy);
    if (next >= n) stitch = n - 1;

    if (stitch + 1 < n) {
        const double ys = sw.y_grid[stitch];
        const double amp = (qstar - sw.q[stitch]) * std::exp(kappa * ys);
        for (std::size_t i = stitch + 1; i < n; ++i)
            sw.q[i] = qstar - amp * std::exp(-kappa * sw.y_grid[i]);
    }
    sw.q[0] = 0;

    if (std::abs(sw.q.back() - qstar) > 1e-6 * qstar)
        throw Nonconvergence("solve_semiwave: profile did not settle by y_max; increase y_max");

    // Relax the interior samples onto the centered-difference equations
    // (Newton with c fixed, endpoints pinned) so the reported defect reflects
    // the equation, not the sampling.
    for (int sweep = 0; sweep < 6; ++sweep) {
        std::vector<double> lower(n - 3), diag(n - 2), upper(n - 3), rhs_vec(n - 2);
        double fmax = 0;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double qpp = (sw.q[i + 1] - 2 * sw.q[i] + sw.q[i - 1]) / (dy * dy);
            const double qp = (sw.q[i + 1] - sw.q[i - 1]) / (2 * dy);
            const double f = p.d * qpp - c * qp + sw.q[i] * (p.a - p.b * sw.q[i]);
            fmax = std::max(fmax, std::abs(f));
            rhs_vec[i - 1] = f;
            diag[i - 1] = -2 * p.d / (dy * dy) + p.a - 2 * p.b * sw.q[i];
            if (i + 2 < n) upper[i - 1] = p.d / (dy * dy) - c / (2 * dy);
            if (i > 1) lower[i - 2] = p.d / (dy * dy) + c / (2 * dy);
        }
        const double floor_defect =
            100 * std::numeric_limits<double>::epsilon() * (p.d / (dy * dy)) * std::max(1.0, qstar);
        if (fmax <= floor_defect) break;
        solve_tridiag(lower, diag, upper, rhs_vec);
        for (std::size_t i = 1; i + 1 < n; ++i) sw.q[i] -= rhs_vec[i - 1];
    }
    // The exponential tail saturates at the plateau below double resolution;
    // nudge saturated samples onto the nearest strictly increasing doubles.
    for (std::size_t i = n - 1; i-- > 1;)
        if (sw.q[i] >= sw.q[i + 1])
            sw.q[i] = std::nextafter(sw.q[i + 1], 0.0);

    // Max defect of the ODE under centered differences on the stored grid.
    double defect = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double qpp = (sw.q[i + 1] - 2 * sw.q[i] + sw.q[i - 1]) / (dy * dy);
        const double qp = (sw.q[i + 1] - sw.q[i - 1]) / (2 * dy);
        defect = std::max(defect, std::abs(p.d * qpp - c * qp + sw.q[i] * (p.a - p.b * sw.q[i])));
    }
    sw.residual = defect;
    return sw;
}

SpeedSummary competition_speeds(const Params& params, double tol) {
    params.validate();
    SpeedSummary s;
    if (params.k < 1)
        s.c1_reduced = solve_semiwave(
                           SemiWaveParams(params.mu1, params.r1 * (1 - params.k), params.r1, params.d1), tol)
                           .c;
    if (params.h < 1)
        s.c2_reduced = solve_semiwave(
                           SemiWaveParams(params.mu2, params.r2 * (1 - params.h), params.r2, params.d2), tol)
                           .c;
    s.c2_free = solve_semiwave(SemiWaveParams(params.mu2, params.r2, params.r2, params.d2), tol).c;
    return s;
}

RegionAResult in_region_A(const Params& params, double tol) {
    params.validate();
    if (!(params.k > 0 && params.k < 1))
        throw UndefinedRegion("in_region_A: requires 0 < k < 1");

    auto speeds = [&](double t) {
        const double c1 =
            solve_semiwave(SemiWaveParams(params.mu1, params.r1 * (1 - params.k), params.r1, params.d1), t)
                .c;
        const double c2 =
            solve_semiwave(SemiWaveParams(params.mu2, params.r2, params.r2, params.d2), t).c;
        return std::pair<double, double>{c1, c2};
    };

    auto [c1, c2] = speeds(tol);
    double gap = std::abs(c1 - c2);
    // Require speeds at least 10x finer than the gap they discriminate.
    if (gap < 10 * tol) {
        const double finer = std::max(gap / 20, 1e-12);
        std::tie(c1, c2) = speeds(std::min(tol, finer));
        gap = std::abs(c1 - c2);
        if (gap < 10 * std::min(tol, finer))
            return {false, true, c1, c2};  // gap below resolution: refuse to guess
    }
    return {c1 > c2, false, c1, c2};
}

} // namespace fbcd
