#pragma once

#include <array>
#include <cmath>
#include <functional>

namespace fbcd {

// Planar state for second-order scalar ODEs written as a first-order system.
using Vec2 = std::array<double, 2>;

// Right-hand side f(y, state) -> derivative.
using Rhs2 = std::function<Vec2(double, const Vec2&)>;

struct OdeStepResult {
    Vec2 x;      // state after the accepted step
    double err;  // scaled error estimate
};

// One Dormand-Prince 5(4) step of size h from (y, x). Also returns the
// stage derivative k1 at the left end so callers can reuse it (FSAL-ish).
inline OdeStepResult dp54_step(const Rhs2& f, double y, const Vec2& x, double h,
                               double atol) {
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    auto axpy = [](const Vec2& base, std::initializer_list<std::pair<double, const Vec2*>> terms,
                   double h) {
        Vec2 r = base;
        for (auto& [c, k] : terms) {
            r[0] += h * c * (*k)[0];
            r[1] += h * c * (*k)[1];
        }
        return r;
    };

    const Vec2 k1 = f(y, x);
    const Vec2 k2 = f(y + h / 5, axpy(x, {{a21, &k1}}, h));
    const Vec2 k3 = f(y + 3 * h / 10, axpy(x, {{a31, &k1}, {a32, &k2}}, h));
    const Vec2 k4 = f(y + 4 * h / 5, axpy(x, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, h));
    const Vec2 k5 =
        f(y + 8 * h / 9, axpy(x, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h));
    const Vec2 k6 = f(y + h, axpy(x, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, h));

    Vec2 x5 = axpy(x, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, h);
    const Vec2 k7 = f(y + h, x5);

    double err = 0;
    for (int i = 0; i < 2; ++i) {
        const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                              e6 * k6[i] + e7 * k7[i]);
        const double sc = atol + 1e-13 * (std::abs(x[i]) + std::abs(x5[i]));
        err = std::max(err, std::abs(e) / sc);
    }
    return {x5, err};
}

// Adaptive integration from y0 to y1. `observe(y, x)` is called after every
// accepted step (and once at y0); return false from it to stop early.
inline void integrate_adaptive(const Rhs2& f, double y0, double y1, Vec2 x, double atol,
                               const std::function<bool(double, const Vec2&, double h_taken)>& observe,
                               double h_init = 1e-4, double h_max = 1e300) {
    double y = y0;
    double h = std::min({h_init, y1 - y0, h_max});
    if (!observe(y, x, 0.0)) return;
    while (y < y1) {
        h = std::min({h, y1 - y, h_max});
        OdeStepResult r = dp54_step(f, y, x, h, atol);
        if (r.err <= 1.0) {
            y += h;
            x = r.x;
            const double hp = h;
            h *= std::min(5.0, 0.9 * std::pow(std::max(r.err, 1e-10), -0.2));
            if (!observe(y, x, hp)) return;
        } else {
            h *= std::max(0.2, 0.9 * std::pow(r.err, -0.2));
        }
        if (h < 1e-14 * std::max(1.0, std::abs(y))) return;  // step underflow
    }
}

} // namespace fbcd
