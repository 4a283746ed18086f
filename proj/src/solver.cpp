#include "fbcd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fbcd/pchip.hpp"
#include "fbcd/tridiag.hpp"

namespace fbcd {

namespace {

constexpr double kNegBreach = -1e-8;   // below this before clipping: hard error
constexpr double kCollapseTol = 1e-12; // front decrease beyond this: hard error

double max_abs(const std::vector<double>& w) {
    double m = 0;
    for (double x : w) m = std::max(m, std::abs(x));
    return m;
}

void validate_profile(const std::vector<double>& w, double s0, const char* name) {
    if (!(s0 > 0)) throw BadInitialData(std::string(name) + ": initial front must be positive");
    if (w.size() < 5) throw BadInitialData(std::string(name) + ": need at least 5 samples");
    const double wmax = max_abs(w);
    if (wmax <= 0) throw BadInitialData(std::string(name) + ": profile is identically zero");
    const double dx = s0 / double(w.size() - 1);
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (!(w[j] > 0))
            throw BadInitialData(std::string(name) + ": profile must be positive on [0, s0)");
    if (std::abs(w.back()) > 1e-12 * std::max(1.0, wmax))
        throw BadInitialData(std::string(name) + ": profile must vanish at the front");
    // discrete Neumann condition at x = 0
    const double slope0 = (w[1] - w[0]) / dx;
    if (std::abs(slope0) > 8.0 * dx * wmax / (s0 * s0))
        throw BadInitialData(std::string(name) + ": nonzero slope at x=0 beyond grid tolerance");
}

std::vector<double> resample_mapped(const std::vector<double>& w, double s0, int n_xi) {
    PchipUniform interp(w, s0);
    std::vector<double> out(std::size_t(n_xi) + 1);
    for (int j = 0; j <= n_xi; ++j) out[std::size_t(j)] = interp(s0 * double(j) / n_xi);
    out.back() = 0;
    for (double& x : out) x = std::max(x, 0.0);
    return out;
}

// One semi-implicit update of a single mapped profile: implicit diffusion,
// explicit reaction/source/mesh-advection, explicit Stefan front with lagged
// flux (unless a prescribed front is supplied).
struct FrontUpdate {
    double s_new, s_dot;
};

FrontUpdate advance_front(const std::vector<double>& w, double s_old, double mu, double dt,
                          double dxi, double t_new, const ManufacturedOptions* mms) {
    if (mms && mms->front) {
        const double s_new = mms->front(t_new);
        const double s_dot = mms->front_speed ? mms->front_speed(t_new)
                                              : (s_new - (mms->front(t_new - dt))) / dt;
        return {s_new, s_dot};
    }
    const double flux = boundary_flux(w, s_old, dxi);
    const double proposed = s_old + dt * mu * (-flux);
    if (proposed < s_old - kCollapseTol * std::max(1.0, s_old))
        throw FrontCollapse("front moved backward at t=" + std::to_string(t_new));
    const double s_new = std::max(proposed, s_old);
    return {s_new, (s_new - s_old) / dt};
}

// reaction(j, x) evaluates the explicit reaction + source at node j (old
// values) and physical position x.
void advance_profile(std::vector<double>& w, double s_new, double s_dot, double d, double dt,
                     double t_new, const std::function<double(int, double)>& reaction) {
    const int n = int(w.size()) - 1;
    const double dxi = 1.0 / n;
    const double D = d * dt / (s_new * s_new * dxi * dxi);

    std::vector<double> lower(std::size_t(n), 0.0), diag(std::size_t(n) + 1, 0.0),
        upper(std::size_t(n), 0.0), rhs(std::size_t(n) + 1, 0.0);

    // Neumann at xi=0 via ghost node
    diag[0] = 1 + 2 * D;
    upper[0] = -2 * D;
    rhs[0] = w[0] + dt * reaction(0, 0.0);

    const double adv_c = s_dot / s_new;
    for (int j = 1; j < n; ++j) {
        const double xi = double(j) * dxi;
        diag[std::size_t(j)] = 1 + 2 * D;
        lower[std::size_t(j) - 1] = -D;
        upper[std::size_t(j)] = -D;
        const double adv = xi * adv_c * (w[std::size_t(j) + 1] - w[std::size_t(j) - 1]) / (2 * dxi);
        rhs[std::size_t(j)] = w[std::size_t(j)] + dt * (reaction(j, xi * s_new) + adv);
    }
    // Dirichlet at xi=1
    lower[std::size_t(n) - 1] = 0;
    diag[std::size_t(n)] = 1;
    rhs[std::size_t(n)] = 0;

    solve_tridiag(lower, diag, upper, rhs);

    for (int j = 0; j <= n; ++j) {
        const double x = rhs[std::size_t(j)];
        if (!std::isfinite(x)) throw NumericalBlowup("non-finite value at t=" + std::to_string(t_new));
        if (x < kNegBreach)
            throw NegativityBreach("value " + std::to_string(x) + " below clipping range at t=" +
                                   std::to_string(t_new));
        w[std::size_t(j)] = std::max(x, 0.0);
    }
    w.back() = 0;
}

double c1_norm(const std::vector<double>& w, double s) {
    const int n = int(w.size()) - 1;
    const double dx = s / n;
    double m = max_abs(w), g = 0;
    for (int j = 1; j < n; ++j)
        g = std::max(g, std::abs((w[std::size_t(j) + 1] - w[std::size_t(j) - 1]) / (2 * dx)));
    g = std::max(g, std::abs((w[1] - w[0]) / dx));
    g = std::max(g, std::abs((w[std::size_t(n)] - w[std::size_t(n) - 1]) / dx));
    return m + g;
}

// K = 2 max{ max(1, ||w0||) sqrt(r/(2d)), -min w0' } over the initial samples.
double front_bound_constant(const std::vector<double>& w0, double s0, double r, double d) {
    const double wmax = max_abs(w0);
    const double dx = s0 / double(w0.size() - 1);
    double min_slope = 0;
    for (std::size_t j = 0; j + 1 < w0.size(); ++j)
        min_slope = std::min(min_slope, (w0[j + 1] - w0[j]) / dx);
    return 2 * std::max(std::max(1.0, wmax) * std::sqrt(r / (2 * d)), -min_slope);
}

void record(Trajectory& traj, const State& st) {
    traj.t.push_back(st.t);
    traj.s1.push_back(st.s1);
    traj.s2.push_back(st.s2);
    traj.s1dot.push_back(st.s1_dot);
    traj.s2dot.push_back(st.s2_dot);
    const std::size_t mid = (st.u.size() - 1) / 2;
    traj.u_origin.push_back(st.u[0]);
    traj.v_origin.push_back(st.v.empty() ? 0.0 : st.v[0]);
    traj.u_mid.push_back(st.u[mid]);
    traj.v_mid.push_back(st.v.empty() ? 0.0 : st.v[mid]);
    traj.u_max.push_back(max_abs(st.u));
    traj.v_max.push_back(st.v.empty() ? 0.0 : max_abs(st.v));
    traj.u_c1norm.push_back(c1_norm(st.u, st.s1));
    traj.v_c1norm.push_back(st.v.empty() ? 0.0 : c1_norm(st.v, st.s2));
}

void snapshot(Trajectory& traj, const State& st) {
    traj.profiles.push_back({st.t, st.u, st.v, st.s1, st.s2});
}

} // namespace

double boundary_flux(const std::vector<double>& profile, double s, double dxi) {
    const std::size_t N = profile.size() - 1;
    return (3 * profile[N] - 4 * profile[N - 1] + profile[N - 2]) / (2 * dxi) / s;
}

double cross_interpolate(const std::vector<double>& profile, double s_front, double x_query) {
    if (x_query >= s_front) return 0.0;
    const int n = int(profile.size()) - 1;
    const double xi = std::max(x_query, 0.0) / s_front * n;
    const int j = std::min(int(xi), n - 1);
    const double t = xi - j;
    return (1 - t) * profile[std::size_t(j)] + t * profile[std::size_t(j) + 1];
}

std::vector<double> cosine_profile(double amp, int n) {
    std::vector<double> w(std::size_t(n) + 1);
    for (int j = 0; j <= n; ++j) w[std::size_t(j)] = amp * std::cos(M_PI * j / (2.0 * n));
    w.back() = 0;
    return w;
}

std::vector<double> bump_profile(double amp, int n) {
    std::vector<double> w(std::size_t(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const double xi = double(j) / n;
        w[std::size_t(j)] = amp * (1 - xi * xi) * (1 - xi * xi);
    }
    w.back() = 0;
    return w;
}

State init_state(const Params& params, const InitialData& init, const GridSpec& grid) {
    params.validate();
    grid.validate(std::max(params.r1, params.r2));
    validate_profile(init.u0, init.s1_0, "u0");
    validate_profile(init.v0, init.s2_0, "v0");
    State st;
    st.t = 0;
    st.s1 = init.s1_0;
    st.s2 = init.s2_0;
    st.u = resample_mapped(init.u0, init.s1_0, grid.n_xi);
    st.v = resample_mapped(init.v0, init.s2_0, grid.n_xi);
    return st;
}

State step(const State& state, const Params& params, const GridSpec& grid) {
    const double dt = grid.dt;
    const double dxi = 1.0 / grid.n_xi;
    const double t_new = state.t + dt;

    State next = state;
    const FrontUpdate f1 = advance_front(state.u, state.s1, params.mu1, dt, dxi, t_new, nullptr);
    const FrontUpdate f2 = advance_front(state.v, state.s2, params.mu2, dt, dxi, t_new, nullptr);
    next.s1 = f1.s_new;
    next.s2 = f2.s_new;
    next.s1_dot = f1.s_dot;
    next.s2_dot = f2.s_dot;

    // Lagged cross coupling: each species sees the other's previous profile.
    auto react_u = [&](int j, double x) {
        const double u = state.u[std::size_t(j)];
        const double v_here = cross_interpolate(state.v, state.s2, x);
        return params.r1 * u * (1 - u - params.k * v_here);
    };
    auto react_v = [&](int j, double x) {
        const double v = state.v[std::size_t(j)];
        const double u_here = cross_interpolate(state.u, state.s1, x);
        return params.r2 * v * (1 - v - params.h * u_here);
    };
    advance_profile(next.u, f1.s_new, f1.s_dot, params.d1, dt, t_new, react_u);
    advance_profile(next.v, f2.s_new, f2.s_dot, params.d2, dt, t_new, react_v);
    next.t = t_new;
    return next;
}

Trajectory run(const Params& params, const InitialData& init, const GridSpec& grid) {
    State st = init_state(params, init, grid);
    const long long n_steps = llround(grid.t_end / grid.dt);
    const int stride = grid.snapshot_stride > 0
                           ? grid.snapshot_stride
                           : std::max<long long>(1, n_steps / 2000);

    // Front-speed watchdog calibrated from the Stefan-rate bound constant.
    const double cap1 = 4 * params.mu1 * front_bound_constant(init.u0, init.s1_0, params.r1, params.d1);
    const double cap2 = 4 * params.mu2 * front_bound_constant(init.v0, init.s2_0, params.r2, params.d2);

    Trajectory traj;
    traj.n_xi = grid.n_xi;
    record(traj, st);
    snapshot(traj, st);
    for (long long i = 1; i <= n_steps; ++i) {
        st = step(st, params, grid);
        if (!traj.watchdog_fired && (st.s1_dot > cap1 || st.s2_dot > cap2)) {
            traj.watchdog_fired = true;
            traj.watchdog_time = st.t;
        }
        if (i % stride == 0 || i == n_steps) {
            record(traj, st);
            snapshot(traj, st);
        }
    }
    return traj;
}

Trajectory solve_single_species(const SingleSpeciesSpec& spec, const GridSpec& grid) {
    return solve_single_species(spec, grid, ManufacturedOptions{});
}

Trajectory solve_single_species(const SingleSpeciesSpec& spec, const GridSpec& grid,
                                const ManufacturedOptions& opts) {
    if (!(spec.d > 0 && spec.r > 0 && spec.a > 0 && spec.mu > 0))
        throw ValueError("SingleSpeciesSpec: d, r, a, mu must be positive");
    grid.validate(spec.r * spec.a);
    validate_profile(spec.w0, spec.g0, "w0");

    State st;
    st.t = spec.tau;
    st.s1 = spec.g0;
    st.u = resample_mapped(spec.w0, spec.g0, grid.n_xi);
    st.s2 = 0;
    st.v.assign(st.u.size(), 0.0);

    const double dxi = 1.0 / grid.n_xi;
    const long long n_steps = llround(grid.t_end / grid.dt);
    const int stride = grid.snapshot_stride > 0
                           ? grid.snapshot_stride
                           : std::max<long long>(1, n_steps / 2000);
    const double cap = 4 * spec.mu * front_bound_constant(spec.w0, spec.g0, spec.r * spec.a, spec.d);

    Trajectory traj;
    traj.n_xi = grid.n_xi;
    record(traj, st);
    snapshot(traj, st);
    const bool mms = bool(opts.front) || bool(opts.source);
    for (long long i = 1; i <= n_steps; ++i) {
        const double t_new = st.t + grid.dt;
        const FrontUpdate f =
            advance_front(st.u, st.s1, spec.mu, grid.dt, dxi, t_new, mms ? &opts : nullptr);
        const double t_old = st.t;
        auto react = [&](int j, double x) {
            const double w = st.u[std::size_t(j)];
            double val = spec.r * w * (spec.a - w);
            if (opts.source) val += opts.source(t_old, x);
            return val;
        };
        advance_profile(st.u, f.s_new, f.s_dot, spec.d, grid.dt, t_new, react);
        st.s1 = f.s_new;
        st.s1_dot = f.s_dot;
        st.t = t_new;
        if (!traj.watchdog_fired && !mms && st.s1_dot > cap) {
            traj.watchdog_fired = true;
            traj.watchdog_time = st.t;
        }
        if (i % stride == 0 || i == n_steps) {
            record(traj, st);
            snapshot(traj, st);
        }
    }
    return traj;
}

} // namespace fbcd
