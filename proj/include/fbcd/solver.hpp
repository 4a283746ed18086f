#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fbcd/errors.hpp"
#include "fbcd/params.hpp"

namespace fbcd {

// Initial profiles, sampled uniformly on [0, s1_0] and [0, s2_0].
// Each profile must be positive on [0, s0), zero at s0, with zero discrete
// slope at x = 0.
struct InitialData {
    double s1_0 = 1.0, s2_0 = 1.0;
    std::vector<double> u0, v0;
};

struct GridSpec {
    int n_xi = 256;            // nodes per unit mapped domain (grid has n_xi+1 points)
    double dt = 5e-4;
    double t_end = 10.0;
    int snapshot_stride = 0;   // 0: pick automatically (<= ~2000 snapshots)

    void validate(double r_max) const {
        if (n_xi < 32) throw ValueError("GridSpec: n_xi must be >= 32");
        if (!(dt > 0)) throw ValueError("GridSpec: dt must be positive");
        if (!(t_end >= 0)) throw ValueError("GridSpec: t_end must be nonnegative");
        if (snapshot_stride < 0) throw ValueError("GridSpec: snapshot_stride must be positive");
        if (dt * r_max >= 0.5) throw ValueError("GridSpec: dt*max(r1,r2) must be < 0.5");
    }
};

// Both species live on fixed mapped grids xi = x/s_i(t) in [0,1].
struct State {
    double t = 0;
    double s1 = 0, s2 = 0;
    double s1_dot = 0, s2_dot = 0;
    std::vector<double> u, v;  // n_xi+1 values each; u.back() == v.back() == 0
};

struct ProfileSnapshot {
    double t;
    std::vector<double> u, v;  // on the shared mapped grid
    double s1, s2;
};

struct Trajectory {
    int n_xi = 0;
    std::vector<double> t, s1, s2, s1dot, s2dot;
    std::vector<double> u_origin, v_origin, u_mid, v_mid, u_max, v_max;
    std::vector<double> u_c1norm, v_c1norm;  // discrete C^1 norms (max value + max |d/dx|)
    std::vector<ProfileSnapshot> profiles;
    bool watchdog_fired = false;
    double watchdog_time = -1;  // first time the front-speed monitor tripped
};

// Single-species free boundary problem: w_t - d w_xx = r w (a - w),
// Stefan front g'(t) = -mu w_x(t, g(t)), started at time tau.
struct SingleSpeciesSpec {
    double tau = 0;
    double d = 1, r = 1, a = 1, mu = 1;
    double g0 = 1;
    std::vector<double> w0;  // sampled uniformly on [0, g0]
};

// Hooks used by the manufactured-solution convergence study: an extra source
// term (in physical coordinates) and an externally prescribed front.
struct ManufacturedOptions {
    std::function<double(double t, double x)> source;           // added to the reaction
    std::function<double(double t)> front;                      // prescribed s(t)
    std::function<double(double t)> front_speed;                // prescribed s'(t)
};

// Physical-space gradient at the front from mapped values:
// (3 p_N - 4 p_{N-1} + p_{N-2}) / (2 dxi) / s  (second-order one-sided).
double boundary_flux(const std::vector<double>& profile, double s, double dxi);

// Sample a mapped profile at a physical position; identically zero past the front.
double cross_interpolate(const std::vector<double>& profile, double s_front, double x_query);

State init_state(const Params& params, const InitialData& init, const GridSpec& grid);
State step(const State& state, const Params& params, const GridSpec& grid);
Trajectory run(const Params& params, const InitialData& init, const GridSpec& grid);

Trajectory solve_single_species(const SingleSpeciesSpec& spec, const GridSpec& grid);
Trajectory solve_single_species(const SingleSpeciesSpec& spec, const GridSpec& grid,
                                const ManufacturedOptions& opts);

// Cosine initial profile amp*cos(pi x / (2 s0)) sampled on n+1 uniform nodes.
std::vector<double> cosine_profile(double amp, int n);
// Quartic bump amp*(1-(x/s0)^2)^2 sampled on n+1 uniform nodes.
std::vector<double> bump_profile(double amp, int n);

} // namespace fbcd
