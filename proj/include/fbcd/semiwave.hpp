#pragma once

#include <optional>
#include <vector>

#include "fbcd/errors.hpp"
#include "fbcd/params.hpp"

namespace fbcd {

// Parameters of one semi-wave problem: d q'' - c q' + q(a - b q) = 0 on
// (0,inf), q(0)=0, q'(0)=c/mu, q(inf)=a/b, with the speed c as unknown.
struct SemiWaveParams {
    double mu, a, b, d;

    SemiWaveParams(double mu_, double a_, double b_, double d_)
        : mu(mu_), a(a_), b(b_), d(d_) {
        if (!(mu > 0 && a > 0 && b > 0 && d > 0))
            throw ValueError("SemiWaveParams: all of mu, a, b, d must be positive");
    }

    double c_max() const { return 2.0 * std::sqrt(a * d); }
};

struct SemiWave {
    double c = 0;                  // wave speed, in (0, 2*sqrt(a*d))
    std::vector<double> y_grid;    // uniform grid on [0, y_max]
    std::vector<double> q;         // strictly increasing profile, q(0)=0 -> a/b
    double residual = 0;           // max finite-difference defect of the ODE on y_grid
};

// Shooting + bisection solve of the semi-wave problem. |c - c*| <= tol.
SemiWave solve_semiwave(const SemiWaveParams& p, double tol, double y_max);
SemiWave solve_semiwave(const SemiWaveParams& p, double tol = 1e-8);

double default_y_max(const SemiWaveParams& p);

// The three speeds the competition theory compares. Reduced speeds exist only
// when the corresponding competition coefficient is < 1.
struct SpeedSummary {
    std::optional<double> c1_reduced;  // c(mu1, r1(1-k), r1, d1), defined iff k < 1
    std::optional<double> c2_reduced;  // c(mu2, r2(1-h), r2, d2), defined iff h < 1
    double c2_free = 0;                // c(mu2, r2, r2, d2)
};

SpeedSummary competition_speeds(const Params& params, double tol = 1e-8);

struct RegionAResult {
    bool in_A = false;
    bool gap_below_resolution = false;  // |c1 - c2| could not be resolved
    double c1_reduced = 0;
    double c2_free = 0;
    explicit operator bool() const { return in_A; }
};

// Strict inequality c1(mu1, r1(1-k)) > c2(mu2, r2); defined only for 0 < k < 1.
RegionAResult in_region_A(const Params& params, double tol = 1e-6);

} // namespace fbcd
