#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fbcd/params.hpp"
#include "fbcd/solver.hpp"

namespace fbcd {

// Critical front lengths. s*_i = (pi/2) sqrt(d_i/r_i); the tilde variants use
// the competition-reduced rates and exist only below the exclusion threshold.
struct Thresholds {
    double s1_star = 0, s2_star = 0;
    std::optional<double> s1_tilde, s2_tilde;  // defined iff k<1 (resp. h<1)
};

Thresholds thresholds(const Params& params);

// ((1-k)/(1-hk), (1-h)/(1-hk)); requires hk != 1.
std::pair<double, double> coexistence_limits(double k, double h);

// The alternating barrier sequences from the coexistence iteration:
// ubar_1 = 1-k, vbar_1 = 1, vbar_n = 1 - h*ubar_{n-1}, ubar_n = 1 - k*vbar_n.
struct IterationBounds {
    std::vector<double> u_lower;  // ubar_n, n = 1..N
    std::vector<double> v_upper;  // vbar_n, n = 1..N
    bool converged = false;       // |u_lower.back() - (1-k)/(1-hk)| < 1e-10
};

IterationBounds iteration_bounds(double k, double h, int N);

enum class Label { Spreading, Vanishing, Indeterminate };
std::string to_string(Label l);

struct SpeciesOutcome {
    Label label = Label::Indeterminate;
    double final_front = 0;
    double final_max = 0;
    double slope = 0;       // fitted trailing front speed
    double drift = 0;
    double window_t0 = 0;   // start of the fit window
};

struct Outcome {
    SpeciesOutcome species1, species2;
};

struct ClassifyCriteria {
    double vanish_tol = 1e-4;
    double slope_floor = 1e-3;
    double window_fraction = 0.3;
};

struct FrontFit {
    double slope = 0, drift = 0, rms_residual = 0;
    double window_t0 = 0;
};

// Least squares s(t) ~ slope*t + drift over the trailing window of samples.
FrontFit fit_front_speed(const Trajectory& traj, int species, double window_fraction);

Outcome classify(const Trajectory& traj, const Thresholds& thr,
                 const ClassifyCriteria& criteria = {});

enum class CheckStatus { Pass, Fail, NotApplicable };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::NotApplicable;
    std::string detail;
};

// Finite-time surrogates for the dichotomy implications (one front bounded
// forces the other to spread, initial fronts above the reduced thresholds
// force both to spread, ...).
std::vector<CheckResult> dichotomy_consistency(const Outcome& outcome, const Thresholds& thr,
                                               const Trajectory& traj, const Params& params);

// Computable certificate for the slow-strong-competitor bound
// s2(t) >= K mu1 t + s1_0 + L(mu1).
struct Thm6Certificate {
    double K = 0;          // Stefan-rate bound constant from the u0 data
    double sigma_bar = 0;  // largest admissible comparison speed
    double mu1_bar = 0;    // sigma_bar / K
    std::optional<double> L_of_mu1;  // gap requirement; defined iff K*mu1 < sqrt(2 d2 r2)
    double ell_sigma = 0, delta_sigma = 0;  // evaluated at sigma = K*mu1
    bool holds = false;
};

Thm6Certificate thm6_certificate(const Params& params, const InitialData& init);

// Invert the principal-eigenvalue relation: ell = 2 pi d2 / sqrt(4 d2 (r2+lambda) - sigma^2).
double eigen_length(double d2, double r2, double sigma, double lambda);

// Positive root of delta*(c_sigma + d2*delta) = (r2/2)*(1 - h(1-k)).
double thm7_delta_max(double c_sigma, double d2, double r2, double k, double h);

struct SpeedBoundCheck {
    bool applicable = false;
    bool pass = false;
    double slope = 0;
    double bound = 0;  // reduced semi-wave speed
};

struct SpeedBoundReport {
    SpeedBoundCheck species1, species2;
    bool all_pass() const {
        return (!species1.applicable || species1.pass) && (!species2.applicable || species2.pass);
    }
};

// Fitted front slopes against the reduced semi-wave speeds (lower bounds).
SpeedBoundReport speed_lower_bound_check(const Trajectory& traj, const Params& params,
                                         double tol_rel = 0.05);

} // namespace fbcd
