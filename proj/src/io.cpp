#include "fbcd/io.hpp"

#include <cstdio>

#include "json.hpp"

namespace fbcd {

std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17e", x);
    return buf;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& os) {
    os << "t,s1,s2,s1dot,s2dot,u0,v0,umax,vmax\n";
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
        os << format_full(traj.t[i]) << ',' << format_full(traj.s1[i]) << ','
           << format_full(traj.s2[i]) << ',' << format_full(traj.s1dot[i]) << ','
           << format_full(traj.s2dot[i]) << ',' << format_full(traj.u_origin[i]) << ','
           << format_full(traj.v_origin[i]) << ',' << format_full(traj.u_max[i]) << ','
           << format_full(traj.v_max[i]) << '\n';
    }
}

void write_profiles_csv(const Trajectory& traj, std::ostream& os) {
    os << "t,xi,u,v\n";
    for (const ProfileSnapshot& p : traj.profiles) {
        const std::size_t n = p.u.size();
        for (std::size_t j = 0; j < n; ++j) {
            const double xi = double(j) / double(n - 1);
            os << format_full(p.t) << ',' << format_full(xi) << ',' << format_full(p.u[j]) << ','
               << format_full(p.v[j]) << '\n';
        }
    }
}

namespace {

nlohmann::json species_json(const SpeciesOutcome& s) {
    return {
        {"label", to_string(s.label)},
        {"final_front", s.final_front},
        {"final_max", s.final_max},
        {"slope", s.slope},
        {"drift", s.drift},
        {"window_t0", s.window_t0},
    };
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "not-applicable";
    }
}

nlohmann::json speed_json(const SpeedBoundCheck& c) {
    return {{"applicable", c.applicable}, {"pass", c.pass}, {"slope", c.slope}, {"bound", c.bound}};
}

} // namespace

std::string outcome_to_json(const Outcome& outcome, const std::vector<CheckResult>& checks,
                            const SpeedBoundReport& speeds) {
    nlohmann::json j;
    j["species1"] = species_json(outcome.species1);
    j["species2"] = species_json(outcome.species2);
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : checks)
        arr.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
    j["dichotomy_checks"] = arr;
    j["speed_lower_bounds"] = {{"species1", speed_json(speeds.species1)},
                               {"species2", speed_json(speeds.species2)},
                               {"all_pass", speeds.all_pass()}};
    return j.dump(2);
}

std::string certificate_to_json(const Thm6Certificate& cert) {
    nlohmann::json j = {
        {"k_bound", cert.K},
        {"sigma_bar", cert.sigma_bar},
        {"mu1_bar", cert.mu1_bar},
        {"ell_sigma", cert.ell_sigma},
        {"delta_sigma", cert.delta_sigma},
        {"holds", cert.holds},
    };
    if (cert.L_of_mu1)
        j["L_of_mu1"] = *cert.L_of_mu1;
    else
        j["L_of_mu1"] = nullptr;
    return j.dump(2);
}

} // namespace fbcd
