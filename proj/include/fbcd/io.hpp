#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fbcd/analysis.hpp"
#include "fbcd/solver.hpp"

namespace fbcd {

// Time series CSV: header t,s1,s2,s1dot,s2dot,u0,v0,umax,vmax, one row per
// snapshot, full double precision scientific notation.
void write_trajectory_csv(const Trajectory& traj, std::ostream& os);

// Profile snapshots: header t,xi,u,v; one block of rows per snapshot.
void write_profiles_csv(const Trajectory& traj, std::ostream& os);

std::string outcome_to_json(const Outcome& outcome, const std::vector<CheckResult>& checks,
                            const SpeedBoundReport& speeds);

std::string certificate_to_json(const Thm6Certificate& cert);

std::string format_full(double x);  // %.17e

} // namespace fbcd
