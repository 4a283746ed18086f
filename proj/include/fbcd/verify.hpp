#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fbcd/analysis.hpp"

namespace fbcd {

// Named verification suites: semiwave, dichotomy, coexistence, thm5, thm6,
// convergence, all. Each expands to one or more AC-n criteria.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& suite);

// Prints one line per criterion; returns true iff everything passed.
bool print_report(const std::vector<CheckResult>& results, std::ostream& os);

} // namespace fbcd
