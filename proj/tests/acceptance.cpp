#include <iostream>

#include "fbcd/verify.hpp"

// Acceptance gate: every criterion prints one [PASS]/[FAIL] line.
int main() {
    try {
        return fbcd::print_report(fbcd::run_suite("all"), std::cout) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "acceptance run aborted: " << e.what() << '\n';
        return 1;
    }
}
