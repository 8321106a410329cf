// Release gate: runs the twelve contractual checks at full ranges and prints
// one pass/fail line per gate.  Exits nonzero if any gate fails.

#include <cstdio>
#include "qlat/verify.hpp"

int main() {
    qlat::Suite s = qlat::acceptance_suite();
    int failures = 0;
    for (const auto& c : s.checks) {
        std::printf("[%s] %s", c.pass ? "PASS" : "FAIL", c.id.c_str());
        if (c.tolerance > 0) std::printf("  (residual %.3g, tolerance %.3g)", c.residual, c.tolerance);
        if (!c.witness.empty()) std::printf("  -- %s", c.witness.c_str());
        std::printf("\n");
        if (!c.pass) ++failures;
    }
    std::printf("%d/%zu gates passed\n", (int)s.checks.size() - failures, s.checks.size());
    return failures == 0 ? 0 : 1;
}
