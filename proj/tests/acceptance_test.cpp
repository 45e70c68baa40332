// Acceptance battery: one line per criterion, nonzero exit if any fails.
#include <cstdio>

#include "hpd/verify.hpp"

int main() {
    std::vector<hpd::CheckOutcome> outcomes = hpd::run_acceptance();
    int failed = 0;
    for (const hpd::CheckOutcome& c : outcomes) {
        std::printf("[%s] %-28s cases=%-6lld violations=%lld (%.0f ms)\n",
                    c.passed ? "PASS" : "FAIL", c.name.c_str(), c.cases, c.violations, c.wall_ms);
        if (!c.passed) {
            ++failed;
            if (!c.detail.empty()) std::printf("       %s\n", c.detail.c_str());
        }
    }
    std::printf("%zu/%zu criteria passed\n", outcomes.size() - failed, outcomes.size());
    return failed == 0 ? 0 : 1;
}
