// Re-derives every recorded acceptance criterion from scratch and prints one
// pass/fail line per criterion, followed by the evidence reports.  Exit code
// is the number of failed criteria, capped for shell safety.
#include <algorithm>
#include <cstdio>
#include <vector>

#include "wiener/claims.hpp"

int main() {
    using namespace wiener;
    std::vector<const Claim*> gates, reports;
    for (const auto& claim : claim_registry()) {
        if (claim.criterion > 0)
            gates.push_back(&claim);
        else if (!claim.gate)
            reports.push_back(&claim);
    }
    std::sort(gates.begin(), gates.end(),
              [](const Claim* a, const Claim* b) { return a->criterion < b->criterion; });

    int failures = 0;
    for (const Claim* claim : gates) {
        ClaimResult res = run_claim(*claim);
        bool ok = res.status == ClaimStatus::pass;
        failures += !ok;
        std::string detail = res.observed;
        if (!ok && !res.counterexample.empty()) detail += "  [" + res.counterexample + "]";
        std::printf("%-4s %2d %-20s %8.2fs  %s\n", ok ? "PASS" : "FAIL", claim->criterion,
                    claim->id.c_str(), res.seconds, detail.c_str());
        std::fflush(stdout);
    }
    for (const Claim* claim : reports) {
        ClaimResult res = run_claim(*claim);
        std::printf("%-4s  - %-20s %8.2fs  %s\n", "RPRT", claim->id.c_str(), res.seconds,
                    res.observed.c_str());
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("all 18 criteria passed\n");
    else
        std::printf("%d of 18 criteria failed\n", failures);
    return std::min(failures, 125);
}
