// Acceptance suite: runs every verification claim at full size and prints
// one line per claim. Exits nonzero if any claim fails.

#include <cstdio>

#include "quot/verify.hpp"

int main() {
    quot::VerifyOptions opts;
    opts.max_d = 5;  // cover the full stated ranges of every claim
    opts.field = quot::Field::rationals();
    opts.threads = quot::threads_from_env();

    quot::VerificationReport rep = quot::run_verification(opts);
    for (const auto& c : rep.claims) {
        const char* status = c.status == quot::ClaimStatus::pass   ? "PASS"
                             : c.status == quot::ClaimStatus::fail ? "FAIL"
                                                                   : "SKIP";
        std::printf("%-5s %s  %7.3fs  (budget %gs)  %s\n", c.id.c_str(), status, c.elapsed_s,
                    c.budget_s, c.anchor.c_str());
        if (c.status != quot::ClaimStatus::pass) std::printf("      %s\n", c.details.c_str());
    }
    std::printf("%u passed, %u failed, %u skipped\n", rep.count(quot::ClaimStatus::pass),
                rep.count(quot::ClaimStatus::fail), rep.count(quot::ClaimStatus::skipped));
    return rep.all_passed() ? 0 : 1;
}
