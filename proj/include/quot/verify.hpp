#pragma once

#include <functional>

#include "quot/fiber.hpp"
#include "quot/tangent.hpp"

namespace quot {

enum class ClaimStatus { pass, fail, skipped };

struct ClaimResult {
    std::string id;       // stable identifier, AC1..AC11
    std::string anchor;   // what the claim checks, in one line
    ClaimStatus status;
    double elapsed_s;
    std::string details;
    double budget_s;      // wall-clock budget the claim must meet
};

struct VerificationReport {
    std::vector<ClaimResult> claims;  // ordered by id
    unsigned max_d;
    Field field;

    bool all_passed() const;
    unsigned count(ClaimStatus s) const;
};

struct VerifyOptions {
    unsigned max_d = 4;          // size cap for the parameterized claims
    Field field;                 // base field (default Q)
    unsigned threads = 1;        // claims evaluated concurrently when > 1
    bool enforce_budgets = true; // report fail when a claim exceeds its budget
};

/// Runs the full claim suite. Claims are deterministic; the report is
/// ordered by claim id regardless of completion order.
VerificationReport run_verification(const VerifyOptions& opts);

/// Reads QUOT_THREADS (>= 1) from the environment, defaulting to 1.
unsigned threads_from_env();

}  // namespace quot
