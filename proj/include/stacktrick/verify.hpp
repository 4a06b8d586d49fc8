#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stacktrick {

// Exhaustive differential check of every trick up to a deck-size cap:
//   - closed form, recurrence, and physical simulation agree for every
//     start position and every iteration count up to max_iterations;
//   - the classified verdict matches the empirical convergence test in
//     both directions;
//   - solvable tricks sit at their final position for every iteration
//     count in [k_paper, k_paper + 3], with k_star <= k_paper;
//   - the counting formula matches direct enumeration for every deck size.
struct VerifyReport {
    std::int64_t specs_total = 0;
    std::int64_t solvable_total = 0;
    std::int64_t equivalence_checks = 0;
    std::int64_t equivalence_failures = 0;
    std::int64_t verdict_checks = 0;
    std::int64_t verdict_failures = 0;
    std::int64_t stability_checks = 0;
    std::int64_t stability_failures = 0;
    std::int64_t count_checks = 0;
    std::int64_t count_failures = 0;
    std::vector<std::string> diagnostics;  // first offending triples, capped

    std::int64_t failures() const {
        return equivalence_failures + verdict_failures + stability_failures +
               count_failures;
    }
    bool ok() const { return failures() == 0; }
};

VerifyReport run_verification(std::int64_t max_cards, std::int64_t max_iterations = 8);

}  // namespace stacktrick
