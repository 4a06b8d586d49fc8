#include "stacktrick/verify.hpp"

#include <string>

#include "stacktrick/atlas.hpp"
#include "stacktrick/simulator.hpp"
#include "stacktrick/solver.hpp"

namespace stacktrick {

namespace {

constexpr std::size_t kMaxDiagnostics = 20;

void note(VerifyReport& report, std::string message) {
    if (report.diagnostics.size() < kMaxDiagnostics)
        report.diagnostics.push_back(std::move(message));
}

std::string triple(const TrickSpec& spec) {
    return "(" + std::to_string(spec.cards) + ", " + std::to_string(spec.stacks) +
           ", " + std::to_string(spec.on_top) + ")";
}

// Smallest k with stacks^k >= cards, by integer power search.
std::int64_t power_log_ceil(std::int64_t cards, std::int64_t stacks) {
    std::int64_t k = 0;
    exact::Int power = 1;
    while (power < exact::Int(cards)) {
        power = exact::checked_mul(power, stacks);
        ++k;
    }
    return k;
}

void check_spec(const TrickSpec& spec, std::int64_t max_iterations, VerifyReport& report) {
    ++report.specs_total;
    const SolveOutcome outcome = classify(spec);

    // Route equivalence: trace once per start, compare every prefix.
    for (std::int64_t start = 1; start <= spec.cards; ++start) {
        const TrickTrace trace = run_trick(spec, start, max_iterations);
        std::int64_t recurrence = start;
        for (std::int64_t k = 1; k <= max_iterations; ++k) {
            recurrence = iterate_deck_id(spec, recurrence, 1);
            const std::int64_t closed = closed_form_deck_id(spec, start, k);
            const std::int64_t physical =
                trace.iterations[static_cast<std::size_t>(k - 1)].deck.tracked_position();
            ++report.equivalence_checks;
            if (closed != recurrence || recurrence != physical) {
                ++report.equivalence_failures;
                note(report, "route mismatch at " + triple(spec) + " start=" +
                                 std::to_string(start) + " k=" + std::to_string(k));
            }
        }
    }

    // Verdict vs. measured convergence, both directions.
    const std::int64_t cap =
        std::max(outcome.k_paper.value_or(0),
                 spec.stacks > 1 ? power_log_ceil(spec.cards, spec.stacks) + 3
                                 : std::int64_t{3});
    const auto measured = k_star_empirical(spec, std::max<std::int64_t>(cap, 1));
    ++report.verdict_checks;
    if (outcome.solvable() != measured.has_value()) {
        ++report.verdict_failures;
        note(report, "verdict mismatch at " + triple(spec));
    }

    if (!outcome.solvable()) return;
    ++report.solvable_total;

    // Once converged the position must pin at final_position and stay there.
    const std::int64_t bound = *outcome.k_paper;
    const std::int64_t target = *outcome.final_position;
    bool stable = measured.has_value() && *measured <= bound;
    for (std::int64_t start = 1; stable && start <= spec.cards; ++start) {
        std::int64_t position = iterate_deck_id(spec, start, bound);
        for (std::int64_t k = bound; k <= bound + 3; ++k) {
            if (position != target) {
                stable = false;
                break;
            }
            position = iterate_deck_id(spec, position, 1);
        }
    }
    ++report.stability_checks;
    if (!stable) {
        ++report.stability_failures;
        note(report, "instability past the bound at " + triple(spec));
    }
}

}  // namespace

VerifyReport run_verification(std::int64_t max_cards, std::int64_t max_iterations) {
    VerifyReport report;
    for (std::int64_t cards = 1; cards <= max_cards; ++cards) {
        for (std::int64_t stacks = 1; stacks <= cards; ++stacks) {
            if (cards % stacks != 0) continue;
            for (std::int64_t on_top = 0; on_top < stacks; ++on_top)
                check_spec(validate_spec(cards, stacks, on_top), max_iterations, report);
        }
        const CountResult count = count_solvable(cards);
        ++report.count_checks;
        if (count.formula_count != count.enumerated_count) {
            ++report.count_failures;
            note(report, "count mismatch at C=" + std::to_string(cards));
        }
    }
    return report;
}

}  // namespace stacktrick
