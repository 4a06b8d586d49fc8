// Acceptance suite: end-to-end checks over the full working range, one
// pass/fail line per criterion. Exit status is the number of failed
// criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stacktrick/atlas.hpp"
#include "stacktrick/simulator.hpp"
#include "stacktrick/solver.hpp"

using namespace stacktrick;
using exact::Int;
using exact::Rational;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Criterion {
    std::string label;
    bool passed = false;
    std::string detail;
    double elapsed_ms = 0;
};

void for_each_spec(std::int64_t max_cards, auto&& body) {
    for (std::int64_t cards = 1; cards <= max_cards; ++cards)
        for (std::int64_t stacks = 1; stacks <= cards; ++stacks) {
            if (cards % stacks != 0) continue;
            for (std::int64_t on_top = 0; on_top < stacks; ++on_top)
                body(validate_spec(cards, stacks, on_top));
        }
}

std::int64_t power_log_ceil(std::int64_t cards, std::int64_t stacks) {
    std::int64_t k = 0;
    Int power = 1;
    while (power < Int(cards)) {
        power = exact::checked_mul(power, stacks);
        ++k;
    }
    return k;
}

// 1. The classic 21-card trick, solved end to end.
Criterion criterion_classic_trick() {
    Criterion c;
    c.label = "21-card trick end-to-end";
    const TrickSpec spec = validate_spec(21, 3, 1);
    (void)solve(spec);  // warm up
    const auto start = Clock::now();
    const SolveOutcome out = solve(spec);
    c.elapsed_ms = ms_since(start);
    c.passed = out.solvable() && out.final_position == 11 && out.k_paper == 3 &&
               out.params.threshold == Rational(21, 1) && c.elapsed_ms < 1.0;
    c.detail = "l=" + std::to_string(out.final_position.value_or(-1)) +
               " k_paper=" + std::to_string(out.k_paper.value_or(-1)) +
               " threshold=" + (out.params.threshold ? out.params.threshold->str() : "-");
    return c;
}

// 2. The worked trace from start position 20.
Criterion criterion_worked_trace() {
    Criterion c;
    c.label = "worked-example trace";
    const auto start = Clock::now();
    const TrickTrace trace = run_trick(validate_spec(21, 3, 1), 20, 3);
    const std::vector<std::int64_t> expected_deck = {
        1, 4, 7, 10, 13, 16, 19, 2, 5, 8, 11, 14, 17, 20, 3, 6, 9, 12, 15, 18, 21};
    bool ok = trace.iterations.size() == 3;
    const std::int64_t positions[] = {14, 12, 11};
    const std::int64_t rows[] = {7, 5, 4};
    for (std::size_t i = 0; ok && i < 3; ++i) {
        ok = trace.iterations[i].deck.tracked_position() == positions[i] &&
             trace.iterations[i].stack_row == rows[i];
    }
    ok = ok && trace.iterations[0].deck.cards == expected_deck;
    c.elapsed_ms = ms_since(start);
    c.passed = ok;
    c.detail = "positions 14,12,11; rows 7,5,4; full deck after round 1";
    return c;
}

// 3. All 15 reference tricks recompute and certify at their listed k.
Criterion criterion_reference_table() {
    Criterion c;
    c.label = "reference table of 15 tricks";
    struct Entry {
        std::int64_t cards, stacks, on_top, k, final_position;
    };
    constexpr Entry table[] = {
        {20, 4, 2, 3, 14}, {21, 7, 5, 2, 18}, {24, 6, 4, 3, 20}, {25, 5, 3, 3, 19},
        {27, 3, 1, 4, 14}, {28, 4, 2, 3, 19}, {30, 5, 3, 3, 23}, {32, 4, 2, 3, 22},
        {33, 3, 1, 4, 17}, {35, 5, 3, 3, 27}, {36, 6, 4, 3, 29}, {36, 9, 3, 2, 14},
        {39, 3, 1, 4, 20}, {40, 4, 2, 3, 27}, {40, 8, 5, 2, 29},
    };
    const auto start = Clock::now();
    int mismatches = 0;
    for (const Entry& e : table) {
        const TrickSpec spec = validate_spec(e.cards, e.stacks, e.on_top);
        const SolveOutcome out = solve(spec);
        const bool values_ok = out.solvable() && *out.final_position == e.final_position &&
                               *out.k_paper == e.k;
        const auto finals = sweep_all_starts(spec, e.k);
        const bool certified =
            finals.size() == 1 && *finals.begin() == e.final_position;
        if (!values_ok || !certified) ++mismatches;
    }
    c.elapsed_ms = ms_since(start);
    c.passed = mismatches == 0 && c.elapsed_ms < 1000.0;
    c.detail = std::to_string(mismatches) + " mismatches";
    return c;
}

// 4. Closed form == recurrence == physical simulation everywhere.
Criterion criterion_route_equivalence() {
    Criterion c;
    c.label = "route equivalence sweep (C<=60, k<=8)";
    const auto start = Clock::now();
    std::int64_t checks = 0, mismatches = 0;
    for_each_spec(60, [&](const TrickSpec& spec) {
        for (std::int64_t d0 = 1; d0 <= spec.cards; ++d0) {
            const TrickTrace trace = run_trick(spec, d0, 8);
            std::int64_t recurrence = d0;
            for (std::int64_t k = 1; k <= 8; ++k) {
                recurrence = iterate_deck_id(spec, recurrence, 1);
                const std::int64_t closed = closed_form_deck_id(spec, d0, k);
                const std::int64_t physical =
                    trace.iterations[static_cast<std::size_t>(k - 1)]
                        .deck.tracked_position();
                ++checks;
                if (closed != recurrence || recurrence != physical) ++mismatches;
            }
        }
    });
    c.elapsed_ms = ms_since(start);
    c.passed = mismatches == 0 && c.elapsed_ms < 60'000.0;
    c.detail = std::to_string(checks) + " checks, " + std::to_string(mismatches) +
               " mismatches";
    return c;
}

// 5. Classified verdict == measured convergence, both directions.
Criterion criterion_iff() {
    Criterion c;
    c.label = "solvability iff empirical convergence (C<=60)";
    const auto start = Clock::now();
    std::int64_t checks = 0, disagreements = 0;
    for_each_spec(60, [&](const TrickSpec& spec) {
        const SolveOutcome out = classify(spec);
        const std::int64_t cap =
            std::max(out.k_paper.value_or(0),
                     spec.stacks > 1 ? power_log_ceil(spec.cards, spec.stacks) + 3
                                     : std::int64_t{3});
        const auto measured = k_star_empirical(spec, std::max<std::int64_t>(cap, 1));
        ++checks;
        if (out.solvable() != measured.has_value()) ++disagreements;
    });
    c.elapsed_ms = ms_since(start);
    c.passed = disagreements == 0;
    c.detail = std::to_string(checks) + " specs, " + std::to_string(disagreements) +
               " disagreements";
    return c;
}

// 6. Counting formula == direct enumeration for every deck size to 200.
Criterion criterion_counting() {
    Criterion c;
    c.label = "counting formula vs enumeration (C<=200)";
    const auto start = Clock::now();
    std::int64_t mismatches = 0;
    bool spots_ok = true;
    for (std::int64_t cards = 1; cards <= 200; ++cards) {
        const CountResult r = count_solvable(cards);
        if (r.formula_count != r.enumerated_count) ++mismatches;
        if (cards == 1 && r.formula_count != 1) spots_ok = false;
        if (cards == 6 && r.formula_count != 10) spots_ok = false;
        if (cards == 21 && r.formula_count != 29) spots_ok = false;
    }
    c.elapsed_ms = ms_since(start);
    c.passed = mismatches == 0 && spots_ok && c.elapsed_ms < 10'000.0;
    c.detail = std::to_string(mismatches) + " mismatches; spot values " +
               (spots_ok ? "ok" : "WRONG");
    return c;
}

// 7. The three ceiling identities, exhaustive small ranges plus 10k random
// cases each.
Criterion criterion_ceiling_identities() {
    Criterion c;
    c.label = "ceiling identity suites";
    const auto start = Clock::now();
    std::int64_t counterexamples = 0;

    // monotonicity
    for (Int d = 1; d <= 20; ++d)
        for (Int a = -200; a < 200; ++a)
            if (exact::ceil_div(a, d) > exact::ceil_div(a + 1, d)) ++counterexamples;
    // integer summand extraction
    for (Int v = -10; v <= 10; ++v)
        for (Int a = -200; a <= 200; ++a)
            for (Int d = 1; d <= 20; ++d)
                if (exact::ceil_div(v * d + a, d) != v + exact::ceil_div(a, d))
                    ++counterexamples;
    // nested ceiling collapse, right side in rational arithmetic
    for (Int v = -10; v <= 10; ++v)
        for (Int a = -60; a <= 60; ++a)
            for (Int d = 1; d <= 10; ++d)
                for (Int m = 1; m <= 10; ++m) {
                    const Rational arg = (Rational(v, 1) + Rational(a, d)) / Rational(m, 1);
                    if (exact::ceil_div(v + exact::ceil_div(a, d), m) != arg.ceil())
                        ++counterexamples;
                }

    std::mt19937_64 rng(60902);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000'000, 1'000'000'000);
    std::uniform_int_distribution<std::int64_t> den(1, 1'000'000);
    for (int i = 0; i < 10'000; ++i) {
        Int a1 = num(rng), a2 = num(rng);
        if (a1 > a2) std::swap(a1, a2);
        const Int d = den(rng);
        if (exact::ceil_div(a1, d) > exact::ceil_div(a2, d)) ++counterexamples;
    }
    for (int i = 0; i < 10'000; ++i) {
        const Int v = num(rng) % 1'000'000, a = num(rng), d = den(rng);
        if (exact::ceil_div(v * d + a, d) != v + exact::ceil_div(a, d))
            ++counterexamples;
    }
    for (int i = 0; i < 10'000; ++i) {
        const Int v = num(rng) % 1'000'000, a = num(rng) % 1'000'000;
        const Int d = den(rng) % 10'000 + 1, m = den(rng) % 10'000 + 1;
        const Rational arg = (Rational(v, 1) + Rational(a, d)) / Rational(m, 1);
        if (exact::ceil_div(v + exact::ceil_div(a, d), m) != arg.ceil())
            ++counterexamples;
    }

    c.elapsed_ms = ms_since(start);
    c.passed = counterexamples == 0;
    c.detail = std::to_string(counterexamples) + " counterexamples";
    return c;
}

// 8. Solvable tricks pin their position at and beyond the bound.
Criterion criterion_stability() {
    Criterion c;
    c.label = "stability at and beyond the bound (C<=60)";
    const auto start = Clock::now();
    std::int64_t violations = 0;
    for_each_spec(60, [&](const TrickSpec& spec) {
        const SolveOutcome out = solve(spec);
        if (!out.solvable()) return;
        if (*out.k_star > *out.k_paper) ++violations;
        for (std::int64_t d0 = 1; d0 <= spec.cards; ++d0) {
            std::int64_t position = iterate_deck_id(spec, d0, *out.k_paper);
            for (std::int64_t k = *out.k_paper; k <= *out.k_paper + 3; ++k) {
                if (position != *out.final_position) {
                    ++violations;
                    break;
                }
                position = iterate_deck_id(spec, position, 1);
            }
        }
    });
    c.elapsed_ms = ms_since(start);
    c.passed = violations == 0;
    c.detail = std::to_string(violations) + " violations";
    return c;
}

// 9. The two divisor-shape corollaries.
Criterion criterion_corollaries() {
    Criterion c;
    c.label = "divisor-shape corollaries";
    const auto start = Clock::now();
    std::int64_t violations = 0;
    for (std::int64_t cards = 2; cards <= 200; ++cards)
        for (std::int64_t stacks = 2; stacks <= cards; ++stacks) {
            if (cards % stacks != 0) continue;
            if (exact::gcd(cards / stacks, stacks - 1) != 1) continue;
            for (std::int64_t on_top = 0; on_top < stacks; ++on_top)
                if (!classify(validate_spec(cards, stacks, on_top)).solvable())
                    ++violations;
        }
    for (std::int64_t stacks = 2; stacks <= 14; ++stacks) {
        const std::int64_t cards = stacks * (stacks - 1);
        for (std::int64_t on_top = 1; on_top < stacks - 1; ++on_top)
            if (classify(validate_spec(cards, stacks, on_top)).solvable())
                ++violations;
    }
    c.elapsed_ms = ms_since(start);
    c.passed = violations == 0;
    c.detail = std::to_string(violations) + " violations";
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(criterion_classic_trick());
    results.push_back(criterion_worked_trace());
    results.push_back(criterion_reference_table());
    results.push_back(criterion_route_equivalence());
    results.push_back(criterion_iff());
    results.push_back(criterion_counting());
    results.push_back(criterion_ceiling_identities());
    results.push_back(criterion_stability());
    results.push_back(criterion_corollaries());

    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const Criterion& c = results[i];
        if (!c.passed) ++failures;
        std::printf("[%s] criterion %zu: %s (%s) [%.2f ms]\n",
                    c.passed ? "PASS" : "FAIL", i + 1, c.label.c_str(),
                    c.detail.c_str(), c.elapsed_ms);
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", results.size() - failures,
                results.size());
    return failures;
}
