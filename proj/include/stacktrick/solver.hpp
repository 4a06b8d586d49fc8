#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "stacktrick/trick.hpp"

namespace stacktrick {

enum class Verdict { Solvable, NotSolvable };

// Which rule of the classification algorithm decided the verdict. The tag
// names are part of the stable output contract (CSV and machine format).
enum class Reason {
    Step3_SingleCard,          // one card: always position 1
    Step4_OneStack,            // one stack, several cards: never converges
    Step5_JZero,               // nothing on top: converges to position 1
    Step6_JMax,                // everything on top: converges to the bottom
    Step7_Divisibility_Pass,   // interior on_top, offset non-integral
    Step7_Divisibility_Fail,   // interior on_top, offset integral
};

const char* to_string(Verdict verdict);
const char* to_string(Reason reason);

struct SolveOutcome {
    TrickSpec spec;
    Verdict verdict = Verdict::NotSolvable;
    Reason reason = Reason::Step4_OneStack;
    std::optional<std::int64_t> final_position;  // l
    std::optional<std::int64_t> k_paper;         // smallest k meeting the analytic bound
    std::optional<std::int64_t> k_star;          // smallest k observed to converge
    DerivedParams params;

    bool solvable() const { return verdict == Verdict::Solvable; }
};

// Rule dispatch. Fills verdict, reason, final_position and k_paper; k_star
// is left to solve() except in the trivial one-card case, where it is 1.
SolveOutcome classify(const TrickSpec& spec);

// Smallest k >= 1 satisfying the analytic bound for a solvable spec with
// more than one card. All comparisons are integer power comparisons:
//
//   on_top == 0:          smallest k with stacks^k >= cards
//   on_top == stacks-1:   smallest k with stacks^k > cards - 1
//   interior on_top:      with q = stacks-1, p = cards_per_stack*on_top,
//                         r = p mod q, the threshold comparison
//                         stacks^k > max((C*q - p*n)/(q - r), (p*n - q)/r)
//                         clears its denominators to the pair
//                           stacks^k * (q - r) > C*q - p*n
//                           stacks^k * r       > p*n - q
//                         which must both hold strictly.
std::int64_t k_paper_bound(const TrickSpec& spec, const DerivedParams& params);

// Smallest k <= k_cap at which every start position has converged to one
// final position, measured by sweeping all starts; absent if none does.
std::optional<std::int64_t> k_star_empirical(const TrickSpec& spec, std::int64_t k_cap);

// classify + empirical minimum, assembled into one outcome. For solvable
// specs k_star is searched up to k_paper, where it must exist.
SolveOutcome solve(const TrickSpec& spec);

// Distinct final positions over every start after exactly k iterations,
// computed with the closed form. The trick is certified at k when the
// image is a singleton.
struct Certification {
    std::int64_t iterations = 0;
    bool certified = false;
    std::set<std::int64_t> image;
};

Certification certify_at(const TrickSpec& spec, std::int64_t iterations);

}  // namespace stacktrick
