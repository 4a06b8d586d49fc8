#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "stacktrick/solver.hpp"

namespace stacktrick {

// One enumerated trick. Tricks with equal (cards, stacks, on_top) are the
// same trick: their row is identical no matter when it is computed.
struct AtlasRow {
    std::int64_t cards = 1;
    std::int64_t stacks = 1;
    std::int64_t on_top = 0;
    Verdict verdict = Verdict::NotSolvable;
    Reason reason = Reason::Step4_OneStack;
    std::optional<std::int64_t> final_position;
    std::optional<std::int64_t> k_paper;
    std::optional<std::int64_t> k_star;
};

struct CountResult {
    std::int64_t cards = 1;
    std::int64_t formula_count = 0;     // 1 for one card, else
                                        // sum over divisors n > 1 of
                                        // n + 1 - gcd(cards/n, n-1)
    std::int64_t enumerated_count = 0;  // solvable verdicts over all (n, j)
};

// Both counts; callers assert they agree, the function reports them as
// computed.
CountResult count_solvable(std::int64_t cards);

// One row per valid (stacks, on_top) pair, ascending by (stacks, on_top).
std::vector<AtlasRow> enumerate_tricks(std::int64_t cards);

// Rows for every deck size 1..max_cards, each solvable row cross-checked
// against the physical simulator: sweeping all starts at k_paper must give
// exactly {final_position}. A mismatch throws with the offending triple.
std::vector<AtlasRow> atlas_range(std::int64_t max_cards);

// CSV schema: header C,n,j,solvable,reason,l,k_paper,k_star; absent values
// are empty fields; LF line endings; ASCII only.
void write_csv(std::ostream& out, std::span<const AtlasRow> rows);

}  // namespace stacktrick
