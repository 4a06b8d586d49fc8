#include "stacktrick/atlas.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "stacktrick/simulator.hpp"

namespace stacktrick {

using exact::Int;

namespace {

AtlasRow row_from_outcome(const SolveOutcome& outcome) {
    return AtlasRow{outcome.spec.cards,    outcome.spec.stacks, outcome.spec.on_top,
                    outcome.verdict,       outcome.reason,      outcome.final_position,
                    outcome.k_paper,       outcome.k_star};
}

}  // namespace

CountResult count_solvable(std::int64_t cards) {
    if (cards < 1) throw std::invalid_argument("count_solvable: deck size must be positive");
    CountResult result;
    result.cards = cards;

    if (cards == 1) {
        result.formula_count = 1;
    } else {
        Int total = 0;
        for (const Int n : exact::divisors_gt1(cards)) {
            const Int per_stack = cards / n;
            total += n + 1 - exact::gcd(per_stack, n - 1);
        }
        result.formula_count = static_cast<std::int64_t>(total);
    }

    for (const AtlasRow& row : enumerate_tricks(cards))
        if (row.verdict == Verdict::Solvable) ++result.enumerated_count;
    return result;
}

std::vector<AtlasRow> enumerate_tricks(std::int64_t cards) {
    if (cards < 1) throw std::invalid_argument("enumerate_tricks: deck size must be positive");
    std::vector<AtlasRow> rows;
    for (std::int64_t stacks = 1; stacks <= cards; ++stacks) {
        if (cards % stacks != 0) continue;
        for (std::int64_t on_top = 0; on_top < stacks; ++on_top)
            rows.push_back(row_from_outcome(solve(validate_spec(cards, stacks, on_top))));
    }
    return rows;
}

std::vector<AtlasRow> atlas_range(std::int64_t max_cards) {
    if (max_cards < 1) throw std::invalid_argument("atlas_range: deck size must be positive");
    std::vector<AtlasRow> rows;
    for (std::int64_t cards = 1; cards <= max_cards; ++cards) {
        for (AtlasRow& row : enumerate_tricks(cards)) {
            if (row.verdict == Verdict::Solvable) {
                const TrickSpec spec{row.cards, row.stacks, row.on_top};
                const auto finals = sweep_all_starts(spec, *row.k_paper);
                if (finals.size() != 1 || *finals.begin() != *row.final_position)
                    throw std::runtime_error(
                        "atlas cross-check failed for (" + std::to_string(row.cards) + ", " +
                        std::to_string(row.stacks) + ", " + std::to_string(row.on_top) +
                        "): simulator disagrees with the computed final position");
            }
            rows.push_back(row);
        }
    }
    return rows;
}

void write_csv(std::ostream& out, std::span<const AtlasRow> rows) {
    auto field = [](const std::optional<std::int64_t>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    out << "C,n,j,solvable,reason,l,k_paper,k_star\n";
    for (const AtlasRow& row : rows) {
        out << row.cards << ',' << row.stacks << ',' << row.on_top << ','
            << (row.verdict == Verdict::Solvable ? "true" : "false") << ','
            << to_string(row.reason) << ',' << field(row.final_position) << ','
            << field(row.k_paper) << ',' << field(row.k_star) << '\n';
    }
}

}  // namespace stacktrick
