#include "stacktrick/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "stacktrick/sweep.hpp"

namespace stacktrick {

using exact::Int;

const char* to_string(Verdict verdict) {
    return verdict == Verdict::Solvable ? "solvable" : "not_solvable";
}

const char* to_string(Reason reason) {
    switch (reason) {
        case Reason::Step3_SingleCard: return "Step3_SingleCard";
        case Reason::Step4_OneStack: return "Step4_OneStack";
        case Reason::Step5_JZero: return "Step5_JZero";
        case Reason::Step6_JMax: return "Step6_JMax";
        case Reason::Step7_Divisibility_Pass: return "Step7_Divisibility_Pass";
        case Reason::Step7_Divisibility_Fail: return "Step7_Divisibility_Fail";
    }
    return "unknown";
}

std::int64_t k_paper_bound(const TrickSpec& spec, const DerivedParams& params) {
    if (spec.cards <= 1 || spec.stacks <= 1)
        throw std::logic_error("k_paper_bound: needs a multi-card, multi-stack spec");

    const Int stacks = spec.stacks;
    Int power = 1;
    if (spec.on_top == 0 || spec.on_top == spec.stacks - 1) {
        // stacks^k >= cards (non-strict) vs. stacks^k > cards - 1: the same
        // set of k for integers, but each rule keeps its own comparison.
        const bool strict_on_pred = spec.on_top != 0;
        for (std::int64_t k = 1;; ++k) {
            power = exact::checked_mul(power, stacks);
            if (strict_on_pred ? power > Int(spec.cards) - 1 : power >= Int(spec.cards))
                return k;
        }
    }

    if (!params.threshold.has_value())
        throw std::logic_error("k_paper_bound: spec is not solvable");
    const Int q = spec.stacks - 1;
    const Int p = exact::checked_mul(Int(params.cards_per_stack), spec.on_top);
    const Int r = p % q;
    const Int first_rhs = exact::checked_sub(exact::checked_mul(Int(spec.cards), q),
                                             exact::checked_mul(p, stacks));
    const Int second_rhs = exact::checked_sub(exact::checked_mul(p, stacks), q);
    for (std::int64_t k = 1;; ++k) {
        power = exact::checked_mul(power, stacks);
        if (exact::checked_mul(power, q - r) > first_rhs &&
            exact::checked_mul(power, r) > second_rhs)
            return k;
    }
}

SolveOutcome classify(const TrickSpec& spec) {
    SolveOutcome out;
    out.spec = spec;
    out.params = derive_params(spec);

    if (spec.cards == 1) {
        out.verdict = Verdict::Solvable;
        out.reason = Reason::Step3_SingleCard;
        out.final_position = 1;
        out.k_paper = 1;
        out.k_star = 1;
        return out;
    }
    if (spec.stacks == 1) {
        out.verdict = Verdict::NotSolvable;
        out.reason = Reason::Step4_OneStack;
        return out;
    }
    if (spec.on_top == 0) {
        out.verdict = Verdict::Solvable;
        out.reason = Reason::Step5_JZero;
        out.final_position = 1;
        out.k_paper = k_paper_bound(spec, out.params);
        return out;
    }
    if (spec.on_top == spec.stacks - 1) {
        out.verdict = Verdict::Solvable;
        out.reason = Reason::Step6_JMax;
        out.final_position = spec.cards;
        out.k_paper = k_paper_bound(spec, out.params);
        return out;
    }
    if (out.params.threshold.has_value()) {
        out.verdict = Verdict::Solvable;
        out.reason = Reason::Step7_Divisibility_Pass;
        out.final_position = out.params.cards_per_stack * spec.on_top +
                             *out.params.offset_floor + 1;
        out.k_paper = k_paper_bound(spec, out.params);
        return out;
    }
    out.verdict = Verdict::NotSolvable;
    out.reason = Reason::Step7_Divisibility_Fail;
    return out;
}

namespace {

template <typename T>
bool all_equal(const std::vector<T>& values) {
    return std::adjacent_find(values.begin(), values.end(),
                              std::not_equal_to<>()) == values.end();
}

}  // namespace

std::optional<std::int64_t> k_star_empirical(const TrickSpec& spec, std::int64_t k_cap) {
    if (k_cap < 1) throw std::invalid_argument("k_star_empirical: cap must be at least 1");

    const std::int64_t per_stack = spec.cards / spec.stacks;
    const std::int64_t above = per_stack * spec.on_top;

    if (spec.cards <= sweep::kMaxPosition) {
        std::vector<std::uint32_t> positions(static_cast<std::size_t>(spec.cards));
        std::iota(positions.begin(), positions.end(), 1u);
        for (std::int64_t k = 1; k <= k_cap; ++k) {
            sweep::advance_positions(positions, static_cast<std::uint32_t>(spec.stacks),
                                     static_cast<std::uint32_t>(above));
            if (all_equal(positions)) return k;
        }
        return std::nullopt;
    }

    // Decks beyond the kernel's range take the plain 64-bit path.
    std::vector<std::int64_t> positions(static_cast<std::size_t>(spec.cards));
    std::iota(positions.begin(), positions.end(), std::int64_t{1});
    for (std::int64_t k = 1; k <= k_cap; ++k) {
        for (std::int64_t& p : positions) p = above + (p - 1) / spec.stacks + 1;
        if (all_equal(positions)) return k;
    }
    return std::nullopt;
}

SolveOutcome solve(const TrickSpec& spec) {
    SolveOutcome out = classify(spec);
    if (out.solvable() && !out.k_star.has_value()) {
        out.k_star = k_star_empirical(spec, *out.k_paper);
        if (!out.k_star.has_value())
            throw std::logic_error("solve: no convergence within the analytic bound for (" +
                                   std::to_string(spec.cards) + ", " +
                                   std::to_string(spec.stacks) + ", " +
                                   std::to_string(spec.on_top) + ")");
    }
    return out;
}

Certification certify_at(const TrickSpec& spec, std::int64_t iterations) {
    if (iterations < 1)
        throw std::invalid_argument("certify_at: iteration count must be at least 1");
    Certification cert;
    cert.iterations = iterations;
    for (std::int64_t start = 1; start <= spec.cards; ++start)
        cert.image.insert(closed_form_deck_id(spec, start, iterations));
    cert.certified = cert.image.size() == 1;
    return cert;
}

}  // namespace stacktrick
