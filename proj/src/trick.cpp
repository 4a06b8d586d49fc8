#include "stacktrick/trick.hpp"

#include <stdexcept>

namespace stacktrick {

using exact::Int;
using exact::Rational;

TrickSpec validate_spec(std::int64_t cards, std::int64_t stacks, std::int64_t on_top) {
    if (cards < 1)
        throw std::invalid_argument("card count must be at least 1");
    if (stacks < 1)
        throw std::invalid_argument("stack count must be at least 1");
    if (stacks > cards)
        throw std::invalid_argument("stack count must not exceed the card count");
    if (cards % stacks != 0)
        throw std::invalid_argument("stack count must divide the card count");
    if (on_top < 0)
        throw std::invalid_argument("stacks placed on top must be non-negative");
    if (on_top >= stacks)
        throw std::invalid_argument("stacks placed on top must be less than the stack count");
    return TrickSpec{cards, stacks, on_top};
}

DerivedParams derive_params(const TrickSpec& spec) {
    DerivedParams params;
    params.cards_per_stack = spec.cards / spec.stacks;
    if (spec.stacks > 1) {
        const Int per_stack = params.cards_per_stack;
        const Int above = exact::checked_mul(per_stack, spec.on_top);
        const Rational offset(above, spec.stacks - 1);
        const auto parts = exact::rational_parts(offset);
        params.offset = offset;
        params.offset_floor = static_cast<std::int64_t>(parts.floor);
        params.offset_frac = parts.frac;

        // threshold = max((C - b*n)/(1 - {b}), (b*n - 1)/{b}), defined only
        // when {b} != 0, i.e. when (stacks - 1) does not divide
        // cards_per_stack * on_top and the interior rule fires.
        if (spec.on_top > 0 && spec.on_top < spec.stacks - 1 &&
            above % (spec.stacks - 1) != 0) {
            const Rational total(spec.cards, 1);
            const Rational scaled = offset * Rational(spec.stacks, 1);
            const Rational one(1, 1);
            const Rational first = (total - scaled) / (one - parts.frac);
            const Rational second = (scaled - one) / parts.frac;
            params.threshold = first < second ? second : first;
        }
    }
    return params;
}

std::int64_t stack_id(std::int64_t deck_id_prev, std::int64_t stacks) {
    if (deck_id_prev < 1)
        throw std::invalid_argument("stack_id: deck position must be positive");
    if (stacks < 1)
        throw std::invalid_argument("stack_id: stack count must be positive");
    return static_cast<std::int64_t>(exact::ceil_div(deck_id_prev, stacks));
}

std::int64_t gather_deck_id(std::int64_t stack_row, std::int64_t cards_per_stack,
                            std::int64_t on_top) {
    if (cards_per_stack < 1)
        throw std::invalid_argument("gather_deck_id: stack size must be positive");
    if (stack_row < 1 || stack_row > cards_per_stack)
        throw std::invalid_argument("gather_deck_id: row out of range for the stack size");
    if (on_top < 0)
        throw std::invalid_argument("gather_deck_id: stacks on top must be non-negative");
    return cards_per_stack * on_top + stack_row;
}

TrickState advance(const TrickSpec& spec, const TrickState& state) {
    const std::int64_t row = stack_id(state.deck_id, spec.stacks);
    const std::int64_t per_stack = spec.cards / spec.stacks;
    return TrickState{gather_deck_id(row, per_stack, spec.on_top), row,
                      state.iteration + 1};
}

std::int64_t iterate_deck_id(const TrickSpec& spec, std::int64_t start,
                             std::int64_t iterations) {
    if (start < 1 || start > spec.cards)
        throw std::invalid_argument("start position out of range");
    if (iterations < 0)
        throw std::invalid_argument("iteration count must be non-negative");
    TrickState state{start, std::nullopt, 0};
    for (std::int64_t i = 0; i < iterations; ++i) state = advance(spec, state);
    return state.deck_id;
}

std::int64_t closed_form_deck_id(const TrickSpec& spec, std::int64_t start,
                                 std::int64_t iterations) {
    if (start < 1 || start > spec.cards)
        throw std::invalid_argument("start position out of range");
    if (iterations < 1)
        throw std::invalid_argument("closed form requires at least one iteration");
    if (spec.stacks == 1) return start;

    const Int stacks = spec.stacks;
    const Int above = exact::checked_mul(Int(spec.cards / spec.stacks), spec.on_top);
    // (stacks^(k-1) - 1)/(stacks - 1) is an exact integer; dividing before
    // multiplying keeps the intermediate small.
    const Int power_prev = exact::checked_pow(stacks, iterations - 1);
    const Int geometric = (power_prev - 1) / (stacks - 1);
    const Int scaled = exact::checked_mul(exact::checked_mul(above, stacks), geometric);
    const Int numerator = exact::checked_add(scaled, start);
    const Int power = exact::checked_mul(power_prev, stacks);
    return static_cast<std::int64_t>(above + exact::ceil_div(numerator, power));
}

}  // namespace stacktrick
