#pragma once

#include <cstdint>
#include <optional>

#include "stacktrick/exact.hpp"

namespace stacktrick {

// A deal-into-stacks trick before an iteration count is chosen: `cards`
// are dealt into `stacks` equal piles, and `on_top` of the other piles go
// above the chosen pile when the deck is gathered.
struct TrickSpec {
    std::int64_t cards = 1;    // C
    std::int64_t stacks = 1;   // n, divides cards
    std::int64_t on_top = 0;   // j, in [0, stacks-1]
};

// Validation boundary: every constructor path into TrickSpec goes through
// here. Each violated constraint gets its own message.
TrickSpec validate_spec(std::int64_t cards, std::int64_t stacks, std::int64_t on_top);

// Exact quantities derived from a spec. `offset` is cards_per_stack *
// on_top / (stacks - 1) and exists only for stacks > 1; `threshold` is the
// convergence threshold for interior on_top and exists only when that rule
// yields a solvable trick (its formula divides by the fractional part of
// the offset).
struct DerivedParams {
    std::int64_t cards_per_stack = 0;                 // m = C / n
    std::optional<exact::Rational> offset;            // b
    std::optional<std::int64_t> offset_floor;
    std::optional<exact::Rational> offset_frac;
    std::optional<exact::Rational> threshold;         // t
};

DerivedParams derive_params(const TrickSpec& spec);

// Where the tracked card sits after `iteration` deals-and-gathers.
// stack_row is absent exactly at iteration 0: a row only exists once the
// deck has been dealt at least once.
struct TrickState {
    std::int64_t deck_id = 1;                  // 1-based from the top
    std::optional<std::int64_t> stack_row;     // 1-based within its pile
    std::int64_t iteration = 0;
};

// Row the card lands in when a deck position is dealt into `stacks` piles:
// ceil(deck_id_prev / stacks).
std::int64_t stack_id(std::int64_t deck_id_prev, std::int64_t stacks);

// Deck position after gathering with `on_top` piles above the chosen one:
// cards_per_stack * on_top + stack_row.
std::int64_t gather_deck_id(std::int64_t stack_row, std::int64_t cards_per_stack,
                            std::int64_t on_top);

// One deal-and-gather applied to a state.
TrickState advance(const TrickSpec& spec, const TrickState& state);

// Deck position after `iterations` deals-and-gathers from `start`.
// iterations == 0 returns start.
std::int64_t iterate_deck_id(const TrickSpec& spec, std::int64_t start,
                             std::int64_t iterations);

// Same position computed without iterating, for iterations >= 1:
//   cards_per_stack*on_top + ceil((cards_per_stack*on_top*stacks*g + start) / stacks^k)
// where g = (stacks^(k-1) - 1)/(stacks - 1) is an exact geometric sum; for
// a single stack the position never moves.
std::int64_t closed_form_deck_id(const TrickSpec& spec, std::int64_t start,
                                 std::int64_t iterations);

}  // namespace stacktrick
