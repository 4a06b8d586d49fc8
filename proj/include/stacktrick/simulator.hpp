#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "stacktrick/trick.hpp"

namespace stacktrick {

// Full deck as a permutation of card identities; an identity is the card's
// 1-based position in the initial deck, so the starting deck is 1..C in
// order and the tracked card's identity equals its start position.
struct DeckState {
    std::vector<std::int64_t> cards;  // top to bottom
    std::int64_t tracked_card = 1;    // identity of the audience card
    std::int64_t iteration = 0;

    // 1-based position of the tracked card from the top.
    std::int64_t tracked_position() const;
};

DeckState make_initial_deck(std::int64_t cards, std::int64_t tracked_start);

// Deck dealt into equal piles, one card at a time left to right: deck
// position p lands in stack ((p-1) mod n) + 1, row floor((p-1)/n) + 1, so
// the top of the deck becomes row 1.
struct StackLayout {
    std::vector<std::vector<std::int64_t>> stacks;  // [stack][row], 0-based storage
    std::int64_t tracked_card = 1;
    std::int64_t iteration = 0;

    std::int64_t stack_count() const { return static_cast<std::int64_t>(stacks.size()); }
    std::int64_t stack_of(std::int64_t card) const;  // 1-based
    std::int64_t row_of(std::int64_t card) const;    // 1-based
};

StackLayout deal(const DeckState& deck, std::int64_t stacks);

// Rebuilds the deck with exactly `on_top` non-chosen piles above the
// chosen one, each pile entering row-1-first. Default placement: non-chosen
// piles in ascending index order, the first `on_top` of them above. The
// placement order cannot move the tracked card; the explicit overload
// exists so tests can prove that.
DeckState gather(const StackLayout& layout, std::int64_t chosen_stack,
                 std::int64_t on_top);
DeckState gather(const StackLayout& layout, std::int64_t chosen_stack,
                 std::span<const std::int64_t> stacks_above);

struct IterationRecord {
    std::int64_t chosen_stack = 0;  // pile holding the tracked card
    std::int64_t stack_row = 0;     // its row in that pile
    DeckState deck;                 // deck after gathering
};

struct TrickTrace {
    DeckState initial;
    std::vector<IterationRecord> iterations;

    std::int64_t final_position() const;
};

// Physically executes the trick from the identity deck with the tracked
// card at `start`, choosing the truthful pile each round.
TrickTrace run_trick(const TrickSpec& spec, std::int64_t start, std::int64_t iterations);

// Final tracked positions over every possible start; a singleton set
// certifies the trick at this iteration count.
std::set<std::int64_t> sweep_all_starts(const TrickSpec& spec, std::int64_t iterations);

// One deck per line, comma-separated identities.
std::string format_deck_line(const DeckState& deck);

}  // namespace stacktrick
