#include "stacktrick/simulator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stacktrick {

std::int64_t DeckState::tracked_position() const {
    const auto it = std::find(cards.begin(), cards.end(), tracked_card);
    if (it == cards.end())
        throw std::logic_error("tracked card missing from deck");
    return static_cast<std::int64_t>(it - cards.begin()) + 1;
}

DeckState make_initial_deck(std::int64_t cards, std::int64_t tracked_start) {
    if (cards < 1) throw std::invalid_argument("deck size must be positive");
    if (tracked_start < 1 || tracked_start > cards)
        throw std::invalid_argument("start position out of range");
    DeckState deck;
    deck.cards.resize(static_cast<std::size_t>(cards));
    std::iota(deck.cards.begin(), deck.cards.end(), std::int64_t{1});
    deck.tracked_card = tracked_start;
    deck.iteration = 0;
    return deck;
}

std::int64_t StackLayout::stack_of(std::int64_t card) const {
    for (std::size_t s = 0; s < stacks.size(); ++s)
        if (std::find(stacks[s].begin(), stacks[s].end(), card) != stacks[s].end())
            return static_cast<std::int64_t>(s) + 1;
    throw std::logic_error("card missing from layout");
}

std::int64_t StackLayout::row_of(std::int64_t card) const {
    for (const auto& stack : stacks) {
        const auto it = std::find(stack.begin(), stack.end(), card);
        if (it != stack.end()) return static_cast<std::int64_t>(it - stack.begin()) + 1;
    }
    throw std::logic_error("card missing from layout");
}

StackLayout deal(const DeckState& deck, std::int64_t stacks) {
    const auto total = static_cast<std::int64_t>(deck.cards.size());
    if (stacks < 1) throw std::invalid_argument("deal: stack count must be positive");
    if (total % stacks != 0)
        throw std::invalid_argument("deal: stack count must divide the deck size");
    StackLayout layout;
    layout.tracked_card = deck.tracked_card;
    layout.iteration = deck.iteration;
    layout.stacks.assign(static_cast<std::size_t>(stacks), {});
    const std::int64_t per_stack = total / stacks;
    for (auto& stack : layout.stacks) stack.reserve(static_cast<std::size_t>(per_stack));
    for (std::int64_t p = 0; p < total; ++p)
        layout.stacks[static_cast<std::size_t>(p % stacks)].push_back(
            deck.cards[static_cast<std::size_t>(p)]);
    return layout;
}

DeckState gather(const StackLayout& layout, std::int64_t chosen_stack,
                 std::span<const std::int64_t> stacks_above) {
    const std::int64_t count = layout.stack_count();
    if (chosen_stack < 1 || chosen_stack > count)
        throw std::invalid_argument("gather: chosen stack out of range");
    if (static_cast<std::int64_t>(stacks_above.size()) > count - 1)
        throw std::invalid_argument("gather: too many stacks placed above");

    std::vector<bool> used(static_cast<std::size_t>(count) + 1, false);
    used[static_cast<std::size_t>(chosen_stack)] = true;
    for (const std::int64_t s : stacks_above) {
        if (s < 1 || s > count || used[static_cast<std::size_t>(s)])
            throw std::invalid_argument("gather: invalid stack placement");
        used[static_cast<std::size_t>(s)] = true;
    }

    DeckState deck;
    deck.tracked_card = layout.tracked_card;
    deck.iteration = layout.iteration + 1;
    auto append = [&](std::int64_t stack) {
        const auto& pile = layout.stacks[static_cast<std::size_t>(stack - 1)];
        deck.cards.insert(deck.cards.end(), pile.begin(), pile.end());
    };
    for (const std::int64_t s : stacks_above) append(s);
    append(chosen_stack);
    for (std::int64_t s = 1; s <= count; ++s)
        if (!used[static_cast<std::size_t>(s)]) append(s);
    return deck;
}

DeckState gather(const StackLayout& layout, std::int64_t chosen_stack,
                 std::int64_t on_top) {
    const std::int64_t count = layout.stack_count();
    if (chosen_stack < 1 || chosen_stack > count)
        throw std::invalid_argument("gather: chosen stack out of range");
    if (on_top < 0 || on_top > count - 1)
        throw std::invalid_argument("gather: stacks on top out of range");
    std::vector<std::int64_t> above;
    above.reserve(static_cast<std::size_t>(on_top));
    for (std::int64_t s = 1; s <= count && static_cast<std::int64_t>(above.size()) < on_top; ++s)
        if (s != chosen_stack) above.push_back(s);
    return gather(layout, chosen_stack, above);
}

std::int64_t TrickTrace::final_position() const {
    return iterations.empty() ? initial.tracked_position()
                              : iterations.back().deck.tracked_position();
}

TrickTrace run_trick(const TrickSpec& spec, std::int64_t start, std::int64_t iterations) {
    if (iterations < 0)
        throw std::invalid_argument("run_trick: iteration count must be non-negative");
    TrickTrace trace;
    trace.initial = make_initial_deck(spec.cards, start);
    DeckState deck = trace.initial;
    for (std::int64_t i = 0; i < iterations; ++i) {
        const StackLayout layout = deal(deck, spec.stacks);
        const std::int64_t chosen = layout.stack_of(deck.tracked_card);
        const std::int64_t row = layout.row_of(deck.tracked_card);
        deck = gather(layout, chosen, spec.on_top);
        trace.iterations.push_back(IterationRecord{chosen, row, deck});
    }
    return trace;
}

std::set<std::int64_t> sweep_all_starts(const TrickSpec& spec, std::int64_t iterations) {
    std::set<std::int64_t> finals;
    for (std::int64_t start = 1; start <= spec.cards; ++start)
        finals.insert(run_trick(spec, start, iterations).final_position());
    return finals;
}

std::string format_deck_line(const DeckState& deck) {
    std::string line;
    for (std::size_t i = 0; i < deck.cards.size(); ++i) {
        if (i != 0) line.push_back(',');
        line += std::to_string(deck.cards[i]);
    }
    return line;
}

}  // namespace stacktrick
