#pragma once

#include <cstdint>
#include <span>

namespace stacktrick::sweep {

// Vectorized inner loop for start-position sweeps: one deal-and-gather
// applied to a whole array of deck positions at once,
//
//     p  <-  cards_above + ceil(p / stacks)
//
// with cards_above = cards_per_stack * on_top. The scalar kernel is the
// reference; the AVX2 kernel must be bit-identical on the accepted range
// and is selected at runtime.

enum class Impl { Auto, Scalar, Avx2 };

bool avx2_supported();

// What Impl::Auto resolves to on this machine: "avx2" or "scalar".
const char* resolved_name();

// Largest deck position (and stack count) the kernels accept. The
// shift-multiply division below is proven exact only on this range.
inline constexpr std::uint32_t kMaxPosition = 1u << 30;

// Constants for divisionless floor division:
//     floor(x / stacks) == (x * multiplier) >> shift
// exact for all 0 <= x <= kMaxPosition.
//
// With f = floor(log2(stacks)), shift = 31 + f and multiplier =
// ceil(2^shift / stacks), write multiplier*stacks = 2^shift + e with
// 0 <= e < stacks. Then x*multiplier/2^shift = x/stacks + x*e/(stacks*2^shift),
// and x*e < 2^30 * stacks <= 2^shift keeps the error term below 1/stacks,
// so the floor is unchanged.
struct DivisorConstants {
    std::uint64_t multiplier;
    std::uint32_t shift;
};

DivisorConstants divisor_constants(std::uint32_t stacks);

// Preconditions: 1 <= positions[i], stacks <= kMaxPosition and every
// result stays <= kMaxPosition (callers pass positions within a validated
// deck, where this holds by construction).
void advance_positions(std::span<std::uint32_t> positions, std::uint32_t stacks,
                       std::uint32_t cards_above, Impl impl = Impl::Auto);

namespace detail {
void advance_scalar(std::span<std::uint32_t> positions, std::uint32_t stacks,
                    std::uint32_t cards_above);
void advance_avx2(std::span<std::uint32_t> positions, std::uint32_t stacks,
                  std::uint32_t cards_above);
}  // namespace detail

}  // namespace stacktrick::sweep
