#include "stacktrick/sweep.hpp"

#include <bit>
#include <stdexcept>

namespace stacktrick::sweep {

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const char* resolved_name() { return avx2_supported() ? "avx2" : "scalar"; }

DivisorConstants divisor_constants(std::uint32_t stacks) {
    if (stacks == 0 || stacks > kMaxPosition)
        throw std::invalid_argument("divisor_constants: stack count out of kernel range");
    const std::uint32_t log2_floor = 31u - static_cast<std::uint32_t>(std::countl_zero(stacks));
    const std::uint32_t shift = 31u + log2_floor;
    const std::uint64_t multiplier = ((std::uint64_t{1} << shift) + stacks - 1) / stacks;
    return DivisorConstants{multiplier, shift};
}

namespace detail {

void advance_scalar(std::span<std::uint32_t> positions, std::uint32_t stacks,
                    std::uint32_t cards_above) {
    // ceil(p / stacks) == (p - 1) / stacks + 1 for p >= 1.
    for (std::uint32_t& p : positions) p = cards_above + (p - 1) / stacks + 1;
}

}  // namespace detail

void advance_positions(std::span<std::uint32_t> positions, std::uint32_t stacks,
                       std::uint32_t cards_above, Impl impl) {
    if (stacks == 0 || stacks > kMaxPosition)
        throw std::invalid_argument("advance_positions: stack count out of kernel range");
    switch (impl) {
        case Impl::Scalar:
            detail::advance_scalar(positions, stacks, cards_above);
            return;
        case Impl::Avx2:
            detail::advance_avx2(positions, stacks, cards_above);
            return;
        case Impl::Auto:
            if (avx2_supported())
                detail::advance_avx2(positions, stacks, cards_above);
            else
                detail::advance_scalar(positions, stacks, cards_above);
            return;
    }
}

}  // namespace stacktrick::sweep
