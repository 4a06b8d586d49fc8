// AVX2 variant of the position-sweep kernel. Built with -mavx2 in its own
// translation unit; the dispatcher only routes here after a runtime CPUID
// check.

#include "stacktrick/sweep.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace stacktrick::sweep::detail {

void advance_avx2(std::span<std::uint32_t> positions, std::uint32_t stacks,
                  std::uint32_t cards_above) {
    const auto [multiplier, shift] = divisor_constants(stacks);
    const __m256i mul_v = _mm256_set1_epi64x(static_cast<long long>(multiplier));
    const __m128i shift_v = _mm_cvtsi32_si128(static_cast<int>(shift));
    const __m256i one_v = _mm256_set1_epi32(1);
    const __m256i out_base_v = _mm256_set1_epi32(static_cast<int>(cards_above + 1));

    std::size_t i = 0;
    std::uint32_t* data = positions.data();
    for (; i + 8 <= positions.size(); i += 8) {
        const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
        const __m256i y = _mm256_sub_epi32(p, one_v);
        // 32x32->64 multiplies on the even and odd lanes; quotients fit in
        // 32 bits (y <= 2^30), so the shifted products recombine with OR.
        const __m256i prod_even = _mm256_mul_epu32(y, mul_v);
        const __m256i prod_odd = _mm256_mul_epu32(_mm256_srli_epi64(y, 32), mul_v);
        const __m256i q_even = _mm256_srl_epi64(prod_even, shift_v);
        const __m256i q_odd = _mm256_srl_epi64(prod_odd, shift_v);
        const __m256i q = _mm256_or_si256(q_even, _mm256_slli_epi64(q_odd, 32));
        const __m256i out = _mm256_add_epi32(q, out_base_v);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(data + i), out);
    }
    for (; i < positions.size(); ++i)
        data[i] = cards_above + (data[i] - 1) / stacks + 1;
}

}  // namespace stacktrick::sweep::detail

#else

#include <stdexcept>

namespace stacktrick::sweep::detail {

void advance_avx2(std::span<std::uint32_t>, std::uint32_t, std::uint32_t) {
    throw std::logic_error("AVX2 kernel not built for this architecture");
}

}  // namespace stacktrick::sweep::detail

#endif
