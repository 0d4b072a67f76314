#include "kmismatch/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define KMISMATCH_X86 1
#include <immintrin.h>
#endif

#include <bit>

namespace kmismatch::kernels {

#ifdef KMISMATCH_X86

namespace {

__attribute__((target("sse2"))) std::size_t first_mismatch_sse2(const std::uint8_t* a, const std::uint8_t* b,
                                                                 std::size_t len) noexcept
{
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) {
        const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i));
        const __m128i y = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i));
        const unsigned eq = static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(x, y)));
        if (eq != 0xFFFFu)
            return i + static_cast<std::size_t>(std::countr_zero(~eq));
    }
    return i + first_mismatch_swar(a + i, b + i, len - i);
}

__attribute__((target("avx2"))) std::size_t first_mismatch_avx2(const std::uint8_t* a, const std::uint8_t* b,
                                                                 std::size_t len) noexcept
{
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(x, y)));
        if (eq != 0xFFFFFFFFu)
            return i + static_cast<std::size_t>(std::countr_zero(~eq));
    }
    if (i + 16 <= len) {
        const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i));
        const __m128i y = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i));
        const unsigned eq = static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(x, y)));
        if (eq != 0xFFFFu)
            return i + static_cast<std::size_t>(std::countr_zero(~eq));
        i += 16;
    }
    return i + first_mismatch_swar(a + i, b + i, len - i);
}

} // namespace

FirstMismatchFn sse2_kernel() noexcept { return &first_mismatch_sse2; }
FirstMismatchFn avx2_kernel() noexcept { return &first_mismatch_avx2; }

#else

FirstMismatchFn sse2_kernel() noexcept { return nullptr; }
FirstMismatchFn avx2_kernel() noexcept { return nullptr; }

#endif

} // namespace kmismatch::kernels
