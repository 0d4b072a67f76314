#include "kmismatch/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#define KMISMATCH_NEON 1
#include <arm_neon.h>
#endif

#include <bit>

namespace kmismatch::kernels {

#ifdef KMISMATCH_NEON

namespace {

std::size_t first_mismatch_neon(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) noexcept
{
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) {
        const uint8x16_t ne = vmvnq_u8(vceqq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
        // Narrow each byte lane to a nibble so the mask fits in 64 bits.
        const uint8x8_t nibbles = vshrn_n_u16(vreinterpretq_u16_u8(ne), 4);
        const std::uint64_t mask = vget_lane_u64(vreinterpret_u64_u8(nibbles), 0);
        if (mask != 0)
            return i + static_cast<std::size_t>(std::countr_zero(mask)) / 4;
    }
    return i + first_mismatch_swar(a + i, b + i, len - i);
}

} // namespace

FirstMismatchFn neon_kernel() noexcept { return &first_mismatch_neon; }

#else

FirstMismatchFn neon_kernel() noexcept { return nullptr; }

#endif

} // namespace kmismatch::kernels
