#include "kmismatch/kernels.hpp"

#include <bit>
#include <cstring>

namespace kmismatch::kernels {

std::size_t first_mismatch_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) noexcept
{
    std::size_t i = 0;
    while (i < len && a[i] == b[i])
        ++i;
    return i;
}

std::size_t first_mismatch_swar(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) noexcept
{
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        std::uint64_t x, y;
        std::memcpy(&x, a + i, 8);
        std::memcpy(&y, b + i, 8);
        if (const std::uint64_t diff = x ^ y) {
            if constexpr (std::endian::native == std::endian::little)
                return i + static_cast<std::size_t>(std::countr_zero(diff)) / 8;
            else
                return i + static_cast<std::size_t>(std::countl_zero(diff)) / 8;
        }
    }
    return i + first_mismatch_scalar(a + i, b + i, len - i);
}

} // namespace kmismatch::kernels
