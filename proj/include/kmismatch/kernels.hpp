#pragma once

// Mismatch-scan kernels. Every variant computes the same function: the
// offset of the first position where `a` and `b` differ, or `len` if the
// two ranges are equal. The scalar kernel is the reference; the others are
// equivalence-tested against it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace kmismatch::kernels {

enum class Isa {
    scalar,
    swar,
    sse2,
    avx2,
    neon,
};

using FirstMismatchFn = std::size_t (*)(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) noexcept;

std::size_t first_mismatch_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) noexcept;
std::size_t first_mismatch_swar(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) noexcept;

// Null when the variant was not compiled for this target.
FirstMismatchFn sse2_kernel() noexcept;
FirstMismatchFn avx2_kernel() noexcept;
FirstMismatchFn neon_kernel() noexcept;

std::string_view isa_name(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;

/// True if the kernel was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;
std::vector<Isa> available_isas();

/// Kernel for `isa`; null if unavailable.
FirstMismatchFn kernel_for(Isa isa) noexcept;

/// Best available ISA, chosen once from CPU features.
Isa detected_isa() noexcept;
Isa active_isa() noexcept;

/// Overrides the dispatched kernel process-wide. Throws std::invalid_argument
/// if `isa` is unavailable on this machine.
void force_isa(Isa isa);
void reset_isa() noexcept;

FirstMismatchFn active_kernel() noexcept;

inline std::size_t first_mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) noexcept
{
    return active_kernel()(a, b, len);
}

} // namespace kmismatch::kernels
