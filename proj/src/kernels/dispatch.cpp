#include "kmismatch/kernels.hpp"

#include <array>
#include <atomic>
#include <stdexcept>
#include <string>

namespace kmismatch::kernels {

namespace {

constexpr std::array kAllIsas{Isa::scalar, Isa::swar, Isa::sse2, Isa::avx2, Isa::neon};

bool cpu_supports(Isa isa) noexcept
{
    switch (isa) {
    case Isa::scalar:
    case Isa::swar:
        return true;
#if defined(__x86_64__) || defined(__i386__)
    case Isa::sse2:
        return __builtin_cpu_supports("sse2");
    case Isa::avx2:
        return __builtin_cpu_supports("avx2");
#else
    case Isa::sse2:
    case Isa::avx2:
        return false;
#endif
    case Isa::neon:
        // Advanced SIMD is mandatory on AArch64.
        return neon_kernel() != nullptr;
    }
    return false;
}

Isa detect() noexcept
{
    for (Isa isa : {Isa::avx2, Isa::neon, Isa::sse2})
        if (isa_available(isa))
            return isa;
    return Isa::swar;
}

std::atomic<int> g_forced{-1};
std::atomic<FirstMismatchFn> g_kernel{nullptr};

} // namespace

std::string_view isa_name(Isa isa) noexcept
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::swar: return "swar";
    case Isa::sse2: return "sse2";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) noexcept
{
    for (Isa isa : kAllIsas)
        if (isa_name(isa) == name)
            return isa;
    return std::nullopt;
}

FirstMismatchFn kernel_for(Isa isa) noexcept
{
    FirstMismatchFn fn = nullptr;
    switch (isa) {
    case Isa::scalar: fn = &first_mismatch_scalar; break;
    case Isa::swar: fn = &first_mismatch_swar; break;
    case Isa::sse2: fn = sse2_kernel(); break;
    case Isa::avx2: fn = avx2_kernel(); break;
    case Isa::neon: fn = neon_kernel(); break;
    }
    if (fn == nullptr || !cpu_supports(isa))
        return nullptr;
    return fn;
}

bool isa_available(Isa isa) noexcept { return kernel_for(isa) != nullptr; }

std::vector<Isa> available_isas()
{
    std::vector<Isa> out;
    for (Isa isa : kAllIsas)
        if (isa_available(isa))
            out.push_back(isa);
    return out;
}

Isa detected_isa() noexcept
{
    static const Isa isa = detect();
    return isa;
}

Isa active_isa() noexcept
{
    const int forced = g_forced.load(std::memory_order_relaxed);
    return forced < 0 ? detected_isa() : static_cast<Isa>(forced);
}

void force_isa(Isa isa)
{
    if (!isa_available(isa))
        throw std::invalid_argument("kernel '" + std::string(isa_name(isa)) + "' is not available on this CPU");
    g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
    g_kernel.store(kernel_for(isa), std::memory_order_relaxed);
}

void reset_isa() noexcept
{
    g_forced.store(-1, std::memory_order_relaxed);
    g_kernel.store(kernel_for(detected_isa()), std::memory_order_relaxed);
}

FirstMismatchFn active_kernel() noexcept
{
    FirstMismatchFn fn = g_kernel.load(std::memory_order_relaxed);
    if (fn == nullptr) {
        fn = kernel_for(active_isa());
        g_kernel.store(fn, std::memory_order_relaxed);
    }
    return fn;
}

} // namespace kmismatch::kernels
