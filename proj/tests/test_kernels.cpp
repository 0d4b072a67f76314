#include "kmismatch/core_scan.hpp"
#include "kmismatch/kernels.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace kmismatch;
using namespace kmismatch::kernels;

namespace {

struct IsaGuard {
    ~IsaGuard() { reset_isa(); }
};

} // namespace

TEST_CASE("scalar kernel basics")
{
    const std::uint8_t a[] = {1, 2, 3, 4};
    const std::uint8_t b[] = {1, 2, 9, 4};
    CHECK(first_mismatch_scalar(a, b, 0) == 0);
    CHECK(first_mismatch_scalar(a, a, 4) == 4);
    CHECK(first_mismatch_scalar(a, b, 4) == 2);
    CHECK(first_mismatch_scalar(a, b, 2) == 2);
}

TEST_CASE("every available kernel matches the scalar reference")
{
    const auto isas = available_isas();
    REQUIRE(!isas.empty());
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> byte(2, 255);

    std::vector<std::uint8_t> base(300);
    for (auto& c : base)
        c = static_cast<std::uint8_t>(byte(rng));

    for (Isa isa : isas) {
        CAPTURE(isa_name(isa));
        const FirstMismatchFn fn = kernel_for(isa);
        REQUIRE(fn != nullptr);
        // Unaligned starts, all lengths up to a few vector widths, one
        // planted mismatch at every offset plus the no-mismatch case.
        for (std::size_t shift = 0; shift < 3; ++shift) {
            for (std::size_t len = 0; len <= 130; ++len) {
                std::vector<std::uint8_t> other(base);
                const std::uint8_t* a = base.data() + shift;
                CHECK(fn(a, other.data() + shift, len) == len);
                for (std::size_t at = 0; at < len; ++at) {
                    other[shift + at] ^= 0x40;
                    const std::size_t want = first_mismatch_scalar(a, other.data() + shift, len);
                    REQUIRE(want == at);
                    REQUIRE(fn(a, other.data() + shift, len) == want);
                    other[shift + at] ^= 0x40;
                }
            }
        }
        // Dense random mismatches.
        for (int trial = 0; trial < 2000; ++trial) {
            std::vector<std::uint8_t> x(base.begin(), base.begin() + 200), y(x);
            std::uniform_int_distribution<std::size_t> pos(0, y.size() - 1);
            for (int flips = trial % 4; flips > 0; --flips)
                y[pos(rng)] ^= 1;
            const std::size_t len = pos(rng);
            REQUIRE(fn(x.data(), y.data(), len) == first_mismatch_scalar(x.data(), y.data(), len));
        }
    }
}

TEST_CASE("isa names round trip and unavailable kernels are refused")
{
    for (Isa isa : {Isa::scalar, Isa::swar, Isa::sse2, Isa::avx2, Isa::neon})
        CHECK(parse_isa(isa_name(isa)) == isa);
    CHECK_FALSE(parse_isa("avx512").has_value());
    CHECK(isa_available(Isa::scalar));
    CHECK(isa_available(detected_isa()));

    IsaGuard guard;
    for (Isa isa : {Isa::sse2, Isa::avx2, Isa::neon})
        if (!isa_available(isa))
            CHECK_THROWS_AS(force_isa(isa), std::invalid_argument);
    force_isa(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    CHECK(active_kernel() == &first_mismatch_scalar);
    reset_isa();
    CHECK(active_isa() == detected_isa());
}

TEST_CASE("scans give identical results under every kernel")
{
    IsaGuard guard;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto s1 = testing::random_sequence(rng, 50 + trial * 7, trial % 2 ? 2 : 4);
        const auto s2 = testing::random_sequence(rng, 40 + trial * 5, trial % 2 ? 2 : 4);
        const std::size_t k = static_cast<std::size_t>(trial % 6);
        force_isa(Isa::scalar);
        const LcfResult reference = lcf_queue(s1, s2, k);
        const LcfResult reference_cs = lcf_const_space(s1, s2, k);
        const MsArray reference_ms = matching_stats_k(s1, s2, k);
        for (Isa isa : available_isas()) {
            CAPTURE(isa_name(isa));
            force_isa(isa);
            CHECK(lcf_queue(s1, s2, k) == reference);
            CHECK(lcf_const_space(s1, s2, k) == reference_cs);
            CHECK(matching_stats_k(s1, s2, k) == reference_ms);
        }
    }
}
