#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace kmismatch {

/// Longest pair of equal-length substrings within the mismatch budget.
/// A zero length always carries start positions (0, 0).
struct LcfResult {
    std::size_t length = 0;
    std::size_t start1 = 0;
    std::size_t start2 = 0;

    friend bool operator==(const LcfResult&, const LcfResult&) = default;
};

enum class Orientation {
    prefix, // values[i]: longest prefix of S2[i..] matching inside S1
    suffix, // values[j]: longest suffix of S2[..j] matching inside S1
};

struct MsArray {
    std::vector<std::uint32_t> values;
    Orientation orientation = Orientation::prefix;

    friend bool operator==(const MsArray&, const MsArray&) = default;
};

/// Cell of the phi matrix: end position i in S1, end position j in S2.
struct PhiQuery {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
};

} // namespace kmismatch
