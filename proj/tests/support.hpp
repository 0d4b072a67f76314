#pragma once

#include "kmismatch/sequence.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace kmismatch::testing {

inline Sequence random_sequence(std::mt19937_64& rng, std::size_t length, unsigned alphabet)
{
    std::uniform_int_distribution<unsigned> pick(0, alphabet - 1);
    std::vector<Symbol> bytes(length);
    for (auto& b : bytes)
        b = static_cast<Symbol>('a' + pick(rng));
    return Sequence(std::move(bytes));
}

inline Sequence random_dna(std::mt19937_64& rng, std::size_t length)
{
    static constexpr char kBases[] = "ACGT";
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<Symbol> bytes(length);
    for (auto& b : bytes)
        b = static_cast<Symbol>(kBases[pick(rng)]);
    return Sequence(std::move(bytes));
}

/// Every string over {a, b} of exactly `length` symbols.
inline std::vector<Sequence> binary_strings(std::size_t length)
{
    std::vector<Sequence> out;
    for (std::uint32_t mask = 0; mask < (1u << length); ++mask) {
        std::string s(length, 'a');
        for (std::size_t i = 0; i < length; ++i)
            if (mask >> i & 1u)
                s[i] = 'b';
        out.emplace_back(s);
    }
    return out;
}

} // namespace kmismatch::testing
