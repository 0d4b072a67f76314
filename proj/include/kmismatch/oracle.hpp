#pragma once

// Brute-force reference implementations. They share no code with the
// optimized modules and favour obviousness over speed.

#include "kmismatch/sequence.hpp"
#include "kmismatch/types.hpp"

#include <cstddef>

namespace kmismatch::oracle {

/// Largest l <= min(i, j) + 1 such that S1[i-l+1..i] and S2[j-l+1..j] differ
/// in at most k positions. Throws std::out_of_range on bad indices.
std::size_t phi_naive(const Sequence& s1, const Sequence& s2, std::size_t k, std::size_t i, std::size_t j);
std::size_t phi_naive(const Sequence& s1, const Sequence& s2, const PhiQuery& query);

/// max over all (i, j) of phi_naive; the witness is the first argmax in
/// row-major (i, j) order.
LcfResult lcf_naive(const Sequence& s1, const Sequence& s2, std::size_t k);

/// Prefix-oriented matching statistics by trying every alignment.
MsArray ms_naive(const Sequence& s1, const Sequence& s2, std::size_t k);

/// Length of the longest pattern u *^k v matching at two distinct positions
/// of s, by enumerating every (p1, p2, |u|). Requires |s| >= 1 and k >= 1.
std::size_t longest_k_repeat_naive(const Sequence& s, std::size_t k);

std::size_t hamming_distance(SymbolView a, SymbolView b);

/// The witness lies inside both strings and its two substrings differ in
/// at most k positions.
bool is_valid_witness(const Sequence& s1, const Sequence& s2, std::size_t k, const LcfResult& result);

} // namespace kmismatch::oracle
