#pragma once

// Longest common substring with one mismatch via longest constrained
// 1-repeats of S1 $1 S2 $2.
//
// Each leaf of the binary suffix tree of the reversed strings is a left
// part u ending just before a don't-care gap; it is mapped to the forward
// suffix-tree leaf where the right part v starts. Walking the binary tree
// bottom up, every pair of leaves meeting at node x shares |u| = depth(x),
// and by the DFS-order property of suffix-tree leaves only the nearest
// neighbours (in rank order) of each leaf can maximise |v|. Sets of ranks
// are merged smaller-into-larger with height-balanced unions.

#include "kmismatch/ordered_leaf_list.hpp"
#include "kmismatch/sequence.hpp"
#include "kmismatch/suffix_tree.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace kmismatch {

struct Occurrence {
    int string_id = 1;
    std::size_t start = 0;
    std::size_t length = 0;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct RepeatWitness {
    Occurrence first;
    Occurrence second;
};

struct RepeatResult {
    std::size_t gamma = 0;
    std::optional<RepeatWitness> witness;
};

/// Optional instrumentation for tests and benchmarks.
struct RepeatTrace {
    /// Accumulated treap node operations over all merges and searches.
    std::uint64_t element_ops = 0;
    /// Every (rank, neighbour rank) pair evaluated by find_longest.
    std::function<void(std::uint32_t p, std::uint32_t q)> on_pair;
    /// After each internal binary-tree node: total list size at that node.
    std::function<void(std::uint32_t node, std::size_t mass)> on_node;
};

/// Running maximum of find_longest with the pair that attained it.
struct RepeatState {
    std::size_t gamma = 0;
    std::uint32_t rank_a = 0;
    std::uint32_t rank_b = 0;
    std::size_t left_plus_gap = 0;
    bool found = false;
    RepeatTrace* trace = nullptr;
};

/// A^1 and A^2 of one binary-tree node.
struct LeafLists {
    OrderedLeafList first;
    OrderedLeafList second;
};

/// One entry per binary-tree node (internal nodes start empty). Leaf (j, l)
/// with l >= k gets the rank of the forward leaf (j, |S_j| - l + k) in list
/// A^j. Throws std::invalid_argument unless `btree` was built over the
/// reverses of `gst`'s strings.
std::vector<LeafLists> leaf_lists_init(const BinarySuffixTree& btree, const GeneralizedSuffixTree& gst, std::size_t k,
                                       LeafListArena& arena);

/// For each element p of the smaller list, evaluates its predecessor and
/// successor in the other list: gamma = max(gamma, l + depth(lca)).
void find_longest(OrderedLeafList& l1, OrderedLeafList& l2, std::size_t l, const GeneralizedSuffixTree& gst,
                  RepeatState& state);

/// Longest k-repeat u *^k v of a single string (unconstrained).
RepeatResult all_longest_k_repeats(const Sequence& s, std::size_t k, RepeatTrace* trace = nullptr);

/// Longest common substring with one mismatch. The witness has one
/// occurrence in each string, first in S1.
RepeatResult klcs1(const Sequence& s1, const Sequence& s2, RepeatTrace* trace = nullptr);

/// klcs1 over windows S1[m*i .. min(m*i + 2m, n)) of the longer string
/// against the shorter one; O(n log m) for m <= n. Either order accepted.
RepeatResult klcs1_windowed(const Sequence& s1, const Sequence& s2, RepeatTrace* trace = nullptr);

} // namespace kmismatch
