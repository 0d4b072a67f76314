#pragma once

// Generalized suffix tree of one or two strings, simulated over the suffix
// array of S1 $1 S2 $2. Leaves are the suffixes S_j[l..]$_j; internal
// nodes are the LCP intervals; the DFS leaf order `no` is the suffix-array
// rank (children ordered by first symbol, $1 < $2 < alphabet).
//
// Lowest common ancestors are answered in O(1) through a sparse-table range
// minimum over the LCP array.

#include "kmismatch/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kmismatch {

/// Suffix-array and LCP construction, exposed for testing. `text` must end
/// with a unique smallest symbol or contain unique sentinels so that no
/// suffix is a prefix of another.
std::vector<std::uint32_t> build_suffix_array(std::span<const std::uint8_t> text);
std::vector<std::uint32_t> build_lcp_array(std::span<const std::uint8_t> text,
                                           std::span<const std::uint32_t> suffix_array);

class GeneralizedSuffixTree {
public:
    /// Handle to a node; carries the identity of the owning tree.
    struct Node {
        std::uint64_t tree = 0;
        std::uint32_t index = 0;

        friend bool operator==(const Node&, const Node&) = default;
    };

    /// s-index (j, l): the suffix of S_j starting at l, j in {1, 2}.
    struct SuffixId {
        int string_id = 1;
        std::size_t offset = 0;

        friend bool operator==(const SuffixId&, const SuffixId&) = default;
    };

    /// Tree over S $1.
    explicit GeneralizedSuffixTree(SymbolView s);
    /// Tree over S1 $1 S2 $2.
    GeneralizedSuffixTree(SymbolView s1, SymbolView s2);

    std::size_t string_count() const noexcept { return lengths_[1] == kAbsent ? 1 : 2; }
    std::size_t string_length(int string_id) const;
    SymbolView string(int string_id) const;
    /// S1 $1 S2 $2 (or S $1).
    SymbolView text() const noexcept { return text_; }

    std::size_t leaf_count() const noexcept { return leaf_count_; }
    std::size_t node_count() const noexcept { return depth_.size(); }

    Node root() const noexcept { return handle(root_); }
    bool is_leaf(Node v) const;
    std::size_t depth(Node v) const;
    Node parent(Node v) const;
    std::vector<Node> children(Node v) const;
    /// Symbols on the edge entering `v` (sentinels included).
    std::vector<Symbol> edge_label(Node v) const;

    Node leaf(SuffixId id) const;
    Node leaf(int string_id, std::size_t offset) const { return leaf({string_id, offset}); }
    SuffixId suffix_of(Node leaf) const;
    /// Start of the leaf's suffix in S1 $1 S2 $2.
    std::size_t index_of(Node leaf) const;

    /// DFS rank `no` of a leaf and its inverse.
    std::size_t rank(Node leaf) const;
    Node leaf_at(std::size_t rank) const;

    Node lca(Node a, Node b) const;
    /// Longest common extension of two suffixes, i.e. depth(lca(leaf a,
    /// leaf b)). For a suffix with itself this is its length plus one.
    std::size_t lce(SuffixId a, SuffixId b) const;

    // Unchecked hot-path accessors on raw indices.
    std::uint32_t rank_of_text_index(std::size_t text_index) const noexcept { return rank_[text_index]; }
    std::uint32_t text_index_of_rank(std::uint32_t rank) const noexcept { return sa_[rank]; }
    /// depth(lca) of the leaves with ranks a and b.
    std::uint32_t lcp_of_ranks(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t lca_index(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t depth_at(std::uint32_t index) const noexcept { return depth_[index]; }
    std::uint32_t parent_at(std::uint32_t index) const noexcept { return parent_[index]; }
    std::span<const std::uint32_t> children_at(std::uint32_t index) const noexcept;
    std::uint32_t root_index() const noexcept { return root_; }
    std::size_t text_index(SuffixId id) const;

private:
    static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

    void build();
    Node handle(std::uint32_t index) const noexcept { return {id_, index}; }
    std::uint32_t checked(Node v) const;
    std::uint32_t checked_leaf(Node v) const;
    std::uint32_t range_min_position(std::uint32_t lo, std::uint32_t hi) const noexcept;

    std::uint64_t id_;
    std::vector<Symbol> text_;
    std::size_t lengths_[2] = {0, kAbsent};
    std::size_t leaf_count_ = 0;

    std::vector<std::uint32_t> sa_;   // rank -> text index
    std::vector<std::uint32_t> rank_; // text index -> rank
    std::vector<std::uint32_t> lcp_;  // lcp_[r] = LCP(rank r-1, rank r), lcp_[0] = 0

    // Nodes: leaves occupy [0, leaf_count) indexed by rank, internal nodes follow.
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> child_begin_;
    std::vector<std::uint32_t> children_;
    std::vector<std::uint32_t> lo_rank_;
    std::vector<std::uint32_t> hi_rank_;
    std::vector<std::uint32_t> boundary_node_; // internal node splitting ranks r-1 and r
    std::uint32_t root_ = 0;

    // sparse_[level][r]: position of the minimum of lcp_ over [r, r + 2^level).
    std::vector<std::vector<std::uint32_t>> sparse_;
};

GeneralizedSuffixTree build_gst(const Sequence& s1, const Sequence& s2);
GeneralizedSuffixTree build_suffix_tree(const Sequence& s);

/// Suffix tree with every node of out-degree d > 2 expanded into a left comb
/// of d - 1 binary nodes at the original depth. Node indices are in
/// post-order, so children always precede their parent.
class BinarySuffixTree {
public:
    static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

    struct NodeData {
        std::uint32_t depth = 0;
        std::uint32_t left = kNone;
        std::uint32_t right = kNone;
        std::uint32_t parent = kNone;
        int string_id = 0;       // leaves only
        std::uint32_t offset = 0; // leaves only
        bool expanded = false;   // created by binary expansion
    };

    explicit BinarySuffixTree(const GeneralizedSuffixTree& tree);

    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t leaf_count() const noexcept { return leaf_count_; }
    const NodeData& node(std::uint32_t index) const { return nodes_.at(index); }
    std::span<const NodeData> nodes() const noexcept { return nodes_; }
    std::uint32_t root() const noexcept { return root_; }
    bool is_leaf(std::uint32_t index) const { return nodes_.at(index).left == kNone; }

    std::size_t string_count() const noexcept { return strings_.size(); }
    SymbolView string(int string_id) const;

private:
    std::vector<NodeData> nodes_;
    std::vector<std::vector<Symbol>> strings_;
    std::size_t leaf_count_ = 0;
    std::uint32_t root_ = kNone;
};

/// Binary generalized suffix tree; callers pass the reversed strings.
BinarySuffixTree build_binary_gst(const Sequence& s1r, const Sequence& s2r);
BinarySuffixTree build_binary_suffix_tree(const Sequence& sr);

} // namespace kmismatch
