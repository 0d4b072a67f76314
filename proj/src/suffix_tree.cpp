#include "kmismatch/suffix_tree.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>

namespace kmismatch {

namespace {

constexpr std::uint32_t kNoNode = static_cast<std::uint32_t>(-1);

std::uint64_t next_tree_id()
{
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

void require_no_sentinel(SymbolView s)
{
    if (auto at = Sequence::find_reserved(s))
        throw InvalidSymbolError(*at, s[*at]);
}

} // namespace

GeneralizedSuffixTree::GeneralizedSuffixTree(SymbolView s)
    : id_(next_tree_id())
{
    require_no_sentinel(s);
    text_.reserve(s.size() + 1);
    text_.assign(s.begin(), s.end());
    text_.push_back(kSentinel1);
    lengths_[0] = s.size();
    build();
}

GeneralizedSuffixTree::GeneralizedSuffixTree(SymbolView s1, SymbolView s2)
    : id_(next_tree_id())
{
    require_no_sentinel(s1);
    require_no_sentinel(s2);
    text_.reserve(s1.size() + s2.size() + 2);
    text_.assign(s1.begin(), s1.end());
    text_.push_back(kSentinel1);
    text_.insert(text_.end(), s2.begin(), s2.end());
    text_.push_back(kSentinel2);
    lengths_[0] = s1.size();
    lengths_[1] = s2.size();
    build();
}

void GeneralizedSuffixTree::build()
{
    const std::size_t count = text_.size();
    leaf_count_ = count;
    sa_ = build_suffix_array(text_);
    lcp_ = build_lcp_array(text_, sa_);
    rank_.assign(count, 0);
    for (std::size_t r = 0; r < count; ++r)
        rank_[sa_[r]] = static_cast<std::uint32_t>(r);

    // Leaves: depth is the per-string suffix length including its sentinel.
    depth_.resize(count);
    parent_.assign(count, kNoNode);
    lo_rank_.resize(count);
    hi_rank_.resize(count);
    for (std::size_t r = 0; r < count; ++r) {
        const std::size_t x = sa_[r];
        depth_[r] = static_cast<std::uint32_t>(x <= lengths_[0] ? lengths_[0] + 1 - x : count - x);
        lo_rank_[r] = hi_rank_[r] = static_cast<std::uint32_t>(r);
    }

    auto new_node = [&](std::uint32_t depth) {
        depth_.push_back(depth);
        parent_.push_back(kNoNode);
        lo_rank_.push_back(kNoNode);
        hi_rank_.push_back(kNoNode);
        return static_cast<std::uint32_t>(depth_.size() - 1);
    };
    std::vector<std::uint32_t> attach_order;
    attach_order.reserve(2 * count);
    auto attach = [&](std::uint32_t parent, std::uint32_t child) {
        parent_[child] = parent;
        attach_order.push_back(child);
        if (lo_rank_[parent] == kNoNode)
            lo_rank_[parent] = lo_rank_[child];
        hi_rank_[parent] = hi_rank_[child];
    };

    // Bottom-up LCP-interval construction. `pending` is the finished subtree
    // waiting to be attached to its parent.
    boundary_node_.assign(count, kNoNode);
    std::vector<std::uint32_t> open{new_node(0)};
    std::uint32_t pending = 0;
    for (std::size_t r = 1; r < count; ++r) {
        const std::uint32_t h = lcp_[r];
        while (depth_[open.back()] > h) {
            attach(open.back(), pending);
            pending = open.back();
            open.pop_back();
        }
        if (depth_[open.back()] == h) {
            attach(open.back(), pending);
        } else {
            const std::uint32_t node = new_node(h);
            attach(node, pending);
            open.push_back(node);
        }
        boundary_node_[r] = open.back();
        pending = static_cast<std::uint32_t>(r);
    }
    while (!open.empty()) {
        attach(open.back(), pending);
        pending = open.back();
        open.pop_back();
    }
    root_ = pending;

    // Children in CSR form; attach order is rank order within each parent.
    const std::size_t nodes = depth_.size();
    child_begin_.assign(nodes + 1, 0);
    for (std::uint32_t child : attach_order)
        ++child_begin_[parent_[child] + 1];
    for (std::size_t v = 0; v < nodes; ++v)
        child_begin_[v + 1] += child_begin_[v];
    children_.resize(attach_order.size());
    std::vector<std::uint32_t> fill(child_begin_.begin(), child_begin_.end() - 1);
    for (std::uint32_t child : attach_order)
        children_[fill[parent_[child]]++] = child;

    sparse_.clear();
    if (count < 2)
        return;
    std::vector<std::uint32_t> level(count);
    for (std::size_t r = 0; r < count; ++r)
        level[r] = static_cast<std::uint32_t>(r);
    sparse_.push_back(std::move(level));
    for (std::size_t width = 2; width <= count - 1; width <<= 1) {
        const auto& prev = sparse_.back();
        std::vector<std::uint32_t> next(count - width + 1);
        for (std::size_t r = 1; r + width <= count; ++r) {
            const std::uint32_t a = prev[r];
            const std::uint32_t b = prev[r + width / 2];
            next[r] = lcp_[b] < lcp_[a] ? b : a;
        }
        sparse_.push_back(std::move(next));
    }
}

std::uint32_t GeneralizedSuffixTree::range_min_position(std::uint32_t lo, std::uint32_t hi) const noexcept
{
    const unsigned level = std::bit_width(static_cast<std::uint32_t>(hi - lo + 1)) - 1;
    const std::uint32_t a = sparse_[level][lo];
    const std::uint32_t b = sparse_[level][hi + 1 - (1u << level)];
    return lcp_[b] < lcp_[a] ? b : a;
}

std::uint32_t GeneralizedSuffixTree::lcp_of_ranks(std::uint32_t a, std::uint32_t b) const noexcept
{
    if (a == b)
        return depth_[a];
    if (a > b)
        std::swap(a, b);
    return lcp_[range_min_position(a + 1, b)];
}

std::uint32_t GeneralizedSuffixTree::lca_index(std::uint32_t a, std::uint32_t b) const noexcept
{
    if (a == b)
        return a;
    if (a > b)
        std::swap(a, b);
    return boundary_node_[range_min_position(a + 1, b)];
}

std::span<const std::uint32_t> GeneralizedSuffixTree::children_at(std::uint32_t index) const noexcept
{
    return std::span<const std::uint32_t>(children_).subspan(child_begin_[index],
                                                             child_begin_[index + 1] - child_begin_[index]);
}

std::size_t GeneralizedSuffixTree::string_length(int string_id) const
{
    if (string_id < 1 || static_cast<std::size_t>(string_id) > string_count())
        throw std::out_of_range("string id " + std::to_string(string_id) + " not in tree");
    return lengths_[string_id - 1];
}

SymbolView GeneralizedSuffixTree::string(int string_id) const
{
    const std::size_t len = string_length(string_id);
    const std::size_t base = string_id == 1 ? 0 : lengths_[0] + 1;
    return SymbolView(text_).subspan(base, len);
}

std::uint32_t GeneralizedSuffixTree::checked(Node v) const
{
    if (v.tree != id_)
        throw std::invalid_argument("node belongs to a different suffix tree");
    if (v.index >= depth_.size())
        throw std::out_of_range("node index out of range");
    return v.index;
}

std::uint32_t GeneralizedSuffixTree::checked_leaf(Node v) const
{
    const std::uint32_t index = checked(v);
    if (index >= leaf_count_)
        throw std::invalid_argument("node is not a leaf");
    return index;
}

bool GeneralizedSuffixTree::is_leaf(Node v) const { return checked(v) < leaf_count_; }

std::size_t GeneralizedSuffixTree::depth(Node v) const { return depth_[checked(v)]; }

GeneralizedSuffixTree::Node GeneralizedSuffixTree::parent(Node v) const
{
    const std::uint32_t index = checked(v);
    if (index == root_)
        throw std::invalid_argument("root has no parent");
    return handle(parent_[index]);
}

std::vector<GeneralizedSuffixTree::Node> GeneralizedSuffixTree::children(Node v) const
{
    std::vector<Node> out;
    for (std::uint32_t c : children_at(checked(v)))
        out.push_back(handle(c));
    return out;
}

std::vector<Symbol> GeneralizedSuffixTree::edge_label(Node v) const
{
    const std::uint32_t index = checked(v);
    if (index == root_)
        return {};
    const std::size_t start = sa_[lo_rank_[index]];
    return {text_.begin() + static_cast<std::ptrdiff_t>(start + depth_[parent_[index]]),
            text_.begin() + static_cast<std::ptrdiff_t>(start + depth_[index])};
}

std::size_t GeneralizedSuffixTree::text_index(SuffixId id) const
{
    const std::size_t len = string_length(id.string_id);
    if (id.offset > len)
        throw std::out_of_range("suffix offset " + std::to_string(id.offset) + " past end of string " +
                                std::to_string(id.string_id));
    return id.string_id == 1 ? id.offset : lengths_[0] + 1 + id.offset;
}

GeneralizedSuffixTree::Node GeneralizedSuffixTree::leaf(SuffixId id) const
{
    return handle(rank_[text_index(id)]);
}

GeneralizedSuffixTree::SuffixId GeneralizedSuffixTree::suffix_of(Node leaf) const
{
    const std::size_t x = sa_[checked_leaf(leaf)];
    if (x <= lengths_[0])
        return {1, x};
    return {2, x - lengths_[0] - 1};
}

std::size_t GeneralizedSuffixTree::index_of(Node leaf) const { return sa_[checked_leaf(leaf)]; }

std::size_t GeneralizedSuffixTree::rank(Node leaf) const { return checked_leaf(leaf); }

GeneralizedSuffixTree::Node GeneralizedSuffixTree::leaf_at(std::size_t rank) const
{
    if (rank >= leaf_count_)
        throw std::out_of_range("leaf rank out of range");
    return handle(static_cast<std::uint32_t>(rank));
}

GeneralizedSuffixTree::Node GeneralizedSuffixTree::lca(Node a, Node b) const
{
    std::uint32_t x = checked(a);
    std::uint32_t y = checked(b);
    // Order by left end, wider interval first on ties.
    if (lo_rank_[y] < lo_rank_[x] || (lo_rank_[y] == lo_rank_[x] && hi_rank_[y] > hi_rank_[x]))
        std::swap(x, y);
    if (hi_rank_[y] <= hi_rank_[x])
        return handle(x); // x contains y
    return handle(lca_index(hi_rank_[x], lo_rank_[y]));
}

std::size_t GeneralizedSuffixTree::lce(SuffixId a, SuffixId b) const
{
    return lcp_of_ranks(rank_[text_index(a)], rank_[text_index(b)]);
}

GeneralizedSuffixTree build_gst(const Sequence& s1, const Sequence& s2)
{
    return GeneralizedSuffixTree(s1.view(), s2.view());
}

GeneralizedSuffixTree build_suffix_tree(const Sequence& s) { return GeneralizedSuffixTree(s.view()); }

} // namespace kmismatch
