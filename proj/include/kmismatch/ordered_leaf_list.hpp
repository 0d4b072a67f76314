#pragma once

// Ordered sets of leaf ranks for the bottom-up repeat search. Sets live in
// a shared arena as treaps with join-based union, so merging sets of sizes
// m <= n costs O(m log(n/m + 1)) expected node operations. Lists are
// move-only handles into their arena; merge consumes both operands.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kmismatch {

class OrderedLeafList;

class LeafListArena {
public:
    static constexpr std::uint32_t kNil = static_cast<std::uint32_t>(-1);

    /// For each element p of the iterated list (ascending): its predecessor
    /// and successor in the searched list, if any.
    struct Neighbours {
        std::uint32_t p;
        std::optional<std::uint32_t> below;
        std::optional<std::uint32_t> above;
    };

    LeafListArena() = default;
    LeafListArena(const LeafListArena&) = delete;
    LeafListArena& operator=(const LeafListArena&) = delete;

    OrderedLeafList singleton(std::uint32_t key);
    /// `keys` must be strictly increasing.
    OrderedLeafList from_sorted(std::span<const std::uint32_t> keys);

    /// Disjoint union. Throws std::invalid_argument if either list belongs
    /// to another arena.
    OrderedLeafList merge(OrderedLeafList a, OrderedLeafList b);

    /// Fills `out` with the neighbours of every element of `iterated` inside
    /// `searched`. The lists must be disjoint. `searched` is split and
    /// re-joined along the way but keeps its contents.
    void neighbours(const OrderedLeafList& iterated, OrderedLeafList& searched, std::vector<Neighbours>& out);

    /// Treap nodes touched by split, join, union and neighbour sweeps.
    std::uint64_t element_ops() const noexcept { return ops_; }
    void reset_element_ops() noexcept { ops_ = 0; }

private:
    friend class OrderedLeafList;

    struct Node {
        std::uint32_t key;
        std::uint32_t left = kNil;
        std::uint32_t right = kNil;
        std::uint32_t size = 1;
        std::uint32_t min;
        std::uint32_t max;
        std::uint64_t priority;
    };

    std::uint32_t make_node(std::uint32_t key);
    void update(std::uint32_t t) noexcept;
    std::pair<std::uint32_t, std::uint32_t> split(std::uint32_t t, std::uint32_t key);
    std::uint32_t join(std::uint32_t a, std::uint32_t b);
    std::uint32_t unite(std::uint32_t a, std::uint32_t b);
    std::uint32_t sweep(std::uint32_t s, std::uint32_t t, std::optional<std::uint32_t> below,
                        std::optional<std::uint32_t> above, std::vector<Neighbours>& out);

    std::vector<Node> nodes_;
    std::uint64_t ops_ = 0;
};

class OrderedLeafList {
public:
    OrderedLeafList() = default;
    OrderedLeafList(OrderedLeafList&& other) noexcept;
    OrderedLeafList& operator=(OrderedLeafList&& other) noexcept;
    OrderedLeafList(const OrderedLeafList&) = delete;
    OrderedLeafList& operator=(const OrderedLeafList&) = delete;

    std::size_t size() const noexcept;
    bool empty() const noexcept { return root_ == LeafListArena::kNil; }

    /// Largest element <= p.
    std::optional<std::uint32_t> predecessor(std::uint32_t p) const;
    /// Smallest element > p.
    std::optional<std::uint32_t> successor(std::uint32_t p) const;
    bool contains(std::uint32_t p) const;
    std::vector<std::uint32_t> to_vector() const;

    LeafListArena* arena() const noexcept { return arena_; }

private:
    friend class LeafListArena;
    friend OrderedLeafList merge_lists(OrderedLeafList a, OrderedLeafList b);

    OrderedLeafList(LeafListArena* arena, std::uint32_t root) noexcept
        : arena_(arena), root_(root)
    {
    }

    LeafListArena* arena_ = nullptr;
    std::uint32_t root_ = LeafListArena::kNil;
};

/// Sorted union of two disjoint lists from the same arena.
OrderedLeafList merge_lists(OrderedLeafList a, OrderedLeafList b);

} // namespace kmismatch
