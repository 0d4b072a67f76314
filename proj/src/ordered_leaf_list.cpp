#include "kmismatch/ordered_leaf_list.hpp"

#include <stdexcept>
#include <utility>

namespace kmismatch {

namespace {

// Priorities are a fixed hash of the key, so treap shapes (and therefore
// operation counts) are reproducible.
std::uint64_t mix(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace

std::uint32_t LeafListArena::make_node(std::uint32_t key)
{
    Node node;
    node.key = node.min = node.max = key;
    node.priority = mix(key);
    nodes_.push_back(node);
    return static_cast<std::uint32_t>(nodes_.size() - 1);
}

void LeafListArena::update(std::uint32_t t) noexcept
{
    Node& n = nodes_[t];
    n.size = 1;
    n.min = n.max = n.key;
    if (n.left != kNil) {
        n.size += nodes_[n.left].size;
        n.min = nodes_[n.left].min;
    }
    if (n.right != kNil) {
        n.size += nodes_[n.right].size;
        n.max = nodes_[n.right].max;
    }
}

// (keys < key, keys >= key)
std::pair<std::uint32_t, std::uint32_t> LeafListArena::split(std::uint32_t t, std::uint32_t key)
{
    if (t == kNil)
        return {kNil, kNil};
    ++ops_;
    if (nodes_[t].key < key) {
        auto [lo, hi] = split(nodes_[t].right, key);
        nodes_[t].right = lo;
        update(t);
        return {t, hi};
    }
    auto [lo, hi] = split(nodes_[t].left, key);
    nodes_[t].left = hi;
    update(t);
    return {lo, t};
}

// Every key of a precedes every key of b.
std::uint32_t LeafListArena::join(std::uint32_t a, std::uint32_t b)
{
    if (a == kNil)
        return b;
    if (b == kNil)
        return a;
    ++ops_;
    if (nodes_[a].priority > nodes_[b].priority) {
        nodes_[a].right = join(nodes_[a].right, b);
        update(a);
        return a;
    }
    nodes_[b].left = join(a, nodes_[b].left);
    update(b);
    return b;
}

std::uint32_t LeafListArena::unite(std::uint32_t a, std::uint32_t b)
{
    if (a == kNil)
        return b;
    if (b == kNil)
        return a;
    ++ops_;
    if (nodes_[a].priority < nodes_[b].priority)
        std::swap(a, b);
    auto [lo, hi] = split(b, nodes_[a].key);
    nodes_[a].left = unite(nodes_[a].left, lo);
    nodes_[a].right = unite(nodes_[a].right, hi);
    update(a);
    return a;
}

// `t` holds the searched keys in the key range spanned by subtree `s`;
// `below`/`above` are the nearest searched keys outside that range.
std::uint32_t LeafListArena::sweep(std::uint32_t s, std::uint32_t t, std::optional<std::uint32_t> below,
                                   std::optional<std::uint32_t> above, std::vector<Neighbours>& out)
{
    if (s == kNil)
        return t;
    ++ops_;
    const Node pivot = nodes_[s];
    auto [lo, hi] = split(t, pivot.key);
    const std::optional<std::uint32_t> pred = lo != kNil ? std::optional(nodes_[lo].max) : below;
    const std::optional<std::uint32_t> succ = hi != kNil ? std::optional(nodes_[hi].min) : above;
    lo = sweep(pivot.left, lo, below, succ, out);
    out.push_back({pivot.key, pred, succ});
    hi = sweep(pivot.right, hi, pred, above, out);
    return join(lo, hi);
}

OrderedLeafList LeafListArena::singleton(std::uint32_t key) { return {this, make_node(key)}; }

OrderedLeafList LeafListArena::from_sorted(std::span<const std::uint32_t> keys)
{
    std::uint32_t root = kNil;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i > 0 && keys[i] <= keys[i - 1])
            throw std::invalid_argument("from_sorted: keys must be strictly increasing");
        root = join(root, make_node(keys[i]));
    }
    return {this, root};
}

OrderedLeafList LeafListArena::merge(OrderedLeafList a, OrderedLeafList b)
{
    if ((a.arena_ != nullptr && a.arena_ != this) || (b.arena_ != nullptr && b.arena_ != this))
        throw std::invalid_argument("merge_lists: lists belong to different arenas");
    const std::uint32_t root = unite(std::exchange(a.root_, kNil), std::exchange(b.root_, kNil));
    return {this, root};
}

void LeafListArena::neighbours(const OrderedLeafList& iterated, OrderedLeafList& searched, std::vector<Neighbours>& out)
{
    if ((iterated.arena_ != nullptr && iterated.arena_ != this) ||
        (searched.arena_ != nullptr && searched.arena_ != this))
        throw std::invalid_argument("neighbours: lists belong to different arenas");
    out.clear();
    searched.root_ = sweep(iterated.root_, searched.root_, std::nullopt, std::nullopt, out);
}

OrderedLeafList::OrderedLeafList(OrderedLeafList&& other) noexcept
    : arena_(other.arena_), root_(std::exchange(other.root_, LeafListArena::kNil))
{
}

OrderedLeafList& OrderedLeafList::operator=(OrderedLeafList&& other) noexcept
{
    arena_ = other.arena_;
    root_ = std::exchange(other.root_, LeafListArena::kNil);
    return *this;
}

std::size_t OrderedLeafList::size() const noexcept { return empty() ? 0 : arena_->nodes_[root_].size; }

std::optional<std::uint32_t> OrderedLeafList::predecessor(std::uint32_t p) const
{
    std::optional<std::uint32_t> best;
    for (std::uint32_t t = root_; t != LeafListArena::kNil;) {
        const auto& n = arena_->nodes_[t];
        if (n.key <= p) {
            best = n.key;
            t = n.right;
        } else {
            t = n.left;
        }
    }
    return best;
}

std::optional<std::uint32_t> OrderedLeafList::successor(std::uint32_t p) const
{
    std::optional<std::uint32_t> best;
    for (std::uint32_t t = root_; t != LeafListArena::kNil;) {
        const auto& n = arena_->nodes_[t];
        if (n.key > p) {
            best = n.key;
            t = n.left;
        } else {
            t = n.right;
        }
    }
    return best;
}

bool OrderedLeafList::contains(std::uint32_t p) const
{
    const auto pred = predecessor(p);
    return pred && *pred == p;
}

std::vector<std::uint32_t> OrderedLeafList::to_vector() const
{
    std::vector<std::uint32_t> out;
    std::vector<std::uint32_t> stack;
    std::uint32_t t = root_;
    while (t != LeafListArena::kNil || !stack.empty()) {
        while (t != LeafListArena::kNil) {
            stack.push_back(t);
            t = arena_->nodes_[t].left;
        }
        t = stack.back();
        stack.pop_back();
        out.push_back(arena_->nodes_[t].key);
        t = arena_->nodes_[t].right;
    }
    return out;
}

OrderedLeafList merge_lists(OrderedLeafList a, OrderedLeafList b)
{
    LeafListArena* arena = a.arena_ != nullptr ? a.arena_ : b.arena_;
    if (arena == nullptr)
        return {};
    return arena->merge(std::move(a), std::move(b));
}

} // namespace kmismatch
