#include "kmismatch/ordered_leaf_list.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>
#include <set>
#include <stdexcept>

using namespace kmismatch;
using V = std::vector<std::uint32_t>;

namespace {

V random_keys(std::mt19937_64& rng, std::size_t count, std::uint32_t universe)
{
    std::set<std::uint32_t> keys;
    std::uniform_int_distribution<std::uint32_t> pick(0, universe - 1);
    while (keys.size() < count)
        keys.insert(pick(rng));
    return {keys.begin(), keys.end()};
}

// Splits keys into two disjoint sorted halves at random.
std::pair<V, V> deal(std::mt19937_64& rng, const V& keys, double bias)
{
    std::bernoulli_distribution coin(bias);
    V a, b;
    for (auto key : keys)
        (coin(rng) ? a : b).push_back(key);
    return {a, b};
}

} // namespace

TEST_CASE("merge examples")
{
    LeafListArena arena;
    CHECK(arena.merge(OrderedLeafList{}, arena.singleton(4)).to_vector() == V{4});
    CHECK(arena.merge(arena.singleton(4), OrderedLeafList{}).to_vector() == V{4});
    CHECK(arena.merge(OrderedLeafList{}, OrderedLeafList{}).empty());
    const V odd{1, 5};
    CHECK(arena.merge(arena.from_sorted(odd), arena.singleton(3)).to_vector() == V{1, 3, 5});
    auto left = arena.from_sorted(V{0, 2, 4, 6});
    auto right = arena.from_sorted(V{1, 3, 5, 7, 9});
    const auto both = merge_lists(std::move(left), std::move(right));
    CHECK(both.to_vector() == V{0, 1, 2, 3, 4, 5, 6, 7, 9});
    CHECK(both.size() == 9);
    CHECK(left.empty());
    CHECK(right.empty());
}

TEST_CASE("predecessor and successor follow the set")
{
    LeafListArena arena;
    const auto list = arena.from_sorted(V{3, 8, 20});
    CHECK(list.predecessor(2) == std::nullopt);
    CHECK(list.predecessor(3) == 3u);
    CHECK(list.predecessor(7) == 3u);
    CHECK(list.predecessor(100) == 20u);
    CHECK(list.successor(2) == 3u);
    CHECK(list.successor(3) == 8u);
    CHECK(list.successor(20) == std::nullopt);
    CHECK(list.contains(8));
    CHECK_FALSE(list.contains(9));
    const OrderedLeafList none;
    CHECK(none.predecessor(5) == std::nullopt);
    CHECK(none.successor(5) == std::nullopt);
    CHECK(none.size() == 0);
}

TEST_CASE("random merges give the sorted union")
{
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 200; ++trial) {
        LeafListArena arena;
        const V keys = random_keys(rng, rng() % 300, 2000);
        const auto [a, b] = deal(rng, keys, 0.05 + 0.9 * (trial % 10) / 10.0);
        const auto merged = arena.merge(arena.from_sorted(a), arena.from_sorted(b));
        REQUIRE(merged.to_vector() == keys);
        const std::set<std::uint32_t> reference(keys.begin(), keys.end());
        for (std::uint32_t q = 0; q < 2001; q += 7) {
            auto above = reference.upper_bound(q);
            auto pred = above == reference.begin() ? std::nullopt : std::optional(*std::prev(above));
            auto succ = above == reference.end() ? std::nullopt : std::optional(*above);
            REQUIRE(merged.predecessor(q) == pred);
            REQUIRE(merged.successor(q) == succ);
        }
    }
}

TEST_CASE("repeated merging stays sorted")
{
    std::mt19937_64 rng(71);
    LeafListArena arena;
    std::vector<OrderedLeafList> pool;
    V all = random_keys(rng, 500, 100000);
    std::shuffle(all.begin(), all.end(), rng);
    for (auto key : all)
        pool.push_back(arena.singleton(key));
    while (pool.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        const std::size_t i = pick(rng);
        auto a = std::move(pool[i]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
        const std::size_t j = pick(rng) % pool.size();
        pool[j] = arena.merge(std::move(a), std::move(pool[j]));
    }
    std::sort(all.begin(), all.end());
    CHECK(pool.front().to_vector() == all);
}

TEST_CASE("neighbour sweep matches set lookups and leaves the lists intact")
{
    std::mt19937_64 rng(73);
    std::vector<LeafListArena::Neighbours> out;
    for (int trial = 0; trial < 200; ++trial) {
        LeafListArena arena;
        const V keys = random_keys(rng, rng() % 200, 1000);
        const auto [a, b] = deal(rng, keys, 0.1 + 0.8 * (trial % 5) / 5.0);
        const auto iterated = arena.from_sorted(a);
        auto searched = arena.from_sorted(b);
        arena.neighbours(iterated, searched, out);
        REQUIRE(out.size() == a.size());
        const std::set<std::uint32_t> ref(b.begin(), b.end());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(out[i].p == a[i]);
            auto above = ref.upper_bound(a[i]);
            CHECK(out[i].below == (above == ref.begin() ? std::nullopt : std::optional(*std::prev(above))));
            CHECK(out[i].above == (above == ref.end() ? std::nullopt : std::optional(*above)));
        }
        CHECK(searched.to_vector() == b);
        CHECK(iterated.to_vector() == a);
    }
}

TEST_CASE("lists from different arenas are refused")
{
    LeafListArena one, two;
    CHECK_THROWS_AS(one.merge(one.singleton(1), two.singleton(2)), std::invalid_argument);
}

TEST_CASE("small-into-large merges cost about m log(n/m)")
{
    std::mt19937_64 rng(79);
    const std::size_t n = 1u << 16;
    for (std::size_t m : {1u, 16u, 256u, 4096u}) {
        LeafListArena arena;
        const V keys = random_keys(rng, n + m, 1u << 30);
        V big, small;
        std::sample(keys.begin(), keys.end(), std::back_inserter(small), m, rng);
        std::set_difference(keys.begin(), keys.end(), small.begin(), small.end(), std::back_inserter(big));
        auto large = arena.from_sorted(big);
        auto little = arena.from_sorted(small);
        arena.reset_element_ops();
        auto merged = arena.merge(std::move(little), std::move(large));
        const double bound = static_cast<double>(m) * (std::log2(static_cast<double>(n) / m + 1.0) + 1.0);
        CAPTURE(m);
        CAPTURE(arena.element_ops());
        CHECK(static_cast<double>(arena.element_ops()) <= 12.0 * bound);
        CHECK(merged.size() == n + m);
    }
}
