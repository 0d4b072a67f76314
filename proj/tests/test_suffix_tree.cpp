#include "kmismatch/oracle.hpp"
#include "kmismatch/suffix_tree.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

using namespace kmismatch;
using Node = GeneralizedSuffixTree::Node;
using SuffixId = GeneralizedSuffixTree::SuffixId;

namespace {

std::vector<std::uint8_t> joined(const Sequence& a, const Sequence& b)
{
    std::vector<std::uint8_t> t(a.begin(), a.end());
    t.push_back(kSentinel1);
    t.insert(t.end(), b.begin(), b.end());
    t.push_back(kSentinel2);
    return t;
}

std::size_t naive_lcp(std::span<const std::uint8_t> t, std::size_t a, std::size_t b)
{
    std::size_t l = 0;
    while (a + l < t.size() && b + l < t.size() && t[a + l] == t[b + l])
        ++l;
    return l;
}

// Suffix S_j[l..] followed by its own sentinel.
std::vector<Symbol> terminated_suffix(const GeneralizedSuffixTree& tree, SuffixId id)
{
    const SymbolView s = tree.string(id.string_id);
    std::vector<Symbol> out(s.begin() + static_cast<std::ptrdiff_t>(id.offset), s.end());
    out.push_back(id.string_id == 1 ? kSentinel1 : kSentinel2);
    return out;
}

std::vector<Node> all_nodes(const GeneralizedSuffixTree& tree)
{
    std::vector<Node> out{tree.root()};
    for (std::size_t at = 0; at < out.size(); ++at)
        for (Node c : tree.children(out[at]))
            out.push_back(c);
    return out;
}

void check_structure(const GeneralizedSuffixTree& tree)
{
    const auto nodes = all_nodes(tree);
    CHECK(nodes.size() == tree.node_count());
    CHECK(tree.depth(tree.root()) == 0);
    std::size_t leaves = 0;
    for (Node v : nodes) {
        if (tree.is_leaf(v)) {
            ++leaves;
            // Path labels spell the suffix with its sentinel.
            std::vector<Symbol> path;
            std::vector<Node> chain;
            for (Node u = v; u != tree.root(); u = tree.parent(u))
                chain.push_back(u);
            for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
                const auto label = tree.edge_label(*it);
                path.insert(path.end(), label.begin(), label.end());
            }
            CHECK(path == terminated_suffix(tree, tree.suffix_of(v)));
            CHECK(tree.depth(v) == path.size());
            continue;
        }
        const auto kids = tree.children(v);
        CHECK((kids.size() >= 2 || (v == tree.root() && kids.size() >= 1)));
        std::vector<Symbol> firsts;
        for (Node c : kids) {
            CHECK(tree.parent(c) == v);
            CHECK(tree.depth(c) > tree.depth(v));
            const auto label = tree.edge_label(c);
            REQUIRE(!label.empty());
            CHECK(label.size() == tree.depth(c) - tree.depth(v));
            firsts.push_back(label.front());
        }
        CHECK(std::is_sorted(firsts.begin(), firsts.end()));
        CHECK(std::adjacent_find(firsts.begin(), firsts.end()) == firsts.end());
    }
    CHECK(leaves == tree.leaf_count());
}

} // namespace

TEST_CASE("suffix array and lcp match naive sorting")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 150; ++trial) {
        const auto a = testing::random_sequence(rng, rng() % 60, 1 + trial % 4);
        const auto b = testing::random_sequence(rng, rng() % 60, 1 + trial % 4);
        const auto t = joined(a, b);
        std::vector<std::uint32_t> want(t.size());
        for (std::uint32_t i = 0; i < want.size(); ++i)
            want[i] = i;
        std::sort(want.begin(), want.end(), [&](std::uint32_t x, std::uint32_t y) {
            return std::lexicographical_compare(t.begin() + x, t.end(), t.begin() + y, t.end());
        });
        const auto sa = build_suffix_array(t);
        REQUIRE(sa == want);
        const auto lcp = build_lcp_array(t, sa);
        REQUIRE(lcp.size() == sa.size());
        CHECK(lcp[0] == 0);
        for (std::size_t r = 1; r < sa.size(); ++r)
            CHECK(lcp[r] == naive_lcp(t, sa[r - 1], sa[r]));
    }
}

TEST_CASE("small trees")
{
    const auto aa = build_gst(Sequence("a"), Sequence("a"));
    CHECK(aa.leaf_count() == 4);
    CHECK(aa.string_count() == 2);
    CHECK(aa.depth(aa.lca(aa.leaf(1, 0), aa.leaf(2, 0))) == 1);
    CHECK(aa.lce({1, 0}, {2, 0}) == 1);
    CHECK(aa.lca(aa.leaf(1, 1), aa.leaf(2, 1)) == aa.root());

    const auto abcd = build_gst(Sequence("ab"), Sequence("cd"));
    for (std::size_t i = 0; i <= 2; ++i)
        for (std::size_t j = 0; j <= 2; ++j)
            CHECK(abcd.lca(abcd.leaf(1, i), abcd.leaf(2, j)) == abcd.root());
    check_structure(abcd);

    const auto single = build_suffix_tree(Sequence("a"));
    CHECK(single.string_count() == 1);
    CHECK(single.leaf_count() == 2);
    // $1 sorts first.
    CHECK(single.suffix_of(single.leaf_at(0)) == SuffixId{1, 1});
    CHECK(single.suffix_of(single.leaf_at(1)) == SuffixId{1, 0});

    const auto empty = build_gst(Sequence(""), Sequence(""));
    CHECK(empty.leaf_count() == 2);
    check_structure(empty);
}

TEST_CASE("lce examples")
{
    const auto tree = build_gst(Sequence("abcx"), Sequence("abcy"));
    CHECK(tree.lce({1, 0}, {2, 0}) == 3);
    CHECK(tree.lce({1, 1}, {2, 1}) == 2);
    CHECK(tree.lce({1, 3}, {2, 3}) == 0);
    CHECK(tree.lce({1, 0}, {1, 0}) == 5);
    CHECK(tree.lce({2, 4}, {2, 4}) == 1);
    CHECK(tree.lce({1, 4}, {2, 4}) == 0);
}

TEST_CASE("structural invariants on random trees")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 80; ++trial) {
        const auto a = testing::random_sequence(rng, rng() % 40, 1 + trial % 4);
        const auto b = testing::random_sequence(rng, rng() % 40, 1 + trial % 4);
        const auto tree = build_gst(a, b);
        CHECK(tree.leaf_count() == a.size() + b.size() + 2);
        check_structure(tree);
        for (std::size_t r = 0; r < tree.leaf_count(); ++r) {
            const Node leaf = tree.leaf_at(r);
            CHECK(tree.rank(leaf) == r);
            CHECK(tree.leaf(tree.suffix_of(leaf)) == leaf);
            CHECK(tree.text_index(tree.suffix_of(leaf)) == tree.index_of(leaf));
        }
    }
    const auto t = build_suffix_tree(Sequence("mississippi"));
    check_structure(t);
}

TEST_CASE("lca depth equals the naive longest common extension")
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = testing::random_sequence(rng, rng() % 30, 1 + trial % 3);
        const auto b = testing::random_sequence(rng, rng() % 30, 1 + trial % 3);
        const auto tree = build_gst(a, b);
        const auto t = joined(a, b);
        std::vector<SuffixId> ids;
        for (std::size_t l = 0; l <= a.size(); ++l)
            ids.push_back({1, l});
        for (std::size_t l = 0; l <= b.size(); ++l)
            ids.push_back({2, l});
        for (const auto& x : ids) {
            for (const auto& y : ids) {
                const std::size_t want = x == y ? tree.string_length(x.string_id) - x.offset + 1
                                                : naive_lcp(t, tree.text_index(x), tree.text_index(y));
                REQUIRE(tree.lce(x, y) == want);
                const Node v = tree.lca(tree.leaf(x), tree.leaf(y));
                CHECK(tree.depth(v) == want);
                CHECK(tree.lca(tree.leaf(y), tree.leaf(x)) == v);
            }
        }
    }
}

TEST_CASE("lca of internal nodes matches an ancestor walk")
{
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const auto tree = build_gst(testing::random_sequence(rng, 25, 2), testing::random_sequence(rng, 25, 2));
        const auto nodes = all_nodes(tree);
        auto ancestors = [&](Node v) {
            std::vector<Node> out{v};
            while (out.back() != tree.root())
                out.push_back(tree.parent(out.back()));
            return out;
        };
        std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
        for (int q = 0; q < 300; ++q) {
            const Node x = nodes[pick(rng)], y = nodes[pick(rng)];
            const auto ax = ancestors(x);
            const auto ay = ancestors(y);
            Node want = tree.root();
            for (Node u : ax)
                if (std::find(ay.begin(), ay.end(), u) != ay.end()) {
                    want = u;
                    break;
                }
            REQUIRE(tree.lca(x, y) == want);
        }
    }
}

TEST_CASE("leaf order bounds lca depth between neighbours")
{
    // For ranks a < b < c, depth(lca(a, c)) <= depth(lca(a, b)).
    for (std::size_t length = 1; length <= 7; ++length) {
        for (const auto& s : testing::binary_strings(length)) {
            const auto tree = build_gst(s, s.reversed());
            const std::size_t leaves = tree.leaf_count();
            for (std::size_t a = 0; a < leaves; ++a)
                for (std::size_t b = a + 1; b < leaves; ++b)
                    for (std::size_t c = b + 1; c < leaves; ++c) {
                        const auto ac = tree.depth(tree.lca(tree.leaf_at(a), tree.leaf_at(c)));
                        REQUIRE(ac <= tree.depth(tree.lca(tree.leaf_at(a), tree.leaf_at(b))));
                        REQUIRE(ac <= tree.depth(tree.lca(tree.leaf_at(b), tree.leaf_at(c))));
                    }
        }
    }
}

TEST_CASE("handles are checked")
{
    const auto one = build_gst(Sequence("abc"), Sequence("bca"));
    const auto two = build_gst(Sequence("abc"), Sequence("bca"));
    CHECK_THROWS_AS(one.lca(one.leaf(1, 0), two.leaf(1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(one.depth(two.root()), std::invalid_argument);
    CHECK_THROWS_AS(one.rank(one.root()), std::invalid_argument);
    CHECK_THROWS(one.leaf(1, 4));
    CHECK_THROWS(one.leaf(3, 0));
    CHECK_THROWS(one.leaf_at(one.leaf_count()));
    const auto single = build_suffix_tree(Sequence("abc"));
    CHECK_THROWS(single.leaf(2, 0));
}

TEST_CASE("binary expansion keeps depths and leaves")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = testing::random_sequence(rng, rng() % 40, 1 + trial % 4);
        const auto b = testing::random_sequence(rng, rng() % 40, 1 + trial % 4);
        const auto tree = build_gst(a, b);
        const BinarySuffixTree bin(tree);
        CHECK(bin.leaf_count() == tree.leaf_count());
        CHECK(bin.root() == bin.size() - 1);
        CHECK(bin.node(bin.root()).parent == BinarySuffixTree::kNone);
        std::set<std::pair<int, std::uint32_t>> leaves;
        std::multiset<std::uint32_t> internal_depths;
        for (std::uint32_t v = 0; v < bin.size(); ++v) {
            const auto& d = bin.node(v);
            if (bin.is_leaf(v)) {
                CHECK(d.right == BinarySuffixTree::kNone);
                leaves.insert({d.string_id, d.offset});
                CHECK(d.depth == tree.depth(tree.leaf(d.string_id, d.offset)));
                continue;
            }
            // Full binary, post-order, depths grow downward.
            REQUIRE(d.right != BinarySuffixTree::kNone);
            CHECK(d.left < v);
            CHECK(d.right < v);
            CHECK(bin.node(d.left).parent == v);
            CHECK(bin.node(d.right).parent == v);
            CHECK(bin.node(d.left).depth >= d.depth);
            CHECK(bin.node(d.right).depth > d.depth);
            if (d.expanded)
                CHECK(bin.node(d.parent).depth == d.depth);
            else
                internal_depths.insert(d.depth);
        }
        CHECK(leaves.size() == tree.leaf_count());
        std::multiset<std::uint32_t> original;
        for (Node v : all_nodes(tree))
            if (!tree.is_leaf(v) && tree.children(v).size() >= 2)
                original.insert(static_cast<std::uint32_t>(tree.depth(v)));
        CHECK(internal_depths == original);
    }
}
