#include "kmismatch/one_mismatch.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace kmismatch {

namespace {

void require_reversed_pair(const BinarySuffixTree& btree, const GeneralizedSuffixTree& gst)
{
    if (btree.string_count() != gst.string_count())
        throw std::invalid_argument("leaf_lists_init: trees index a different number of strings");
    for (std::size_t j = 1; j <= gst.string_count(); ++j) {
        const SymbolView forward = gst.string(static_cast<int>(j));
        const SymbolView backward = btree.string(static_cast<int>(j));
        if (forward.size() != backward.size() || !std::equal(forward.begin(), forward.end(), backward.rbegin()))
            throw std::invalid_argument("leaf_lists_init: binary tree is not over the reversed strings");
    }
}

Occurrence occurrence_at(const GeneralizedSuffixTree& gst, std::uint32_t rank, std::size_t left_plus_gap,
                         std::size_t gamma)
{
    const auto id = gst.suffix_of(gst.leaf_at(rank));
    return {id.string_id, id.offset - left_plus_gap, gamma};
}

// Bottom-up pass shared by the one- and two-string variants.
RepeatResult run_bottom_up(const GeneralizedSuffixTree& gst, const BinarySuffixTree& btree, std::size_t k,
                           bool constrained, RepeatTrace* trace)
{
    LeafListArena arena;
    std::vector<LeafLists> lists = leaf_lists_init(btree, gst, k, arena);
    RepeatState state;
    state.trace = trace;

    for (std::uint32_t x = 0; x < btree.size(); ++x) {
        const auto& node = btree.node(x);
        if (node.left == BinarySuffixTree::kNone)
            continue;
        LeafLists& a = lists[node.left];
        LeafLists& b = lists[node.right];
        const std::size_t l = node.depth + k;
        if (constrained) {
            find_longest(a.first, b.second, l, gst, state);
            find_longest(a.second, b.first, l, gst, state);
        } else {
            find_longest(a.first, b.first, l, gst, state);
        }
        lists[x].first = merge_lists(std::move(a.first), std::move(b.first));
        lists[x].second = merge_lists(std::move(a.second), std::move(b.second));
        if (trace != nullptr && trace->on_node)
            trace->on_node(x, lists[x].first.size() + lists[x].second.size());
    }
    if (trace != nullptr)
        trace->element_ops += arena.element_ops();

    RepeatResult result;
    result.gamma = state.gamma;
    if (state.found) {
        Occurrence one = occurrence_at(gst, state.rank_a, state.left_plus_gap, state.gamma);
        Occurrence two = occurrence_at(gst, state.rank_b, state.left_plus_gap, state.gamma);
        if (std::tie(two.string_id, two.start) < std::tie(one.string_id, one.start))
            std::swap(one, two);
        result.witness = RepeatWitness{one, two};
    }
    return result;
}

} // namespace

std::vector<LeafLists> leaf_lists_init(const BinarySuffixTree& btree, const GeneralizedSuffixTree& gst, std::size_t k,
                                       LeafListArena& arena)
{
    require_reversed_pair(btree, gst);
    if (k == 0)
        throw std::invalid_argument("leaf_lists_init: k must be positive");

    std::vector<LeafLists> lists(btree.size());
    for (std::uint32_t x = 0; x < btree.size(); ++x) {
        const auto& node = btree.node(x);
        if (node.left != BinarySuffixTree::kNone || node.offset < k)
            continue;
        // Reversed offset l ends the left part at |S_j| - 1 - l; after k
        // don't-cares the right part starts at |S_j| - l + k.
        const std::size_t length = gst.string_length(node.string_id);
        const std::size_t right_start = length - node.offset + k;
        const std::uint32_t rank = gst.rank_of_text_index(gst.text_index({node.string_id, right_start}));
        (node.string_id == 1 ? lists[x].first : lists[x].second) = arena.singleton(rank);
    }
    return lists;
}

void find_longest(OrderedLeafList& l1, OrderedLeafList& l2, std::size_t l, const GeneralizedSuffixTree& gst,
                  RepeatState& state)
{
    if (l1.empty() || l2.empty())
        return;
    const bool swap = l1.size() > l2.size();
    OrderedLeafList& iterated = swap ? l2 : l1;
    OrderedLeafList& searched = swap ? l1 : l2;

    thread_local std::vector<LeafListArena::Neighbours> buffer;
    iterated.arena()->neighbours(iterated, searched, buffer);

    auto consider = [&](std::uint32_t p, std::uint32_t q) {
        if (state.trace != nullptr && state.trace->on_pair)
            state.trace->on_pair(p, q);
        const std::size_t candidate = l + gst.lcp_of_ranks(p, q);
        if (candidate > state.gamma) {
            state.gamma = candidate;
            state.rank_a = p;
            state.rank_b = q;
            state.left_plus_gap = l;
            state.found = true;
        }
    };
    for (const auto& n : buffer) {
        if (n.below)
            consider(n.p, *n.below);
        if (n.above)
            consider(n.p, *n.above);
    }
}

RepeatResult all_longest_k_repeats(const Sequence& s, std::size_t k, RepeatTrace* trace)
{
    if (s.empty())
        throw std::invalid_argument("all_longest_k_repeats: empty sequence");
    if (k == 0)
        throw std::invalid_argument("all_longest_k_repeats: k must be positive");
    const GeneralizedSuffixTree gst = build_suffix_tree(s);
    const BinarySuffixTree btree = build_binary_suffix_tree(s.reversed());
    return run_bottom_up(gst, btree, k, false, trace);
}

RepeatResult klcs1(const Sequence& s1, const Sequence& s2, RepeatTrace* trace)
{
    if (s1.empty() || s2.empty())
        return {};
    const GeneralizedSuffixTree gst = build_gst(s1, s2);
    const BinarySuffixTree btree = build_binary_gst(s1.reversed(), s2.reversed());
    return run_bottom_up(gst, btree, 1, true, trace);
}

RepeatResult klcs1_windowed(const Sequence& s1, const Sequence& s2, RepeatTrace* trace)
{
    const bool swapped = s2.size() > s1.size();
    const Sequence& longer = swapped ? s2 : s1;
    const Sequence& shorter = swapped ? s1 : s2;
    const std::size_t n = longer.size();
    const std::size_t m = shorter.size();
    if (m == 0)
        return {};

    RepeatResult best;
    const std::size_t windows = (n + m - 1) / m;
    for (std::size_t i = 0; i < windows; ++i) {
        const std::size_t start = m * i;
        const std::size_t end = std::min(start + 2 * m, n);
        RepeatResult r = klcs1(longer.substr(start, end - start), shorter, trace);
        if (r.gamma > best.gamma) {
            if (r.witness)
                r.witness->first.start += start;
            best = std::move(r);
        }
    }
    if (swapped && best.witness) {
        std::swap(best.witness->first, best.witness->second);
        best.witness->first.string_id = 1;
        best.witness->second.string_id = 2;
    }
    return best;
}

} // namespace kmismatch
