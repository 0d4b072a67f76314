#include "kmismatch/suffix_tree.hpp"

#include <stdexcept>

namespace kmismatch {

BinarySuffixTree::BinarySuffixTree(const GeneralizedSuffixTree& tree)
    : leaf_count_(tree.leaf_count())
{
    for (std::size_t j = 1; j <= tree.string_count(); ++j) {
        const SymbolView s = tree.string(static_cast<int>(j));
        strings_.emplace_back(s.begin(), s.end());
    }
    nodes_.reserve(2 * tree.leaf_count());

    auto add = [&](NodeData data) {
        nodes_.push_back(data);
        const auto id = static_cast<std::uint32_t>(nodes_.size() - 1);
        if (data.left != kNone) {
            nodes_[data.left].parent = id;
            nodes_[data.right].parent = id;
        }
        return id;
    };

    // Iterative post-order over the source tree. Each internal node folds its
    // children left to right: ((c1 c2) c3) ...; the last fold stands for the
    // node itself, earlier folds are expansion nodes.
    struct Frame {
        std::uint32_t source;
        std::size_t next_child;
        std::uint32_t acc;
    };
    std::vector<Frame> stack{{tree.root_index(), 0, kNone}};
    std::uint32_t finished = kNone;
    while (!stack.empty()) {
        Frame& top = stack.back();
        const auto kids = tree.children_at(top.source);
        if (finished != kNone) {
            if (top.acc == kNone)
                top.acc = finished;
            else
                top.acc = add({tree.depth_at(top.source), top.acc, finished, kNone, 0, 0, true});
            finished = kNone;
        }
        if (top.next_child < kids.size()) {
            const std::uint32_t child = kids[top.next_child++];
            if (child < tree.leaf_count()) {
                const std::size_t x = tree.text_index_of_rank(child);
                const bool first = x <= tree.string_length(1);
                NodeData leaf;
                leaf.depth = tree.depth_at(child);
                leaf.string_id = first ? 1 : 2;
                leaf.offset = static_cast<std::uint32_t>(first ? x : x - tree.string_length(1) - 1);
                finished = add(leaf);
            } else {
                stack.push_back({child, 0, kNone});
            }
            continue;
        }
        if (kids.size() >= 2)
            nodes_[top.acc].expanded = false;
        finished = top.acc;
        stack.pop_back();
    }
    root_ = finished;
}

SymbolView BinarySuffixTree::string(int string_id) const
{
    if (string_id < 1 || static_cast<std::size_t>(string_id) > strings_.size())
        throw std::out_of_range("string id not in tree");
    return strings_[static_cast<std::size_t>(string_id - 1)];
}

BinarySuffixTree build_binary_gst(const Sequence& s1r, const Sequence& s2r)
{
    return BinarySuffixTree(build_gst(s1r, s2r));
}

BinarySuffixTree build_binary_suffix_tree(const Sequence& sr) { return BinarySuffixTree(build_suffix_tree(sr)); }

} // namespace kmismatch
