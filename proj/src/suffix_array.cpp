#include "kmismatch/suffix_tree.hpp"

#include <algorithm>

namespace kmismatch {

// Prefix doubling with two counting-sort passes per round: O(n log n).
std::vector<std::uint32_t> build_suffix_array(std::span<const std::uint8_t> text)
{
    const std::size_t n = text.size();
    std::vector<std::uint32_t> sa(n), rank(n), next_rank(n), order(n);
    if (n == 0)
        return sa;

    std::vector<std::uint32_t> count(std::max<std::size_t>(256, n) + 1, 0);
    for (std::uint8_t c : text)
        ++count[c + 1];
    for (std::size_t c = 1; c <= 256; ++c)
        count[c] += count[c - 1];
    for (std::size_t i = 0; i < n; ++i)
        sa[count[text[i]]++] = static_cast<std::uint32_t>(i);

    std::uint32_t classes = 0;
    for (std::size_t r = 0; r < n; ++r) {
        if (r > 0 && text[sa[r]] != text[sa[r - 1]])
            ++classes;
        rank[sa[r]] = classes;
    }

    for (std::size_t h = 1; classes + 1 < n; h <<= 1) {
        // Order by second key: suffixes without a second half first.
        std::size_t w = 0;
        for (std::size_t i = n - h; i < n; ++i)
            order[w++] = static_cast<std::uint32_t>(i);
        for (std::size_t r = 0; r < n; ++r)
            if (sa[r] >= h)
                order[w++] = static_cast<std::uint32_t>(sa[r] - h);

        // Stable counting sort by first key.
        std::fill(count.begin(), count.begin() + classes + 2, 0);
        for (std::size_t i = 0; i < n; ++i)
            ++count[rank[i] + 1];
        for (std::size_t c = 1; c <= classes + 1; ++c)
            count[c] += count[c - 1];
        for (std::size_t x = 0; x < n; ++x)
            sa[count[rank[order[x]]]++] = order[x];

        auto second = [&](std::uint32_t i) -> std::int64_t { return i + h < n ? rank[i + h] : -1; };
        std::uint32_t fresh = 0;
        next_rank[sa[0]] = 0;
        for (std::size_t r = 1; r < n; ++r) {
            if (rank[sa[r]] != rank[sa[r - 1]] || second(sa[r]) != second(sa[r - 1]))
                ++fresh;
            next_rank[sa[r]] = fresh;
        }
        rank.swap(next_rank);
        classes = fresh;
    }
    return sa;
}

// Kasai et al.: lcp[r] = LCP(suffix sa[r-1], suffix sa[r]), lcp[0] = 0.
std::vector<std::uint32_t> build_lcp_array(std::span<const std::uint8_t> text,
                                           std::span<const std::uint32_t> suffix_array)
{
    const std::size_t n = text.size();
    std::vector<std::uint32_t> lcp(n, 0), rank(n);
    for (std::size_t r = 0; r < n; ++r)
        rank[suffix_array[r]] = static_cast<std::uint32_t>(r);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = suffix_array[rank[i] - 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h])
            ++h;
        lcp[rank[i]] = static_cast<std::uint32_t>(h);
        if (h > 0)
            --h;
    }
    return lcp;
}

} // namespace kmismatch
