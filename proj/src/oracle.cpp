#include "kmismatch/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace kmismatch::oracle {

std::size_t phi_naive(const Sequence& s1, const Sequence& s2, std::size_t k, std::size_t i, std::size_t j)
{
    if (i >= s1.size() || j >= s2.size())
        throw std::out_of_range("phi_naive: index out of range");
    std::size_t length = 0;
    std::size_t mismatches = 0;
    for (std::size_t h = 0; h <= std::min(i, j); ++h) {
        if (s1[i - h] != s2[j - h])
            ++mismatches;
        if (mismatches > k)
            break;
        length = h + 1;
    }
    return length;
}

std::size_t phi_naive(const Sequence& s1, const Sequence& s2, const PhiQuery& query)
{
    return phi_naive(s1, s2, query.k, query.i, query.j);
}

LcfResult lcf_naive(const Sequence& s1, const Sequence& s2, std::size_t k)
{
    LcfResult best;
    for (std::size_t i = 0; i < s1.size(); ++i) {
        for (std::size_t j = 0; j < s2.size(); ++j) {
            const std::size_t l = phi_naive(s1, s2, k, i, j);
            if (l > best.length)
                best = {l, i + 1 - l, j + 1 - l};
        }
    }
    return best;
}

MsArray ms_naive(const Sequence& s1, const Sequence& s2, std::size_t k)
{
    MsArray out{std::vector<std::uint32_t>(s2.size(), 0), Orientation::prefix};
    for (std::size_t i = 0; i < s2.size(); ++i) {
        std::size_t best = 0;
        for (std::size_t start = 0; start < s1.size(); ++start) {
            std::size_t length = 0;
            std::size_t mismatches = 0;
            while (i + length < s2.size() && start + length < s1.size()) {
                if (s1[start + length] != s2[i + length] && ++mismatches > k)
                    break;
                ++length;
            }
            best = std::max(best, length);
        }
        out.values[i] = static_cast<std::uint32_t>(best);
    }
    return out;
}

namespace {

std::size_t naive_lce(const Sequence& s, std::size_t a, std::size_t b)
{
    std::size_t l = 0;
    while (a + l < s.size() && b + l < s.size() && s[a + l] == s[b + l])
        ++l;
    return l;
}

} // namespace

std::size_t longest_k_repeat_naive(const Sequence& s, std::size_t k)
{
    if (s.empty())
        throw std::invalid_argument("longest_k_repeat_naive: empty sequence");
    if (k == 0)
        throw std::invalid_argument("longest_k_repeat_naive: k must be positive");

    const std::size_t n = s.size();
    std::size_t best = 0;
    for (std::size_t p1 = 0; p1 < n; ++p1) {
        for (std::size_t p2 = p1 + 1; p2 < n; ++p2) {
            // u = s[p1..p1+g) = s[p2..p2+g), then k don't-cares, then v.
            const std::size_t max_left = naive_lce(s, p1, p2);
            for (std::size_t g = 0; g <= max_left; ++g) {
                if (p2 + g + k > n)
                    break;
                best = std::max(best, g + k + naive_lce(s, p1 + g + k, p2 + g + k));
            }
        }
    }
    return best;
}

std::size_t hamming_distance(SymbolView a, SymbolView b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("hamming_distance: lengths differ");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a[i] != b[i];
    return d;
}

bool is_valid_witness(const Sequence& s1, const Sequence& s2, std::size_t k, const LcfResult& result)
{
    if (result.length == 0)
        return true;
    if (result.start1 + result.length > s1.size() || result.start2 + result.length > s2.size())
        return false;
    return hamming_distance(s1.view().subspan(result.start1, result.length),
                            s2.view().subspan(result.start2, result.length)) <= k;
}

} // namespace kmismatch::oracle
