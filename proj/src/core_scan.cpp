#include "kmismatch/core_scan.hpp"

#include "diagonal_scan.hpp"
#include "kmismatch/suffix_tree.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

namespace kmismatch {

using detail::Diagonal;
using detail::diagonal_at;

MismatchQueue::MismatchQueue(std::size_t capacity)
    : slots_(std::max<std::size_t>(capacity, 1))
{
}

std::size_t KangarooStats::total() const noexcept
{
    std::size_t sum = 0;
    for (std::size_t q : queries_per_diagonal)
        sum += q;
    return sum;
}

namespace {

// Enqueue-then-trim needs room for k + 1 offsets, and a diagonal never holds
// more than min(n, m) mismatches.
std::size_t queue_capacity(std::size_t n, std::size_t m, std::size_t k)
{
    return std::min(k, std::min(n, m)) + 1;
}

struct SweepBest {
    LcfResult result;
    std::ptrdiff_t diagonal = std::numeric_limits<std::ptrdiff_t>::max();
};

// Keeps the first strict maximum in sweep order.
template <class MakeMismatch>
SweepBest sweep(std::size_t n, std::size_t m, std::size_t k, std::ptrdiff_t first, std::ptrdiff_t stride,
                MakeMismatch&& make_mismatch)
{
    SweepBest best;
    MismatchQueue queue(queue_capacity(n, m, k));
    const auto last = static_cast<std::ptrdiff_t>(n) - 1;
    for (std::ptrdiff_t d = first; d <= last; d += stride) {
        const Diagonal diag = diagonal_at(d, n, m);
        detail::scan_diagonal(diag.len, k, queue, make_mismatch(d, diag),
                              [&](std::size_t, std::size_t end, std::size_t s) {
                                  if (end - s > best.result.length) {
                                      best.result = {end - s, diag.i + s, diag.j + s};
                                      best.diagonal = d;
                                  }
                              });
    }
    return best;
}

unsigned resolve_threads(unsigned requested)
{
    if (requested == 0)
        requested = std::max(1u, std::thread::hardware_concurrency());
    return requested;
}

void check_tree(const GeneralizedSuffixTree& tree, const Sequence& s1, const Sequence& s2)
{
    if (tree.string_count() != 2 || tree.string_length(1) != s1.size() || tree.string_length(2) != s2.size())
        throw std::invalid_argument("lcf_kangaroo: suffix tree was built over sequences of different lengths");
    const SymbolView t1 = tree.string(1);
    const SymbolView t2 = tree.string(2);
    if (!std::equal(t1.begin(), t1.end(), s1.begin()) || !std::equal(t2.begin(), t2.end(), s2.begin()))
        throw std::invalid_argument("lcf_kangaroo: suffix tree was built over different sequences");
}

} // namespace

LcfResult lcf_queue(const Sequence& s1, const Sequence& s2, std::size_t k, const ScanOptions& options)
{
    const std::size_t n = s1.size();
    const std::size_t m = s2.size();
    if (n == 0 || m == 0)
        return {};

    const auto kernel = kernels::active_kernel();
    auto make_mismatch = [&](std::ptrdiff_t, const Diagonal& diag) {
        return detail::KernelMismatch{s1.data() + diag.i, s2.data() + diag.j, diag.len, kernel};
    };

    const auto first = -static_cast<std::ptrdiff_t>(m) + 1;
    const auto diagonals = static_cast<std::ptrdiff_t>(n + m - 1);
    unsigned threads = resolve_threads(options.threads);
    // Spawning costs more than scanning small matrices.
    if (n * m < (std::size_t{1} << 18))
        threads = 1;
    threads = static_cast<unsigned>(std::min<std::ptrdiff_t>(threads, diagonals));

    if (threads <= 1)
        return sweep(n, m, k, first, 1, make_mismatch).result;

    // Diagonals are dealt round-robin; the merge keeps the earliest diagonal
    // among equal lengths, which is the serial sweep's witness.
    std::vector<SweepBest> partial(threads);
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned w = 0; w < threads; ++w)
            workers.emplace_back([&, w] { partial[w] = sweep(n, m, k, first + w, threads, make_mismatch); });
    }
    SweepBest best;
    for (const SweepBest& b : partial)
        if (b.result.length > best.result.length ||
            (b.result.length == best.result.length && b.result.length > 0 && b.diagonal < best.diagonal))
            best = b;
    return best.result;
}

LcfResult lcf_const_space(const Sequence& s1, const Sequence& s2, std::size_t k) noexcept
{
    const std::size_t n = s1.size();
    const std::size_t m = s2.size();
    LcfResult best;
    if (n == 0 || m == 0)
        return best;

    const auto kernel = kernels::active_kernel();
    for (auto d = -static_cast<std::ptrdiff_t>(m) + 1; d <= static_cast<std::ptrdiff_t>(n) - 1; ++d) {
        const Diagonal diag = diagonal_at(d, n, m);
        detail::scan_diagonal_counted(diag.len, k,
                                      detail::KernelMismatch{s1.data() + diag.i, s2.data() + diag.j, diag.len, kernel},
                                      [&](std::size_t, std::size_t end, std::size_t s) {
                                          if (end - s > best.length)
                                              best = {end - s, diag.i + s, diag.j + s};
                                      });
    }
    return best;
}

LcfResult lcf_kangaroo(const Sequence& s1, const Sequence& s2, std::size_t k, const GeneralizedSuffixTree& tree,
                       KangarooStats* stats)
{
    check_tree(tree, s1, s2);
    const std::size_t n = s1.size();
    const std::size_t m = s2.size();
    if (stats != nullptr)
        stats->queries_per_diagonal.assign(n + m > 0 ? n + m - 1 : 0, 0);
    if (n == 0 || m == 0)
        return {};

    // Text index of S2[j] in S1 $1 S2 $2.
    const std::size_t s2_base = n + 1;
    auto make_mismatch = [&](std::ptrdiff_t d, const Diagonal& diag) {
        std::size_t* counter =
            stats != nullptr ? &stats->queries_per_diagonal[static_cast<std::size_t>(d + static_cast<std::ptrdiff_t>(m) - 1)]
                             : nullptr;
        return [&tree, diag, s2_base, counter](std::size_t p) -> std::size_t {
            if (p >= diag.len)
                return diag.len;
            if (counter != nullptr)
                ++*counter;
            const std::uint32_t a = tree.rank_of_text_index(diag.i + p);
            const std::uint32_t b = tree.rank_of_text_index(s2_base + diag.j + p);
            return std::min<std::size_t>(p + tree.lcp_of_ranks(a, b), diag.len);
        };
    };
    return sweep(n, m, k, -static_cast<std::ptrdiff_t>(m) + 1, 1, make_mismatch).result;
}

LcfResult lcf_kangaroo(const Sequence& s1, const Sequence& s2, std::size_t k)
{
    return lcf_kangaroo(s1, s2, k, build_gst(s1, s2));
}

MsArray matching_stats_k(const Sequence& s1, const Sequence& s2, std::size_t k)
{
    const std::size_t n = s1.size();
    const std::size_t m = s2.size();
    MsArray out{std::vector<std::uint32_t>(m, 0), Orientation::prefix};
    if (n == 0 || m == 0)
        return out;

    // A suffix of S1r[..i] x S2r[..j] is the reverse of a prefix of
    // S1[n-1-i..] x S2[m-1-j..].
    const Sequence r1 = s1.reversed();
    const Sequence r2 = s2.reversed();
    const auto kernel = kernels::active_kernel();
    MismatchQueue queue(queue_capacity(n, m, k));
    std::uint32_t* values = out.values.data();
    for (auto d = -static_cast<std::ptrdiff_t>(m) + 1; d <= static_cast<std::ptrdiff_t>(n) - 1; ++d) {
        const Diagonal diag = diagonal_at(d, n, m);
        detail::scan_diagonal(diag.len, k, queue,
                              detail::KernelMismatch{r1.data() + diag.i, r2.data() + diag.j, diag.len, kernel},
                              [&](std::size_t begin, std::size_t end, std::size_t s) {
                                  for (std::size_t t = begin; t < end; ++t) {
                                      const auto phi = static_cast<std::uint32_t>(t + 1 - s);
                                      std::uint32_t& slot = values[m - 1 - (diag.j + t)];
                                      slot = std::max(slot, phi);
                                  }
                              });
    }
    return out;
}

MsArray dual_matching_stats_k(const Sequence& s1, const Sequence& s2, std::size_t k)
{
    const std::size_t n = s1.size();
    const std::size_t m = s2.size();
    MsArray out{std::vector<std::uint32_t>(m, 0), Orientation::suffix};
    if (n == 0 || m == 0)
        return out;

    const auto kernel = kernels::active_kernel();
    MismatchQueue queue(queue_capacity(n, m, k));
    std::uint32_t* values = out.values.data();
    for (auto d = -static_cast<std::ptrdiff_t>(m) + 1; d <= static_cast<std::ptrdiff_t>(n) - 1; ++d) {
        const Diagonal diag = diagonal_at(d, n, m);
        detail::scan_diagonal(diag.len, k, queue,
                              detail::KernelMismatch{s1.data() + diag.i, s2.data() + diag.j, diag.len, kernel},
                              [&](std::size_t begin, std::size_t end, std::size_t s) {
                                  for (std::size_t t = begin; t < end; ++t) {
                                      const auto phi = static_cast<std::uint32_t>(t + 1 - s);
                                      std::uint32_t& slot = values[diag.j + t];
                                      slot = std::max(slot, phi);
                                  }
                              });
    }
    return out;
}

} // namespace kmismatch
