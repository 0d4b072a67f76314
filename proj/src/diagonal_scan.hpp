#pragma once

#include "kmismatch/core_scan.hpp"
#include "kmismatch/kernels.hpp"

#include <algorithm>
#include <cstddef>

namespace kmismatch::detail {

// One diagonal of the phi matrix with its window bookkeeping.
//
// `next_mismatch(p)` returns the first mismatching offset >= p, or a value
// >= len when there is none. `on_run(begin, end, s)` reports that every
// offset t in [begin, end) has phi = t + 1 - s; runs tile [0, len).
//
// Invariant after each push/trim: the queue holds exactly the mismatch
// offsets in [s, t], and holds at most k of them.
template <class NextMismatch, class OnRun>
inline void scan_diagonal(std::size_t len, std::size_t k, MismatchQueue& queue, NextMismatch&& next_mismatch,
                          OnRun&& on_run)
{
    queue.clear();
    std::size_t s = 0;
    std::size_t run_start = 0;
    std::size_t p = 0;
    for (;;) {
        const std::size_t t = next_mismatch(p);
        if (t >= len) {
            if (len > run_start)
                on_run(run_start, len, s);
            return;
        }
        if (t > run_start)
            on_run(run_start, t, s);
        queue.push(t);
        if (queue.size() > k)
            s = queue.pop() + 1;
        run_start = t;
        p = t + 1;
    }
}

// Same contract as scan_diagonal with the queue replaced by a count; the
// window start is recovered by rescanning from s to its first mismatch.
template <class NextMismatch, class OnRun>
inline void scan_diagonal_counted(std::size_t len, std::size_t k, NextMismatch&& next_mismatch, OnRun&& on_run)
{
    std::size_t s = 0;
    std::size_t run_start = 0;
    std::size_t p = 0;
    std::size_t q = 0;
    for (;;) {
        const std::size_t t = next_mismatch(p);
        if (t >= len) {
            if (len > run_start)
                on_run(run_start, len, s);
            return;
        }
        if (t > run_start)
            on_run(run_start, t, s);
        if (++q > k) {
            s = next_mismatch(s) + 1;
            --q;
        }
        run_start = t;
        p = t + 1;
    }
}

// Mismatch finder over raw symbol pointers using the dispatched kernel.
// Random inputs mismatch every few symbols, so the first symbol is tested
// inline before paying for the indirect call.
struct KernelMismatch {
    const Symbol* a;
    const Symbol* b;
    std::size_t len;
    kernels::FirstMismatchFn kernel;

    std::size_t operator()(std::size_t p) const noexcept
    {
        if (p >= len)
            return len;
        if (a[p] != b[p])
            return p;
        return p + 1 + kernel(a + p + 1, b + p + 1, len - p - 1);
    }
};

// Start of diagonal d in the (n x m) matrix, d in [-(m-1), n-1].
struct Diagonal {
    std::size_t i;
    std::size_t j;
    std::size_t len;
};

inline Diagonal diagonal_at(std::ptrdiff_t d, std::size_t n, std::size_t m) noexcept
{
    const std::size_t i = d > 0 ? static_cast<std::size_t>(d) : 0;
    const std::size_t j = d < 0 ? static_cast<std::size_t>(-d) : 0;
    return {i, j, std::min(n - i, m - j)};
}

} // namespace kmismatch::detail
