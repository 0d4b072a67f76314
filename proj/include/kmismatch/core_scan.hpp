#pragma once

// Diagonal-wise O(nm) scans over the phi matrix: longest common substring
// with k mismatches (three variants) and matching statistics.

#include "kmismatch/sequence.hpp"
#include "kmismatch/types.hpp"

#include <cstddef>
#include <vector>

namespace kmismatch {

class GeneralizedSuffixTree;

/// FIFO of the mismatch offsets inside the current window of a diagonal.
/// Offsets are pushed in increasing order. Storage is allocated once and
/// reused across diagonals.
class MismatchQueue {
public:
    explicit MismatchQueue(std::size_t capacity);

    void clear() noexcept { head_ = size_ = 0; }
    bool empty() const noexcept { return size_ == 0; }
    std::size_t size() const noexcept { return size_; }
    std::size_t capacity() const noexcept { return slots_.size(); }

    std::size_t front() const noexcept { return slots_[head_]; }

    void push(std::size_t offset) noexcept
    {
        std::size_t tail = head_ + size_;
        if (tail >= slots_.size())
            tail -= slots_.size();
        slots_[tail] = offset;
        ++size_;
    }

    std::size_t pop() noexcept
    {
        const std::size_t out = slots_[head_];
        if (++head_ == slots_.size())
            head_ = 0;
        --size_;
        return out;
    }

private:
    std::vector<std::size_t> slots_;
    std::size_t head_ = 0;
    std::size_t size_ = 0;
};

struct ScanOptions {
    /// Worker threads for the diagonal sweep; 0 means hardware concurrency.
    unsigned threads = 1;
};

/// Queue-based k-LCF. The witness is the first maximal match in sweep
/// order: diagonals from d = -(m-1) to n-1, offsets ascending, replaced only
/// on strict improvement. Threaded runs report the same witness.
LcfResult lcf_queue(const Sequence& s1, const Sequence& s2, std::size_t k, const ScanOptions& options = {});

/// Same length as lcf_queue using a mismatch counter instead of a queue.
/// Performs no heap allocation.
LcfResult lcf_const_space(const Sequence& s1, const Sequence& s2, std::size_t k) noexcept;

struct KangarooStats {
    /// LCE queries issued per diagonal, indexed by d + m - 1.
    std::vector<std::size_t> queries_per_diagonal;

    std::size_t total() const noexcept;
};

/// k-LCF jumping between mismatches with LCE queries on `tree`, which must
/// have been built over (s1, s2). Throws std::invalid_argument otherwise.
LcfResult lcf_kangaroo(const Sequence& s1, const Sequence& s2, std::size_t k, const GeneralizedSuffixTree& tree,
                       KangarooStats* stats = nullptr);
LcfResult lcf_kangaroo(const Sequence& s1, const Sequence& s2, std::size_t k);

/// values[i]: longest prefix of S2[i..] matching a substring of S1 with at
/// most k mismatches. Scans the reversed strings.
MsArray matching_stats_k(const Sequence& s1, const Sequence& s2, std::size_t k);

/// values[j]: longest suffix of S2[0..j] matching a substring of S1 with at
/// most k mismatches, i.e. the column maxima of phi.
MsArray dual_matching_stats_k(const Sequence& s1, const Sequence& s2, std::size_t k);

} // namespace kmismatch
