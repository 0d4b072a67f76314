#include "kmismatch/cli.hpp"
#include "kmismatch/core_scan.hpp"
#include "kmismatch/one_mismatch.hpp"
#include "kmismatch/oracle.hpp"
#include "kmismatch/suffix_tree.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

namespace kmismatch::cli {

namespace {

Sequence random_sequence(std::mt19937_64& rng, std::size_t length, unsigned alphabet)
{
    std::uniform_int_distribution<unsigned> pick(0, alphabet - 1);
    std::vector<Symbol> bytes(length);
    for (auto& b : bytes)
        b = static_cast<Symbol>('a' + pick(rng));
    return Sequence(std::move(bytes));
}

bool occurrences_valid(const Sequence& s1, const Sequence& s2, const RepeatResult& r, std::size_t k)
{
    if (r.gamma == 0)
        return true;
    if (!r.witness)
        return false;
    const LcfResult as_lcf{r.gamma, r.witness->first.start, r.witness->second.start};
    return r.witness->first.string_id == 1 && r.witness->second.string_id == 2 &&
           oracle::is_valid_witness(s1, s2, k, as_lcf);
}

// Empty string on success, otherwise a description of the first failure.
std::string run_trial(std::uint64_t seed, std::size_t id, std::size_t max_length)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(id >> 32)};
    std::mt19937_64 rng(seq);
    static constexpr unsigned kAlphabets[] = {2, 4, 20};
    static constexpr std::size_t kBudgets[] = {0, 1, 2, 5};
    const unsigned sigma = kAlphabets[std::uniform_int_distribution<int>(0, 2)(rng)];
    const std::size_t k = kBudgets[std::uniform_int_distribution<int>(0, 3)(rng)];
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    const Sequence s1 = random_sequence(rng, len(rng), sigma);
    const Sequence s2 = random_sequence(rng, len(rng), sigma);

    std::ostringstream why;
    why << "trial " << id << " (n=" << s1.size() << ", m=" << s2.size() << ", sigma=" << sigma << ", k=" << k
        << "): ";
    auto fail = [&](const std::string& what) { return why.str() + what; };

    const LcfResult expected = oracle::lcf_naive(s1, s2, k);
    const std::pair<const char*, LcfResult> scans[] = {
        {"lcf_queue", lcf_queue(s1, s2, k)},
        {"lcf_const_space", lcf_const_space(s1, s2, k)},
        {"lcf_kangaroo", lcf_kangaroo(s1, s2, k)},
    };
    for (const auto& [name, got] : scans) {
        if (got.length != expected.length)
            return fail(std::string(name) + " length " + std::to_string(got.length) + " != oracle " +
                        std::to_string(expected.length));
        if (!oracle::is_valid_witness(s1, s2, k, got))
            return fail(std::string(name) + " witness exceeds the mismatch budget");
    }

    if (matching_stats_k(s1, s2, k) != oracle::ms_naive(s1, s2, k))
        return fail("matching_stats_k differs from ms_naive");
    const MsArray dual = dual_matching_stats_k(s1, s2, k);
    for (std::size_t j = 0; j < s2.size(); ++j) {
        std::size_t column = 0;
        for (std::size_t i = 0; i < s1.size(); ++i)
            column = std::max(column, oracle::phi_naive(s1, s2, k, i, j));
        if (dual.values[j] != column)
            return fail("dual_matching_stats_k differs from the phi column maximum at " + std::to_string(j));
    }

    if (!s1.empty() && !s2.empty()) {
        const std::size_t one = lcf_queue(s1, s2, 1).length;
        const RepeatResult tree = klcs1(s1, s2);
        if (tree.gamma != one)
            return fail("klcs1 " + std::to_string(tree.gamma) + " != lcf_queue(k=1) " + std::to_string(one));
        if (!occurrences_valid(s1, s2, tree, 1))
            return fail("klcs1 witness invalid");
        const RepeatResult windowed = klcs1_windowed(s1, s2);
        if (windowed.gamma != tree.gamma)
            return fail("klcs1_windowed " + std::to_string(windowed.gamma) + " != klcs1 " +
                        std::to_string(tree.gamma));
        if (!occurrences_valid(s1, s2, windowed, 1))
            return fail("klcs1_windowed witness invalid");
    }

    if (!s1.empty()) {
        const std::size_t kr = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        const std::size_t want = oracle::longest_k_repeat_naive(s1, kr);
        const std::size_t got = all_longest_k_repeats(s1, kr).gamma;
        if (got != want)
            return fail("all_longest_k_repeats(k=" + std::to_string(kr) + ") " + std::to_string(got) +
                        " != oracle " + std::to_string(want));
    }
    return {};
}

} // namespace

VerifyReport run_verification(std::uint64_t seed, std::size_t trials, std::size_t max_length, unsigned threads)
{
    std::vector<std::string> outcome(trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t id; (id = next.fetch_add(1)) < trials;)
            outcome[id] = run_trial(seed, id, max_length);
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }

    VerifyReport report;
    report.trials = trials;
    for (auto& o : outcome) {
        if (o.empty())
            ++report.passed;
        else
            report.failures.push_back(std::move(o));
    }
    return report;
}

} // namespace kmismatch::cli
