#pragma once

#include "kmismatch/kernels.hpp"
#include "kmismatch/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kmismatch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Command { lcf, ms, repeats, verify };
enum class Algorithm { queue, const_space, kangaroo, stree1, windowed };
enum class InputFormat { plain, fasta };
enum class OutputFormat { json, tsv };

std::string_view algorithm_name(Algorithm algorithm) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct RunConfig {
    Command command = Command::lcf;
    std::size_t k = 0;
    Algorithm algorithm = Algorithm::queue;
    std::vector<std::string> inputs;
    InputFormat format = InputFormat::plain;
    OutputFormat output = OutputFormat::json;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 100;
    std::size_t max_length = 40;
    std::size_t record = 1; // 1-based FASTA record
    bool normalize_case = false;
    bool binary = false;
    bool one_based = false;
    bool verify = false; // cross-check the result against the brute-force oracle
    bool dual = false;   // ms: suffix orientation
    bool timing = true;
    std::optional<kernels::Isa> isa;
    unsigned threads = 1;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Throws UsageError on an inconsistent configuration.
void validate(const RunConfig& config);

struct FastaRecord {
    std::string header;
    Sequence sequence;
};

struct ReadOptions {
    bool normalize_case = false;
    bool binary = false;
};

std::vector<FastaRecord> parse_fasta(std::string_view content, const ReadOptions& options = {});
std::vector<FastaRecord> read_fasta(const std::filesystem::path& path, const ReadOptions& options = {});

/// Raw bytes minus one trailing newline.
Sequence parse_plain(std::string_view content);
Sequence read_plain(const std::filesystem::path& path);

struct VerifyReport {
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures;

    std::size_t failed() const noexcept { return trials - passed; }
};

/// Randomized cross-checks of every algorithm against the oracles and
/// against each other. Deterministic in (seed, trials, max_length).
VerifyReport run_verification(std::uint64_t seed, std::size_t trials, std::size_t max_length, unsigned threads);

/// Executes a validated configuration; returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments (argv[0] is the program name) and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// KMISMATCH_THREADS, or 1 when unset or invalid.
unsigned threads_from_environment();

} // namespace kmismatch::cli
