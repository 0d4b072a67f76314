#include "kmismatch/cli.hpp"
#include "kmismatch/core_scan.hpp"
#include "kmismatch/one_mismatch.hpp"
#include "kmismatch/oracle.hpp"
#include "kmismatch/suffix_tree.hpp"
#include "report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ostream>

namespace kmismatch::cli {

namespace {

constexpr double kLargeInputCells = 1e10;

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

Sequence load(const RunConfig& config, const std::string& path)
{
    if (config.format == InputFormat::plain)
        return read_plain(path);
    auto records = read_fasta(path, {config.normalize_case, config.binary});
    if (config.record == 0 || config.record > records.size())
        throw InputError(path + ": record " + std::to_string(config.record) + " requested but file has " +
                         std::to_string(records.size()));
    return std::move(records[config.record - 1].sequence);
}

int run_lcf(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const Sequence s1 = load(config, config.inputs[0]);
    const Sequence s2 = load(config, config.inputs[1]);
    if (static_cast<double>(s1.size()) * static_cast<double>(s2.size()) > kLargeInputCells)
        err << "warning: " << s1.size() << " x " << s2.size()
            << " exceeds 1e10 cell visits; this will take a long time\n";

    detail::LcfReport report;
    report.k = config.k;
    report.algorithm = std::string(algorithm_name(config.algorithm));
    report.n = s1.size();
    report.m = s2.size();

    Stopwatch clock;
    LcfResult result;
    switch (config.algorithm) {
    case Algorithm::queue: result = lcf_queue(s1, s2, config.k, {config.threads}); break;
    case Algorithm::const_space: result = lcf_const_space(s1, s2, config.k); break;
    case Algorithm::kangaroo: result = lcf_kangaroo(s1, s2, config.k); break;
    case Algorithm::stree1:
    case Algorithm::windowed: {
        const RepeatResult r = config.algorithm == Algorithm::stree1 ? klcs1(s1, s2) : klcs1_windowed(s1, s2);
        result.length = r.gamma;
        if (r.witness) {
            result.start1 = r.witness->first.start;
            result.start2 = r.witness->second.start;
        }
        break;
    }
    }
    report.elapsed_ms = clock.elapsed_ms();

    report.length = result.length;
    report.substring1 = detail::excerpt(s1, result.start1, result.length);
    report.substring2 = detail::excerpt(s2, result.start2, result.length);
    report.start1 = result.start1 + (config.one_based ? 1 : 0);
    report.start2 = result.start2 + (config.one_based ? 1 : 0);

    if (config.verify) {
        const LcfResult expected = oracle::lcf_naive(s1, s2, config.k);
        report.verified = expected.length == result.length && oracle::is_valid_witness(s1, s2, config.k, result);
    }
    detail::write(out, report, config.output, config.timing);
    return report.verified.value_or(true) ? kExitOk : kExitVerifyFailed;
}

int run_ms(const RunConfig& config, std::ostream& out)
{
    const Sequence s1 = load(config, config.inputs[0]);
    const Sequence s2 = load(config, config.inputs[1]);

    detail::MsReport report;
    report.k = config.k;
    report.n = s1.size();
    report.m = s2.size();
    report.first_position = config.one_based ? 1 : 0;
    report.orientation = config.dual ? "suffix" : "prefix";

    Stopwatch clock;
    MsArray ms = config.dual ? dual_matching_stats_k(s1, s2, config.k) : matching_stats_k(s1, s2, config.k);
    report.elapsed_ms = clock.elapsed_ms();
    report.values = std::move(ms.values);

    if (config.verify) {
        if (config.dual) {
            bool ok = true;
            for (std::size_t j = 0; j < s2.size() && ok; ++j) {
                std::size_t column = 0;
                for (std::size_t i = 0; i < s1.size(); ++i)
                    column = std::max(column, oracle::phi_naive(s1, s2, config.k, i, j));
                ok = report.values[j] == column;
            }
            report.verified = ok;
        } else {
            report.verified = oracle::ms_naive(s1, s2, config.k).values == report.values;
        }
    }
    detail::write(out, report, config.output, config.timing);
    return report.verified.value_or(true) ? kExitOk : kExitVerifyFailed;
}

int run_repeats(const RunConfig& config, std::ostream& out)
{
    const Sequence s = load(config, config.inputs[0]);
    if (s.empty())
        throw InputError(config.inputs[0] + ": repeats needs a non-empty sequence");

    detail::RepeatsReport report;
    report.k = config.k;
    report.n = s.size();

    Stopwatch clock;
    const RepeatResult r = all_longest_k_repeats(s, config.k);
    report.elapsed_ms = clock.elapsed_ms();

    report.gamma = r.gamma;
    if (r.witness) {
        report.substring1 = detail::excerpt(s, r.witness->first.start, r.gamma);
        report.substring2 = detail::excerpt(s, r.witness->second.start, r.gamma);
        report.start1 = r.witness->first.start + (config.one_based ? 1 : 0);
        report.start2 = r.witness->second.start + (config.one_based ? 1 : 0);
    }
    if (config.verify)
        report.verified = oracle::longest_k_repeat_naive(s, config.k) == r.gamma;
    detail::write(out, report, config.output, config.timing);
    return report.verified.value_or(true) ? kExitOk : kExitVerifyFailed;
}

int run_verify(const RunConfig& config, std::ostream& out)
{
    const std::uint64_t seed = config.seed.value_or(1);
    const VerifyReport report = run_verification(seed, config.trials, config.max_length, config.threads);
    detail::write(out, report, seed, config.output);
    return report.failed() == 0 ? kExitOk : kExitVerifyFailed;
}

} // namespace

std::string_view algorithm_name(Algorithm algorithm) noexcept
{
    switch (algorithm) {
    case Algorithm::queue: return "queue";
    case Algorithm::const_space: return "const-space";
    case Algorithm::kangaroo: return "kangaroo";
    case Algorithm::stree1: return "stree1";
    case Algorithm::windowed: return "windowed";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept
{
    for (Algorithm a : {Algorithm::queue, Algorithm::const_space, Algorithm::kangaroo, Algorithm::stree1,
                        Algorithm::windowed})
        if (algorithm_name(a) == name)
            return a;
    return std::nullopt;
}

void validate(const RunConfig& config)
{
    const bool tree_algorithm = config.algorithm == Algorithm::stree1 || config.algorithm == Algorithm::windowed;
    if (tree_algorithm && config.command != Command::lcf)
        throw UsageError("--algo " + std::string(algorithm_name(config.algorithm)) + " only applies to lcf");
    if (tree_algorithm && config.k != 1)
        throw UsageError("--algo " + std::string(algorithm_name(config.algorithm)) + " requires --k 1");
    if (config.command == Command::ms && config.algorithm != Algorithm::queue)
        throw UsageError("ms supports only --algo queue");

    std::size_t wanted = 0;
    switch (config.command) {
    case Command::lcf:
    case Command::ms: wanted = 2; break;
    case Command::repeats: wanted = 1; break;
    case Command::verify: wanted = 0; break;
    }
    if (config.inputs.size() != wanted)
        throw UsageError("expected " + std::to_string(wanted) + " input file(s), got " +
                         std::to_string(config.inputs.size()));
    if (config.command == Command::repeats && config.k < 1)
        throw UsageError("repeats requires --k >= 1");
    if (config.record == 0)
        throw UsageError("--record is 1-based");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        validate(config);
        if (config.isa)
            kernels::force_isa(*config.isa);
        switch (config.command) {
        case Command::lcf: return run_lcf(config, out, err);
        case Command::ms: return run_ms(config, out);
        case Command::repeats: return run_repeats(config, out);
        case Command::verify: return run_verify(config, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

unsigned threads_from_environment()
{
    const char* value = std::getenv("KMISMATCH_THREADS");
    if (value == nullptr)
        return 1;
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(value, &end, 10);
    if (end == value || *end != '\0' || parsed == 0)
        return 1;
    return static_cast<unsigned>(std::min<unsigned long>(parsed, 1024));
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Longest common substring and matching statistics with k mismatches"};
    app.require_subcommand(1);

    RunConfig config;
    config.threads = threads_from_environment();
    std::string algo = "queue";
    std::string format = "plain";
    std::string output = "json";
    std::string isa;
    bool no_timing = false;

    auto io_options = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Input format")->check(CLI::IsMember({"plain", "fasta"}));
        sub->add_option("--record", config.record, "FASTA record to use (1-based)");
        sub->add_flag("--normalize-case", config.normalize_case, "Map lowercase FASTA letters to uppercase");
        sub->add_flag("--binary", config.binary, "Accept non-ASCII bytes in FASTA input");
        sub->add_flag("--one-based", config.one_based, "Report 1-based positions");
        sub->add_flag("--verify", config.verify, "Cross-check the result with the brute-force oracle");
    };
    auto common = [&](CLI::App* sub) {
        sub->add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "tsv"}));
        sub->add_flag("--no-timing", no_timing, "Omit elapsed_ms so output is reproducible");
        sub->add_option("--isa", isa, "Force a mismatch-scan kernel (scalar, swar, sse2, avx2, neon)");
    };

    auto* lcf = app.add_subcommand("lcf", "Longest common substring with at most k mismatches");
    lcf->add_option("--k", config.k, "Mismatch budget")->capture_default_str();
    lcf->add_option("--algo", algo, "queue, const-space, kangaroo, stree1 or windowed")
        ->check(CLI::IsMember({"queue", "const-space", "kangaroo", "stree1", "windowed"}));
    lcf->add_option("inputs", config.inputs, "Two input files")->expected(2)->required();
    io_options(lcf);
    common(lcf);

    auto* ms = app.add_subcommand("ms", "Matching statistics of the second input against the first");
    ms->add_option("--k", config.k, "Mismatch budget")->capture_default_str();
    ms->add_option("--algo", algo, "Only queue is supported")->check(CLI::IsMember({"queue"}));
    ms->add_flag("--dual", config.dual, "Suffix orientation (values[j] ends at j)");
    ms->add_option("inputs", config.inputs, "Two input files")->expected(2)->required();
    io_options(ms);
    common(ms);

    auto* repeats = app.add_subcommand("repeats", "Longest k-repeat u *^k v of one input");
    std::size_t repeat_k = 1;
    repeats->add_option("--k", repeat_k, "Number of don't-care symbols")->capture_default_str();
    repeats->add_option("input", config.inputs, "Input file")->expected(1)->required();
    io_options(repeats);
    common(repeats);

    auto* verify = app.add_subcommand("verify", "Randomized cross-checks of every algorithm");
    std::uint64_t seed = 1;
    verify->add_option("--seed", seed, "Random seed")->capture_default_str();
    verify->add_option("--trials", config.trials, "Number of random trials")->capture_default_str();
    verify->add_option("--max-length", config.max_length, "Maximum random string length")->capture_default_str();
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? kExitOk : kExitUsage;
    }

    if (*lcf)
        config.command = Command::lcf;
    else if (*ms)
        config.command = Command::ms;
    else if (*repeats) {
        config.command = Command::repeats;
        config.k = repeat_k;
    } else {
        config.command = Command::verify;
        config.seed = seed;
    }
    config.algorithm = *parse_algorithm(algo);
    config.format = format == "fasta" ? InputFormat::fasta : InputFormat::plain;
    config.output = output == "tsv" ? OutputFormat::tsv : OutputFormat::json;
    config.timing = !no_timing;
    if (!isa.empty()) {
        config.isa = kernels::parse_isa(isa);
        if (!config.isa) {
            err << "error: unknown kernel '" << isa << "'\n";
            return kExitUsage;
        }
    }
    return run(config, out, err);
}

} // namespace kmismatch::cli
