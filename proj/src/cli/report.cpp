#include "report.hpp"

#include <json.hpp>

#include <algorithm>

namespace kmismatch::cli::detail {

using nlohmann::ordered_json;

namespace {

constexpr std::size_t kExcerptLimit = 80;

void emit(std::ostream& out, const ordered_json& j)
{
    // Inputs may be arbitrary bytes; invalid UTF-8 is replaced, not fatal.
    out << j.dump(2, ' ', false, ordered_json::error_handler_t::replace) << '\n';
}

const char* flag(bool b) { return b ? "true" : "false"; }

} // namespace

std::string excerpt(const Sequence& s, std::size_t start, std::size_t length)
{
    if (start >= s.size())
        return {};
    length = std::min({length, kExcerptLimit, s.size() - start});
    return {s.begin() + static_cast<std::ptrdiff_t>(start), s.begin() + static_cast<std::ptrdiff_t>(start + length)};
}

void write(std::ostream& out, const LcfReport& r, OutputFormat format, bool timing)
{
    if (format == OutputFormat::json) {
        ordered_json j;
        j["length"] = r.length;
        j["start1"] = r.start1;
        j["start2"] = r.start2;
        j["k"] = r.k;
        j["algorithm"] = r.algorithm;
        j["n"] = r.n;
        j["m"] = r.m;
        if (timing)
            j["elapsed_ms"] = r.elapsed_ms;
        j["substring1"] = r.substring1;
        j["substring2"] = r.substring2;
        if (r.verified)
            j["verified"] = *r.verified;
        emit(out, j);
        return;
    }
    out << "length\tstart1\tstart2\tk\talgorithm\tn\tm" << (timing ? "\telapsed_ms" : "")
        << (r.verified ? "\tverified" : "") << '\n';
    out << r.length << '\t' << r.start1 << '\t' << r.start2 << '\t' << r.k << '\t' << r.algorithm << '\t' << r.n
        << '\t' << r.m;
    if (timing)
        out << '\t' << r.elapsed_ms;
    if (r.verified)
        out << '\t' << flag(*r.verified);
    out << '\n';
}

void write(std::ostream& out, const MsReport& r, OutputFormat format, bool timing)
{
    if (format == OutputFormat::json) {
        ordered_json j;
        j["k"] = r.k;
        j["n"] = r.n;
        j["m"] = r.m;
        j["orientation"] = r.orientation;
        j["values"] = r.values;
        if (timing)
            j["elapsed_ms"] = r.elapsed_ms;
        if (r.verified)
            j["verified"] = *r.verified;
        emit(out, j);
        return;
    }
    out << "position\tvalue\n";
    for (std::size_t i = 0; i < r.values.size(); ++i)
        out << i + r.first_position << '\t' << r.values[i] << '\n';
}

void write(std::ostream& out, const RepeatsReport& r, OutputFormat format, bool timing)
{
    if (format == OutputFormat::json) {
        ordered_json j;
        j["gamma"] = r.gamma;
        j["start1"] = r.start1;
        j["start2"] = r.start2;
        j["k"] = r.k;
        j["n"] = r.n;
        if (timing)
            j["elapsed_ms"] = r.elapsed_ms;
        j["substring1"] = r.substring1;
        j["substring2"] = r.substring2;
        if (r.verified)
            j["verified"] = *r.verified;
        emit(out, j);
        return;
    }
    out << "gamma\tstart1\tstart2\tk\tn" << (timing ? "\telapsed_ms" : "") << (r.verified ? "\tverified" : "")
        << '\n';
    out << r.gamma << '\t' << r.start1 << '\t' << r.start2 << '\t' << r.k << '\t' << r.n;
    if (timing)
        out << '\t' << r.elapsed_ms;
    if (r.verified)
        out << '\t' << flag(*r.verified);
    out << '\n';
}

void write(std::ostream& out, const VerifyReport& r, std::uint64_t seed, OutputFormat format)
{
    if (format == OutputFormat::json) {
        ordered_json j;
        j["seed"] = seed;
        j["trials"] = r.trials;
        j["passed"] = r.passed;
        j["failed"] = r.failed();
        j["failures"] = r.failures;
        emit(out, j);
        return;
    }
    out << "seed\ttrials\tpassed\tfailed\n" << seed << '\t' << r.trials << '\t' << r.passed << '\t' << r.failed()
        << '\n';
    for (const auto& f : r.failures)
        out << "# " << f << '\n';
}

} // namespace kmismatch::cli::detail
