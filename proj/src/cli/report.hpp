#pragma once

#include "kmismatch/cli.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace kmismatch::cli::detail {

struct LcfReport {
    std::size_t length = 0;
    std::size_t start1 = 0;
    std::size_t start2 = 0;
    std::size_t k = 0;
    std::string algorithm;
    std::size_t n = 0;
    std::size_t m = 0;
    double elapsed_ms = 0;
    std::string substring1;
    std::string substring2;
    std::optional<bool> verified;
};

struct MsReport {
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string orientation;
    std::vector<std::uint32_t> values;
    std::size_t first_position = 0; // 0 or 1
    double elapsed_ms = 0;
    std::optional<bool> verified;
};

struct RepeatsReport {
    std::size_t gamma = 0;
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t start1 = 0;
    std::size_t start2 = 0;
    double elapsed_ms = 0;
    std::string substring1;
    std::string substring2;
    std::optional<bool> verified;
};

void write(std::ostream& out, const LcfReport& report, OutputFormat format, bool timing);
void write(std::ostream& out, const MsReport& report, OutputFormat format, bool timing);
void write(std::ostream& out, const RepeatsReport& report, OutputFormat format, bool timing);
void write(std::ostream& out, const VerifyReport& report, std::uint64_t seed, OutputFormat format);

/// At most 80 symbols starting at `start`.
std::string excerpt(const Sequence& s, std::size_t start, std::size_t length);

} // namespace kmismatch::cli::detail
