#include "kmismatch/cli.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace kmismatch::cli {

namespace {

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open file");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool is_ascii_space(unsigned char c)
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

std::string hex(unsigned char c)
{
    static const char digits[] = "0123456789abcdef";
    return std::string("0x") + digits[c >> 4] + digits[c & 15];
}

} // namespace

std::vector<FastaRecord> parse_fasta(std::string_view content, const ReadOptions& options)
{
    if (content.empty())
        throw InputError("empty FASTA input");

    std::vector<FastaRecord> records;
    std::string header;
    std::vector<Symbol> bytes;
    bool open = false;
    auto close = [&] {
        if (open)
            records.push_back({std::move(header), Sequence(std::move(bytes))});
        header.clear();
        bytes.clear();
    };

    std::size_t pos = 0;
    while (pos < content.size()) {
        std::size_t eol = content.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = content.size();
        const std::string_view line = content.substr(pos, eol - pos);
        if (!line.empty() && line.front() == '>') {
            close();
            header = std::string(line.substr(1));
            if (!header.empty() && header.back() == '\r')
                header.pop_back();
            open = true;
        } else {
            for (std::size_t i = 0; i < line.size(); ++i) {
                auto c = static_cast<unsigned char>(line[i]);
                if (is_ascii_space(c))
                    continue;
                const std::size_t offset = pos + i;
                if (!open)
                    throw InputError("sequence data before the first '>' header at byte offset " +
                                     std::to_string(offset));
                if (is_sentinel(c))
                    throw InputError("reserved byte " + hex(c) + " at byte offset " + std::to_string(offset) +
                                     " (record " + std::to_string(records.size() + 1) + ", position " +
                                     std::to_string(bytes.size()) + ")");
                if (!options.binary && c > 0x7F)
                    throw InputError("non-ASCII byte " + hex(c) + " at byte offset " + std::to_string(offset) +
                                     " (use --binary to accept)");
                if (options.normalize_case && c >= 'a' && c <= 'z')
                    c = static_cast<unsigned char>(c - 'a' + 'A');
                bytes.push_back(c);
            }
        }
        pos = eol + 1;
    }
    close();
    if (records.empty())
        throw InputError("no FASTA records found");
    return records;
}

std::vector<FastaRecord> read_fasta(const std::filesystem::path& path, const ReadOptions& options)
{
    try {
        return parse_fasta(slurp(path), options);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

Sequence parse_plain(std::string_view content)
{
    if (!content.empty() && content.back() == '\n') {
        content.remove_suffix(1);
        if (!content.empty() && content.back() == '\r')
            content.remove_suffix(1);
    }
    try {
        return Sequence(content);
    } catch (const InvalidSymbolError& e) {
        throw InputError("reserved byte " + hex(e.value()) + " at byte offset " + std::to_string(e.offset()));
    }
}

Sequence read_plain(const std::filesystem::path& path)
{
    try {
        return parse_plain(slurp(path));
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

} // namespace kmismatch::cli
