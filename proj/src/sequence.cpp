#include "kmismatch/sequence.hpp"

#include <algorithm>

namespace kmismatch {

namespace {

std::string describe(std::size_t offset, Symbol value)
{
    return "reserved sentinel byte 0x0" + std::to_string(value) + " at offset " + std::to_string(offset);
}

} // namespace

InvalidSymbolError::InvalidSymbolError(std::size_t offset, Symbol value)
    : std::invalid_argument(describe(offset, value)), offset_(offset), value_(value)
{
}

Sequence::Sequence(std::string_view text)
    : Sequence(std::vector<Symbol>(text.begin(), text.end()))
{
}

Sequence::Sequence(std::vector<Symbol> bytes)
    : bytes_(std::move(bytes))
{
    if (auto at = find_reserved(bytes_))
        throw InvalidSymbolError(*at, bytes_[*at]);
}

std::optional<std::size_t> Sequence::find_reserved(SymbolView bytes) noexcept
{
    auto it = std::find_if(bytes.begin(), bytes.end(), is_sentinel);
    if (it == bytes.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - bytes.begin());
}

Sequence Sequence::reversed() const
{
    Sequence out;
    out.bytes_.assign(bytes_.rbegin(), bytes_.rend());
    return out;
}

Sequence Sequence::substr(std::size_t pos, std::size_t len) const
{
    if (pos > bytes_.size())
        throw std::out_of_range("Sequence::substr: position past end");
    len = std::min(len, bytes_.size() - pos);
    Sequence out;
    out.bytes_.assign(bytes_.begin() + pos, bytes_.begin() + pos + len);
    return out;
}

} // namespace kmismatch
