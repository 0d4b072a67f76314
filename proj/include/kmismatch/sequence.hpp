#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kmismatch {

using Symbol = std::uint8_t;
using SymbolView = std::span<const Symbol>;

// Terminators of S1 and S2 inside the generalized suffix tree. Neither may
// appear in an input sequence.
inline constexpr Symbol kSentinel1 = 0x00;
inline constexpr Symbol kSentinel2 = 0x01;

constexpr bool is_sentinel(Symbol c) noexcept { return c == kSentinel1 || c == kSentinel2; }

class InvalidSymbolError : public std::invalid_argument {
public:
    InvalidSymbolError(std::size_t offset, Symbol value);

    std::size_t offset() const noexcept { return offset_; }
    Symbol value() const noexcept { return value_; }

private:
    std::size_t offset_;
    Symbol value_;
};

/// Byte string validated to contain no sentinel symbol.
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::string_view text);
    explicit Sequence(std::vector<Symbol> bytes);

    /// Offset of the first reserved byte in `bytes`, if any.
    static std::optional<std::size_t> find_reserved(SymbolView bytes) noexcept;

    std::size_t size() const noexcept { return bytes_.size(); }
    bool empty() const noexcept { return bytes_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return bytes_[i]; }
    const Symbol* data() const noexcept { return bytes_.data(); }
    SymbolView view() const noexcept { return bytes_; }
    auto begin() const noexcept { return bytes_.begin(); }
    auto end() const noexcept { return bytes_.end(); }

    Sequence reversed() const;
    Sequence substr(std::size_t pos, std::size_t len) const;
    std::string str() const { return {bytes_.begin(), bytes_.end()}; }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<Symbol> bytes_;
};

} // namespace kmismatch
