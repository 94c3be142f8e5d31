#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace runlab {

using Symbol = std::int32_t;

/// Raised when a caller breaks an operation's precondition (bad position,
/// bad parameter, guard exceeded).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A string over an ordered alphabet. Positions are 1-based in every public
/// API of this library; `operator[]` is the only 0-based accessor.
class SymbolString {
public:
    SymbolString() = default;
    explicit SymbolString(std::vector<Symbol> symbols);

    /// Byte string; byte order is the alphabet order.
    static SymbolString from_bytes(std::string_view bytes);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }

    /// Number of distinct symbols actually present.
    std::size_t alphabet_size() const { return alphabet_size_; }

    Symbol operator[](std::size_t zero_based) const { return symbols_[zero_based]; }

    /// 1-based access, checked.
    Symbol at(std::size_t pos) const;

    std::span<const Symbol> view() const { return symbols_; }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    /// Symbols rendered as bytes (values are truncated to 8 bits).
    std::string to_bytes() const;

    friend bool operator==(const SymbolString&, const SymbolString&) = default;

private:
    std::vector<Symbol> symbols_;
    std::size_t alphabet_size_ = 0;
};

}  // namespace runlab
