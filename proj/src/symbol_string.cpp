#include "runlab/symbol_string.hpp"

#include <algorithm>

namespace runlab {

SymbolString::SymbolString(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    std::vector<Symbol> sorted = symbols_;
    std::sort(sorted.begin(), sorted.end());
    alphabet_size_ = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

SymbolString SymbolString::from_bytes(std::string_view bytes) {
    std::vector<Symbol> s;
    s.reserve(bytes.size());
    for (unsigned char c : bytes) s.push_back(static_cast<Symbol>(c));
    return SymbolString(std::move(s));
}

Symbol SymbolString::at(std::size_t pos) const {
    if (pos < 1 || pos > symbols_.size())
        throw ContractViolation("position " + std::to_string(pos) + " outside 1.." +
                                std::to_string(symbols_.size()));
    return symbols_[pos - 1];
}

std::string SymbolString::to_bytes() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>(static_cast<unsigned char>(s)));
    return out;
}

}  // namespace runlab
