#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace syncstr {

using Symbol = std::uint32_t;

// Sentinel for the reserved pad symbol. It sits outside every declared
// alphabet and only shows up in transient padded suffixes, never in a stored
// string.
inline constexpr Symbol kPad = 0xFFFFFFFFu;

// Sentinel for the '*' placeholder inside string matchings.
inline constexpr Symbol kStar = 0xFFFFFFFEu;

// Integer-coded symbols over a declared alphabet of size q.
struct SymbolString {
    std::vector<Symbol> symbols;
    std::uint32_t alphabet_size = 1;

    SymbolString() = default;
    SymbolString(std::vector<Symbol> syms, std::uint32_t q) : symbols(std::move(syms)), alphabet_size(q) {
        validate();
    }
    SymbolString(std::initializer_list<Symbol> syms, std::uint32_t q)
        : symbols(syms), alphabet_size(q) {
        validate();
    }

    void validate() const {
        if (alphabet_size == 0) throw std::invalid_argument("alphabet size must be positive");
        for (Symbol s : symbols) {
            if (s >= alphabet_size)
                throw std::invalid_argument("symbol value outside declared alphabet");
        }
    }

    int size() const { return static_cast<int>(symbols.size()); }
    bool empty() const { return symbols.empty(); }

    // 1-based access matching the interval conventions used throughout.
    Symbol at1(int i) const { return symbols[static_cast<std::size_t>(i - 1)]; }

    // Half-open substring [i, j) with 1-based i. Requires 1 <= i <= j <= n+1.
    SymbolString slice(int i, int j) const {
        SymbolString out;
        out.alphabet_size = alphabet_size;
        out.symbols.assign(symbols.begin() + (i - 1), symbols.begin() + (j - 1));
        return out;
    }

    // Closed-prefix [1, i].
    SymbolString prefix(int i) const { return slice(1, i + 1); }

    friend bool operator==(const SymbolString& a, const SymbolString& b) {
        return a.symbols == b.symbols && a.alphabet_size == b.alphabet_size;
    }
};

}  // namespace syncstr
