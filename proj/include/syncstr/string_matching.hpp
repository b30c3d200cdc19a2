#pragma once

#include <utility>
#include <vector>

#include "syncstr/symbol_string.hpp"

namespace syncstr {

// A pair of equal-length rows over the alphabet plus '*'. Deleting the stars
// from tau1 / tau2 recovers the two endpoint strings, and at every position
// the two entries are equal or at least one is a star.
struct StringMatching {
    std::vector<Symbol> tau1;
    std::vector<Symbol> tau2;

    int size() const { return static_cast<int>(tau1.size()); }

    bool valid_for(const SymbolString& a, const SymbolString& b) const;

    static int star_count(const std::vector<Symbol>& row) {
        int c = 0;
        for (Symbol s : row)
            if (s == kStar) ++c;
        return c;
    }
};

// Ordered index pairs (a_i, b_i), 1-based, strictly increasing on both sides,
// with equal endpoint symbols in the two strings it relates.
struct MonotoneMatching {
    std::vector<std::pair<int, int>> pairs;

    int size() const { return static_cast<int>(pairs.size()); }

    bool valid_for(const SymbolString& a, const SymbolString& b) const {
        int pa = 0, pb = 0;
        for (auto [x, y] : pairs) {
            if (x <= pa || y <= pb) return false;
            if (x > a.size() || y > b.size()) return false;
            if (a.at1(x) != b.at1(y)) return false;
            pa = x;
            pb = y;
        }
        return true;
    }

    // Pairs with equal indices when the matching relates a string to itself.
    int good_pairs() const {
        int g = 0;
        for (auto [x, y] : pairs)
            if (x == y) ++g;
        return g;
    }
    int bad_pairs() const { return size() - good_pairs(); }
};

inline bool StringMatching::valid_for(const SymbolString& a, const SymbolString& b) const {
    if (tau1.size() != tau2.size()) return false;
    std::vector<Symbol> da, db;
    for (std::size_t k = 0; k < tau1.size(); ++k) {
        Symbol x = tau1[k], y = tau2[k];
        bool ok = (x == y) || x == kStar || y == kStar;
        if (!ok) return false;
        if (x != kStar) da.push_back(x);
        if (y != kStar) db.push_back(y);
    }
    return da == a.symbols && db == b.symbols;
}

}  // namespace syncstr
