#pragma once

// Independent reference implementations used only by tests. They enumerate
// rather than recurse over optimal substructure, so they share no code path
// with the library DPs they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "syncstr/rational.hpp"
#include "syncstr/symbol_string.hpp"

namespace oracle {

using syncstr::Rational;
using syncstr::Symbol;
using syncstr::SymbolString;

// LCS by enumerating every subsequence of `a` and testing it against `b`.
inline int lcs_by_enumeration(const SymbolString& a, const SymbolString& b) {
    const int n = a.size();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Symbol> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(a.symbols[static_cast<std::size_t>(i)]);
        std::size_t p = 0;
        for (Symbol s : b.symbols) {
            if (p < sub.size() && sub[p] == s) ++p;
        }
        if (p == sub.size()) best = std::max(best, static_cast<int>(sub.size()));
    }
    return best;
}

inline int edit_distance_by_enumeration(const SymbolString& a, const SymbolString& b) {
    return a.size() + b.size() - 2 * lcs_by_enumeration(a, b);
}

// Walks every string matching between a and b (three moves: match, star in
// the first row, star in the second row) and evaluates the worst suffix
// ratio of each complete matching directly from its rows.
inline Rational rspd_by_enumeration(const SymbolString& a, const SymbolString& b) {
    Rational best = Rational::infinity();
    std::vector<Symbol> t1, t2;

    auto score = [&]() {
        const int len = static_cast<int>(t1.size());
        Rational worst(0);
        int s1 = 0, s2 = 0, real1 = 0;
        // Scan cuts from the back so suffix counts accumulate.
        for (int k = len - 1; k >= 0; --k) {
            if (t1[static_cast<std::size_t>(k)] == syncstr::kStar) ++s1; else ++real1;
            if (t2[static_cast<std::size_t>(k)] == syncstr::kStar) ++s2;
            Rational r = real1 == 0 ? (s1 + s2 == 0 ? Rational(0) : Rational::infinity())
                                    : Rational(s1 + s2, real1);
            if (worst < r) worst = r;
        }
        if (worst < best) best = worst;
    };

    std::function<void(int, int)> walk = [&](int i, int j) {
        if (i == a.size() && j == b.size()) {
            score();
            return;
        }
        if (i < a.size() && j < b.size() && a.symbols[static_cast<std::size_t>(i)] == b.symbols[static_cast<std::size_t>(j)]) {
            t1.push_back(a.symbols[static_cast<std::size_t>(i)]);
            t2.push_back(b.symbols[static_cast<std::size_t>(j)]);
            walk(i + 1, j + 1);
            t1.pop_back();
            t2.pop_back();
        }
        if (j < b.size()) {
            t1.push_back(syncstr::kStar);
            t2.push_back(b.symbols[static_cast<std::size_t>(j)]);
            walk(i, j + 1);
            t1.pop_back();
            t2.pop_back();
        }
        if (i < a.size()) {
            t1.push_back(a.symbols[static_cast<std::size_t>(i)]);
            t2.push_back(syncstr::kStar);
            walk(i + 1, j);
            t1.pop_back();
            t2.pop_back();
        }
    };
    walk(0, 0);
    return best;
}

// Edit distance between pad-extended suffixes, then the worst ratio by brute
// force over every suffix length.
inline Rational rsd_by_enumeration(const SymbolString& a, const SymbolString& b) {
    auto padded_suffix = [](const SymbolString& s, int k) {
        std::vector<Symbol> out;
        for (int i = 0; i < k - s.size(); ++i) out.push_back(syncstr::kPad);
        int from = std::max(0, s.size() - k);
        for (int i = from; i < s.size(); ++i) out.push_back(s.symbols[static_cast<std::size_t>(i)]);
        return out;
    };
    auto ed = [](const std::vector<Symbol>& x, const std::vector<Symbol>& y) {
        std::vector<std::vector<int>> d(x.size() + 1, std::vector<int>(y.size() + 1, 0));
        for (std::size_t p = 0; p <= x.size(); ++p) d[p][0] = static_cast<int>(p);
        for (std::size_t q = 0; q <= y.size(); ++q) d[0][q] = static_cast<int>(q);
        for (std::size_t p = 1; p <= x.size(); ++p)
            for (std::size_t q = 1; q <= y.size(); ++q) {
                d[p][q] = std::min(d[p - 1][q], d[p][q - 1]) + 1;
                if (x[p - 1] == y[q - 1]) d[p][q] = std::min(d[p][q], d[p - 1][q - 1]);
            }
        return d[x.size()][y.size()];
    };
    Rational best(0);
    for (int k = 1; k <= std::max(a.size(), b.size()); ++k) {
        Rational r(ed(padded_suffix(a, k), padded_suffix(b, k)), 2 * k);
        if (best < r) best = r;
    }
    return best;
}

// All strings over {0..q-1} with length in [0, max_len].
inline std::vector<SymbolString> all_strings(std::uint32_t q, int max_len) {
    std::vector<SymbolString> out;
    out.push_back(SymbolString({}, q));
    std::vector<SymbolString> frontier = out;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<SymbolString> next;
        for (const auto& s : frontier) {
            for (std::uint32_t c = 0; c < q; ++c) {
                SymbolString t = s;
                t.symbols.push_back(c);
                next.push_back(t);
                out.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace oracle
