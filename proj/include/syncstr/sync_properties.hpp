#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "syncstr/rational.hpp"
#include "syncstr/string_matching.hpp"
#include "syncstr/symbol_string.hpp"

namespace syncstr {

// A violating triple (i, j, k): the adjacent windows S[i,j) and S[j,k) are too
// close in edit distance, ED <= (1-eps)(k-i).
struct SyncViolation {
    int i;
    int j;
    int k;
    int ed;
};

struct PropertyVerdict {
    bool holds = false;
    // Set when the adjacent-interval check fails: first violation in
    // lexicographic (i, j, k) order.
    std::optional<SyncViolation> violation;
    // Set when the self-matching check fails: a monotone self-matching whose
    // bad-pair count reaches eps * |S|.
    std::optional<MonotoneMatching> bad_matching;
    int max_bad = 0;
};

struct BadIndexReport {
    Rational eps;
    std::vector<int> bad_indices;                      // sorted, 1-based
    std::vector<std::pair<int, int>> blamed_intervals; // aligned with bad_indices, closed [i, j]
};

// Adjacent-interval property: for all 1 <= i < j < k <= n+1,
// ED(S[i,j), S[j,k)) > (1-eps)(k-i), compared exactly.
PropertyVerdict check_synchronization(const SymbolString& s, const Rational& eps);

// Maximum number of bad (off-diagonal) pairs over all monotone self-matchings
// of s, with a witness matching. Good pairs can be dropped from any matching
// without affecting monotonicity or the bad count, so this equals the maximum
// matching of s against itself with diagonal pairs forbidden.
std::pair<int, MonotoneMatching> max_bad_self_matching(const SymbolString& s);

// Holds iff max_bad_self_matching(s) < eps * |s|, compared exactly.
PropertyVerdict check_self_matching(const SymbolString& s, const Rational& eps);

// Indices contained in some factor of s that fails the eps-self-matching
// check, each with one failing interval as witness.
BadIndexReport find_bad_indices(const SymbolString& s, const Rational& eps);

}  // namespace syncstr
