#pragma once

#include "syncstr/rational.hpp"
#include "syncstr/string_matching.hpp"
#include "syncstr/symbol_string.hpp"
#include "syncstr/transcript.hpp"

namespace syncstr {

// Minimum number of insertions and deletions turning a into b. Substitutions
// are not a primitive; equal symbols match at zero cost. ED = |a|+|b|-2*LCS.
int edit_distance(const SymbolString& a, const SymbolString& b);

// Maximum-size monotone matching between a and b. Among maximum matchings the
// one with lexicographically smallest b-index sequence is returned (and the
// smallest a-indices given that), so results are deterministic.
MonotoneMatching longest_common_subsequence(const SymbolString& a, const SymbolString& b);

// Applies an adversarial script to the sent string, producing the received
// string and the position correspondence. Throws std::invalid_argument for
// out-of-range action positions or doubly-deleted positions.
Transcript apply_script(const SymbolString& sent, const EditScript& script);

// max over k in [1, max(|a|,|b|)] of ED(a-suffix_k, b-suffix_k) / (2k), where
// a suffix shorter than k is left-padded with the pad symbol; pad matches only
// pad. Beyond max(|a|,|b|) the ratio is non-increasing, so the range is
// complete.
Rational relative_suffix_distance(const SymbolString& a, const SymbolString& b);

// Matching-minimized worst suffix error ratio. Not symmetric and without a
// triangle inequality; may be infinite (e.g. against an empty a). Computed by
// the 3-case suffix DP indexed by the star count of the first row, minimized
// over that count at the end.
Rational relative_suffix_pseudo_distance(const SymbolString& a, const SymbolString& b);

// Decides relative_suffix_pseudo_distance(a, b) <= threshold without
// computing the exact value (feasibility DP over suffix walks).
bool rspd_at_most(const SymbolString& a, const SymbolString& b, const Rational& threshold);

// max over i >= 1 of error_count(upto-i, upto) / i for a transcript, the
// worst error density over sending windows ending at `upto`.
Rational suffix_error_density(const Transcript& t, int upto);

namespace detail {

// Reusable scratch for suffix-anchored edit-distance tables. The table is
// grown one L-shaped layer per suffix length k, so evaluation can stop early
// once a running maximum exceeds a caller-supplied bound.
class RsdEvaluator {
public:
    // Max suffix-ratio of (prefix a[1..ia], prefix b[1..jb]) as a rational
    // (num, den). If the running maximum strictly exceeds `abort_num/abort_den`
    // at any point, evaluation stops and {-1, 0} is returned.
    struct Value {
        long long num;
        long long den;
        bool aborted;
    };
    Value eval(const std::vector<Symbol>& a, int ia, const std::vector<Symbol>& b, int jb,
               long long abort_num, long long abort_den);

private:
    std::vector<std::uint16_t> tab_;
    int stride_ = 0;
};

}  // namespace detail

}  // namespace syncstr
