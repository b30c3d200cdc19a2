#pragma once

#include <stdexcept>
#include <vector>

#include "syncstr/rational.hpp"
#include "syncstr/rng.hpp"
#include "syncstr/strings_core.hpp"
#include "syncstr/transcript.hpp"

namespace syncstr {

enum class AdversaryKind { uniform_random, burst, greedy_repeat };
enum class ChannelMode { insdel, del_only, ins_only };

std::string to_string(AdversaryKind k);
std::string to_string(ChannelMode m);
AdversaryKind adversary_from_string(const std::string& s);
ChannelMode mode_from_string(const std::string& s);

// Thrown when a received string breaks the promised channel contract (e.g. a
// deletion-only decoder fed a string that is not a subsequence of the sent
// one). Distinct from decoder weakness, which shows up as misdecodings.
class ContractViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Per received position: a 1-based sent index, or 0 for "I don't know".
struct DecodedIndices {
    std::vector<int> guesses;
    static constexpr int kBot = 0;
};

struct MisdecodingReport {
    int transmitted_total = 0;
    int correctly_decoded = 0;
    int misdecodings = 0;           // transmitted minus correctly decoded; bot counts as wrong
    int error_free_violations = 0;  // non-bot wrong outputs, including on inserted positions
};

// Generates a script with exactly floor(n * delta) actions against `sent`.
// greedy_repeat re-inserts copies of nearby stream symbols to spoof positions.
EditScript adversary_generate(AdversaryKind kind, const SymbolString& sent, const Rational& delta,
                              ChannelMode mode, Rng& rng);

// Streaming: position j gets the prefix of `sync` whose suffix distance to
// received[1..j] is minimal (smallest index on ties). Never outputs bot.
DecodedIndices decode_min_rsd(const SymbolString& sync, const SymbolString& received);

// Streaming: position j gets the unique prefix whose suffix pseudo-distance
// to received[1..j] is at most 1-eps, or bot when no prefix qualifies.
DecodedIndices decode_min_rspd(const SymbolString& sync, const Rational& eps,
                               const SymbolString& received);

// ceil(1/beta) rounds of maximum matching between `sync` and the still
// unmatched received positions; sync index i is decoded only when it was
// matched in exactly one round.
DecodedIndices decode_global(const SymbolString& sync, const SymbolString& received,
                             const Rational& beta);

// Deletion-only channels: matches received greedily to the left-most possible
// subsequence of sync. Streaming, linear time.
DecodedIndices decode_deletion_greedy(const SymbolString& sync, const SymbolString& received);

enum class TwoSidedMode { ins_only, del_only };

// One-sided channels: output index i at position t only when the left-most
// and right-most saturating matchings agree on (i, t). Error-free: a wrong
// non-bot index is never produced.
DecodedIndices decode_two_sided(const SymbolString& sync, const SymbolString& received,
                                TwoSidedMode mode);

MisdecodingReport count_misdecodings(const Transcript& t, const DecodedIndices& guesses);

}  // namespace syncstr
