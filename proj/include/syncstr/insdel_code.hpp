#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "syncstr/construction.hpp"
#include "syncstr/indexing.hpp"
#include "syncstr/rational.hpp"
#include "syncstr/reed_solomon.hpp"
#include "syncstr/symbol_string.hpp"

namespace syncstr {

enum class DecoderKind { min_rsd, min_rspd, global_lcs, deletion_greedy, two_sided_ins, two_sided_del };

std::string to_string(DecoderKind d);
DecoderKind decoder_from_string(const std::string& s);
bool decoder_is_error_free(DecoderKind d);
SyncProperty decoder_string_property(DecoderKind d);

// Worst-case misdecoding count of a decoder at block length n and action
// budget floor(n*delta), on a string certified at eps_prime.
Rational decoder_misdecoding_bound(DecoderKind d, int n, const Rational& delta,
                                   const Rational& eps_prime, const Rational& beta);

struct InsdelCodeParams {
    int n = 0;
    Rational delta;      // tolerated insdel fraction
    Rational eps;        // slack consumed by the transformation
    Rational eps_prime;  // certified quality of the attached string
    Rational beta;       // matching-rounds parameter for the global decoder
    DecoderKind decoder = DecoderKind::global_lcs;
    std::int64_t q_sync = 0;
    int gf_m = 0;                // inner field GF(2^gf_m)
    std::int64_t q_inner = 0;    // 2^gf_m when representable, else 0
    int k_msg = 0;
    int radius = 0;              // n - k_msg, half-error budget of the inner code
    Rational k_bound;            // misdecoding budget covered by the radius
    bool error_free = false;
    double rate = 0;             // k_msg*log(q_inner) / (n*(log(q_inner)+log(q_sync)))
    double rate_lower_bound = 0; // R_inner * (1 - log(q_sync)/log(q_inner))

    // True when the parameters fit an actual field/alphabet at desk scale.
    bool constructible() const { return gf_m >= 2 && gf_m <= 16 && q_sync >= 2 && q_sync <= (1LL << 31); }
};

// How the slack eps is split between the inner-code radius, the misdecoding
// budget, and the alphabet-size rate loss. The thirds are one valid recipe;
// any split with positive parts summing to at most one satisfies the same
// inequalities.
struct EpsSplits {
    Rational radius_share{1, 3};
    Rational misdecode_share{1, 3};
    Rational alphabet_share{1, 3};
};

// Sizes every parameter from (delta, eps, n, decoder) alone: picks eps_prime
// so the decoder's worst-case misdecoding bound fits the misdecode share,
// sizes the inner radius to n*delta + 2*k_bound (one k_bound when the decoder
// is error-free) and the field so the attached coordinate costs at most the
// alphabet share of rate. Throws std::invalid_argument naming the binding
// constraint when infeasible.
InsdelCodeParams code_params(const Rational& delta, const Rational& eps, int n, DecoderKind decoder,
                             const EpsSplits& splits = {});

// Desk-scale instantiation with every knob explicit; computes radius, rate
// and the covered misdecoding budget from them.
InsdelCodeParams make_params(int n, const Rational& delta, const Rational& eps, DecoderKind decoder,
                             const Rational& eps_prime, const Rational& beta, std::int64_t q_sync,
                             int gf_m, int k_msg);

// Inner-code word with erasure marks; length is always the block length n.
struct HalfErrorWord {
    std::vector<std::uint32_t> symbols;
    std::vector<std::uint8_t> erased;
};

// Erasures count one, symbol mismatches two.
int half_error_weight(const HalfErrorWord& got, const std::vector<std::uint32_t>& sent);

// Codeword file format: a self-describing params header followed by one
// `<inner> <sync>` integer pair per line. Byte-exact round trip.
std::string serialize_codeword(const InsdelCodeParams& params, const SymbolString& word);
struct ParsedCodeword {
    InsdelCodeParams params;
    SymbolString word;
};
ParsedCodeword parse_codeword(const std::string& text);

struct InsdelDecodeResult {
    bool ok = false;
    std::vector<std::uint32_t> msg;
    int erasures = 0;
    int misdecodings_seen = -1;  // filled by callers that know the transcript
};

// Encoder/decoder pair over the product alphabet: inner-code symbol paired
// with one string symbol per position.
class InsdelCode {
public:
    InsdelCode(InsdelCodeParams params, SyncString sync);

    const InsdelCodeParams& params() const { return params_; }
    const SyncString& sync() const { return sync_; }
    const ReedSolomon& rs() const { return rs_; }

    Symbol pack(std::uint32_t inner, Symbol sync_symbol) const;
    std::uint32_t inner_of(Symbol packed) const;
    Symbol sync_of(Symbol packed) const;
    SymbolString project_sync(const SymbolString& word) const;

    SymbolString encode(const std::vector<std::uint32_t>& msg) const;
    DecodedIndices run_indexing(const SymbolString& received_sync) const;
    HalfErrorWord indexing_procedure(const SymbolString& received) const;
    InsdelDecodeResult decode(const SymbolString& received) const;

private:
    InsdelCodeParams params_;
    SyncString sync_;
    ReedSolomon rs_;
};

}  // namespace syncstr
