#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "syncstr/construction.hpp"
#include "syncstr/indexing.hpp"
#include "syncstr/insdel_code.hpp"
#include "syncstr/rational.hpp"

namespace syncstr {

struct TrialSpec {
    DecoderKind decoder = DecoderKind::min_rsd;
    AdversaryKind adversary = AdversaryKind::uniform_random;
    ChannelMode mode = ChannelMode::insdel;
    Rational delta;
    Rational beta{1, 2};      // global decoder only
    std::uint64_t seed = 0;   // per-trial seed, already derived
    int q_inner = 0;          // > 0: wrap with random message coordinates
    bool timing = false;
};

struct TrialOutcome {
    int actions = 0;
    int d_i = 0;
    int d_r = 0;
    int transmitted = 0;
    int misdecodings = 0;
    int error_free_violations = 0;
    Rational bound;
    bool bound_strict = false;  // decoded count must stay strictly below the bound
    bool bound_respected = false;
    int half_errors = -1;
    int half_error_cap = -1;
    bool half_ok = true;
    double wall_ms = 0;
};

// Misdecoding bound of one decoder on a transcript with the given error
// split, against a string certified at (property, eps).
Rational trial_bound(DecoderKind d, SyncProperty property, const Rational& eps, int n,
                     const Rational& delta, const Rational& beta, int d_i, int d_r);

// Runs channel + decoder + accounting for one seed against a certified string.
TrialOutcome run_indexing_trial(const SyncString& s, const TrialSpec& spec);

// Trials in a small thread pool; rows come back in trial order regardless of
// completion order. spec_for(t) must be safe to call from any worker.
std::vector<TrialOutcome> run_indexing_trials(const SyncString& s,
                                              const std::function<TrialSpec(int)>& spec_for,
                                              int trials);

ChannelMode decoder_channel_mode(DecoderKind d);

}  // namespace syncstr
