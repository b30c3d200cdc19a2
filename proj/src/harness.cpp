#include "syncstr/harness.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace syncstr {

ChannelMode decoder_channel_mode(DecoderKind d) {
    switch (d) {
        case DecoderKind::deletion_greedy:
        case DecoderKind::two_sided_del:
            return ChannelMode::del_only;
        case DecoderKind::two_sided_ins:
            return ChannelMode::ins_only;
        default:
            return ChannelMode::insdel;
    }
}

Rational trial_bound(DecoderKind d, SyncProperty property, const Rational& eps, int n,
                     const Rational& delta, const Rational& beta, int d_i, int d_r) {
    const Rational one_minus = Rational(1) - eps;
    switch (d) {
        case DecoderKind::min_rsd:
            if (property == SyncProperty::full_sync)
                return Rational(2) * Rational(n) * delta / one_minus;
            return Rational(n) * (Rational(4) * delta + Rational(6) * eps);
        case DecoderKind::min_rspd:
            return Rational(d_i) / one_minus + Rational(d_r) * eps / one_minus;
        case DecoderKind::global_lcs:
            return (Rational(n) + Rational(d_i) - Rational(d_r)) * beta + (eps / beta) * Rational(n);
        case DecoderKind::deletion_greedy:
        case DecoderKind::two_sided_del:
            return eps / one_minus * Rational(d_r);
        case DecoderKind::two_sided_ins:
            return Rational(d_i) / one_minus;
    }
    return Rational(0);
}

TrialOutcome run_indexing_trial(const SyncString& s, const TrialSpec& spec) {
    TrialOutcome out;
    Rng rng(spec.seed);
    const int n = s.body.size();

    const auto t0 = std::chrono::steady_clock::now();

    SymbolString sent;
    std::vector<std::uint32_t> inner;
    const bool wrapped = spec.q_inner > 0;
    if (wrapped) {
        sent.alphabet_size =
            static_cast<std::uint32_t>(static_cast<std::uint64_t>(spec.q_inner) * s.body.alphabet_size);
        inner.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            std::uint32_t m = rng.symbol(static_cast<std::uint32_t>(spec.q_inner));
            inner.push_back(m);
            sent.symbols.push_back(static_cast<Symbol>(
                static_cast<std::uint64_t>(m) * s.body.alphabet_size + s.body.at1(i)));
        }
    } else {
        sent = s.body;
    }

    EditScript script = adversary_generate(spec.adversary, sent, spec.delta, spec.mode, rng);
    Transcript t = apply_script(sent, script);
    out.actions = t.actions();
    out.d_i = t.insertions;
    out.d_r = t.deletions;
    out.transmitted = t.transmitted();

    SymbolString received_sync;
    if (wrapped) {
        received_sync.alphabet_size = s.body.alphabet_size;
        for (Symbol v : t.received.symbols)
            received_sync.symbols.push_back(static_cast<Symbol>(v % s.body.alphabet_size));
    } else {
        received_sync = t.received;
    }

    DecodedIndices dec;
    switch (spec.decoder) {
        case DecoderKind::min_rsd: dec = decode_min_rsd(s.body, received_sync); break;
        case DecoderKind::min_rspd: dec = decode_min_rspd(s.body, s.eps, received_sync); break;
        case DecoderKind::global_lcs: dec = decode_global(s.body, received_sync, spec.beta); break;
        case DecoderKind::deletion_greedy: dec = decode_deletion_greedy(s.body, received_sync); break;
        case DecoderKind::two_sided_ins: dec = decode_two_sided(s.body, received_sync, TwoSidedMode::ins_only); break;
        case DecoderKind::two_sided_del: dec = decode_two_sided(s.body, received_sync, TwoSidedMode::del_only); break;
    }

    MisdecodingReport rep = count_misdecodings(t, dec);
    out.misdecodings = rep.misdecodings;
    out.error_free_violations = rep.error_free_violations;
    out.bound = trial_bound(spec.decoder, s.property, s.eps, n, spec.delta, spec.beta, out.d_i, out.d_r);
    out.bound_strict = spec.decoder == DecoderKind::min_rspd;
    out.bound_respected = out.bound_strict ? Rational(out.misdecodings) < out.bound
                                           : Rational(out.misdecodings) <= out.bound;
    if (decoder_is_error_free(spec.decoder) && out.error_free_violations != 0) out.bound_respected = false;

    if (wrapped) {
        // Reassemble the inner-code word from the decoded indices and account
        // for its half-error weight against the sent coordinates.
        std::vector<int> claims(static_cast<std::size_t>(n) + 1, 0);
        std::vector<int> claim_pos(static_cast<std::size_t>(n) + 1, 0);
        for (int j = 1; j <= t.received.size(); ++j) {
            int g = dec.guesses[static_cast<std::size_t>(j - 1)];
            if (g != DecodedIndices::kBot) {
                ++claims[static_cast<std::size_t>(g)];
                claim_pos[static_cast<std::size_t>(g)] = j;
            }
        }
        HalfErrorWord word;
        word.symbols.assign(static_cast<std::size_t>(n), 0);
        word.erased.assign(static_cast<std::size_t>(n), 1);
        for (int i = 1; i <= n; ++i) {
            if (claims[static_cast<std::size_t>(i)] == 1) {
                Symbol v = t.received.at1(claim_pos[static_cast<std::size_t>(i)]);
                word.symbols[static_cast<std::size_t>(i - 1)] =
                    static_cast<std::uint32_t>(v / s.body.alphabet_size);
                word.erased[static_cast<std::size_t>(i - 1)] = 0;
            }
        }
        out.half_errors = half_error_weight(word, inner);
        out.half_error_cap =
            out.actions + (decoder_is_error_free(spec.decoder) ? 1 : 2) * out.misdecodings;
        out.half_ok = out.half_errors <= out.half_error_cap;
    }

    if (spec.timing) {
        out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    return out;
}

std::vector<TrialOutcome> run_indexing_trials(const SyncString& s,
                                              const std::function<TrialSpec(int)>& spec_for,
                                              int trials) {
    std::vector<TrialOutcome> out(static_cast<std::size_t>(trials));
    unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    if (trials < 4) workers = 1;
    std::atomic<int> next{0};
    auto work = [&] {
        for (;;) {
            int t = next.fetch_add(1);
            if (t >= trials) break;
            out[static_cast<std::size_t>(t)] = run_indexing_trial(s, spec_for(t));
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return out;
}

}  // namespace syncstr
