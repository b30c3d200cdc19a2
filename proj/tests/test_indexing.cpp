#include <doctest.h>

#include "syncstr/construction.hpp"
#include "syncstr/harness.hpp"
#include "syncstr/indexing.hpp"
#include "syncstr/strings_core.hpp"

using namespace syncstr;

namespace {

SymbolString identity_guess_target(int n, std::uint32_t q) {
    SymbolString s;
    s.alphabet_size = q;
    for (int i = 0; i < n; ++i) s.symbols.push_back(static_cast<Symbol>(i % q));
    return s;
}

std::vector<int> identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return v;
}

SyncString certified_sync(int n, Rational eps, std::uint64_t seed) {
    auto r = construct_sync_string(n, eps, seed);
    REQUIRE(r.ok);
    return r.value;
}

SyncString certified_self(int n, Rational eps, std::uint64_t seed) {
    auto r = construct_self_matching_string(n, eps, seed);
    REQUIRE(r.ok);
    return r.value;
}

}  // namespace

TEST_CASE("adversary scripts honor budget and mode") {
    SymbolString s = identity_guess_target(10, 4);
    Rng rng(1);
    auto del = adversary_generate(AdversaryKind::uniform_random, s, Rational(1, 5), ChannelMode::del_only, rng);
    CHECK(del.size() == 2);
    for (auto& a : del) CHECK(a.kind == EditAction::Kind::Delete);

    Rng rng2(2);
    CHECK(adversary_generate(AdversaryKind::burst, s, Rational(0), ChannelMode::insdel, rng2).empty());

    for (auto kind : {AdversaryKind::uniform_random, AdversaryKind::burst, AdversaryKind::greedy_repeat}) {
        for (auto mode : {ChannelMode::insdel, ChannelMode::del_only, ChannelMode::ins_only}) {
            Rng r3(99);
            auto sc = adversary_generate(kind, s, Rational(2, 5), mode, r3);
            CHECK(sc.size() == 4);
            auto t = apply_script(s, sc);
            if (mode == ChannelMode::del_only) CHECK(t.insertions == 0);
            if (mode == ChannelMode::ins_only) CHECK(t.deletions == 0);
        }
    }
}

TEST_CASE("identity channel decodes everywhere") {
    SyncString s = certified_sync(40, Rational(1, 2), 11);
    SymbolString r = s.body;
    CHECK(decode_min_rsd(s.body, r).guesses == identity(40));
    CHECK(decode_min_rspd(s.body, s.eps, r).guesses == identity(40));
    CHECK(decode_global(s.body, r, Rational(1, 2)).guesses == identity(40));
    CHECK(decode_deletion_greedy(s.body, r).guesses == identity(40));
    CHECK(decode_two_sided(s.body, r, TwoSidedMode::ins_only).guesses == identity(40));
    CHECK(decode_two_sided(s.body, r, TwoSidedMode::del_only).guesses == identity(40));
}

TEST_CASE("greedy matcher absorbs a deleted symbol into a later equal copy") {
    // Position 2 is deleted; the copy at position 3 is pulled onto slot 2 and
    // exactly that one position misdecodes.
    SymbolString s({0, 1, 1, 2, 1, 3}, 4);
    auto t = apply_script(s, {EditAction::del(2)});
    auto dec = decode_deletion_greedy(s, t.received);
    auto rep = count_misdecodings(t, dec);
    CHECK(rep.misdecodings == 1);
    CHECK(dec.guesses == std::vector<int>{1, 2, 4, 5, 6});
}

TEST_CASE("deletion greedy reports contract violations") {
    SymbolString s({0, 1, 2}, 4);
    CHECK_THROWS_AS(decode_deletion_greedy(s, SymbolString({2, 1}, 4)), ContractViolation);
    CHECK_THROWS_AS(decode_two_sided(s, SymbolString({0, 1}, 4), TwoSidedMode::ins_only), ContractViolation);
    CHECK_THROWS_AS(decode_two_sided(s, SymbolString({0, 3, 1}, 4), TwoSidedMode::del_only), ContractViolation);
}

TEST_CASE("misdecoding accounting") {
    SymbolString s({0, 1, 2}, 4);
    auto t = apply_script(s, {});
    DecodedIndices ok{identity(3)};
    auto rep = count_misdecodings(t, ok);
    CHECK(rep.misdecodings == 0);
    CHECK(rep.transmitted_total == 3);
    CHECK(rep.error_free_violations == 0);

    DecodedIndices bots{{0, 0, 0}};
    rep = count_misdecodings(t, bots);
    CHECK(rep.misdecodings == 3);
    CHECK(rep.error_free_violations == 0);

    auto ti = apply_script(s, {EditAction::ins(1, 3)});
    DecodedIndices withins{{1, 2, 2, 3}};
    rep = count_misdecodings(ti, withins);
    CHECK(rep.misdecodings == 0);
    CHECK(rep.error_free_violations == 1);

    CHECK_THROWS_AS(count_misdecodings(t, DecodedIndices{{1}}), std::invalid_argument);
}

TEST_CASE("two-sided decoding is error-free on every short script") {
    // Arbitrary strings, including repeats; error-freeness needs no certification.
    std::vector<SymbolString> strings = {
        SymbolString({0, 1, 0, 1, 2, 0, 1, 2}, 3),
        SymbolString({0, 0, 0, 0, 1, 1}, 2),
        SymbolString({2, 1, 0, 2, 1, 0, 2}, 3),
    };
    for (const auto& s : strings) {
        const int n = s.size();
        // Deletion-only: every script with one or two deletions.
        for (int p1 = 1; p1 <= n; ++p1) {
            for (int p2 = 0; p2 <= n; ++p2) {
                if (p2 == p1) continue;
                EditScript sc{EditAction::del(p1)};
                if (p2 > 0) sc.push_back(EditAction::del(p2));
                auto t = apply_script(s, sc);
                auto rep = count_misdecodings(t, decode_two_sided(s, t.received, TwoSidedMode::del_only));
                CHECK(rep.error_free_violations == 0);
            }
        }
        // Insertion-only: every script with one or two insertions.
        for (int a1 = 0; a1 <= n; ++a1) {
            for (Symbol c1 = 0; c1 < s.alphabet_size; ++c1) {
                for (int a2 = -1; a2 <= n; ++a2) {
                    for (Symbol c2 = 0; c2 < s.alphabet_size; ++c2) {
                        EditScript sc{EditAction::ins(a1, c1)};
                        if (a2 >= 0) sc.push_back(EditAction::ins(a2, c2));
                        auto t = apply_script(s, sc);
                        auto rep =
                            count_misdecodings(t, decode_two_sided(s, t.received, TwoSidedMode::ins_only));
                        CHECK(rep.error_free_violations == 0);
                        if (a2 == -1) break;
                    }
                    if (a2 == -1) break;
                }
            }
        }
    }
}

TEST_CASE("streaming decoders commit to prefixes") {
    SyncString s = certified_sync(48, Rational(1, 2), 21);
    Rng rng(5);
    auto script = adversary_generate(AdversaryKind::uniform_random, s.body, Rational(1, 6), ChannelMode::insdel, rng);
    auto t = apply_script(s.body, script);
    auto full = decode_min_rsd(s.body, t.received);
    for (int j = 1; j <= t.received.size(); ++j) {
        auto part = decode_min_rsd(s.body, t.received.prefix(j));
        for (int x = 0; x < j; ++x)
            CHECK(part.guesses[static_cast<std::size_t>(x)] == full.guesses[static_cast<std::size_t>(x)]);
    }

    Rng rng2(6);
    auto dscript = adversary_generate(AdversaryKind::uniform_random, s.body, Rational(1, 6), ChannelMode::del_only, rng2);
    auto td = apply_script(s.body, dscript);
    auto dfull = decode_deletion_greedy(s.body, td.received);
    for (int j = 1; j <= td.received.size(); ++j) {
        auto part = decode_deletion_greedy(s.body, td.received.prefix(j));
        for (int x = 0; x < j; ++x)
            CHECK(part.guesses[static_cast<std::size_t>(x)] == dfull.guesses[static_cast<std::size_t>(x)]);
    }
}

TEST_CASE("global decoding with beta=1 is plain single-matching decoding") {
    SyncString s = certified_self(60, Rational(1, 4), 31);
    Rng rng(7);
    auto script = adversary_generate(AdversaryKind::uniform_random, s.body, Rational(1, 5), ChannelMode::insdel, rng);
    auto t = apply_script(s.body, script);
    auto dec = decode_global(s.body, t.received, Rational(1));

    auto m = longest_common_subsequence(s.body, t.received);
    std::vector<int> expect(static_cast<std::size_t>(t.received.size()), 0);
    for (auto [i, tt] : m.pairs) expect[static_cast<std::size_t>(tt - 1)] = i;
    CHECK(dec.guesses == expect);
}

TEST_CASE("decoder bounds hold on randomized transcripts at small scale") {
    SyncString sync = certified_sync(48, Rational(1, 2), 41);
    SyncString self = certified_self(64, Rational(1, 4), 43);

    int trial = 0;
    for (auto kind : {AdversaryKind::uniform_random, AdversaryKind::burst, AdversaryKind::greedy_repeat}) {
        for (int rep = 0; rep < 8; ++rep) {
            ++trial;
            TrialSpec spec;
            spec.delta = Rational(1, 8);
            spec.adversary = kind;
            spec.seed = derive_seed(1000, static_cast<std::uint64_t>(trial));

            for (auto dec : {DecoderKind::min_rsd, DecoderKind::min_rspd}) {
                TrialSpec sp = spec;
                sp.decoder = dec;
                sp.mode = ChannelMode::insdel;
                auto out = run_indexing_trial(sync, sp);
                CHECK(out.bound_respected);
            }
            {
                TrialSpec sp = spec;
                sp.decoder = DecoderKind::global_lcs;
                sp.beta = Rational(1, 2);
                sp.mode = ChannelMode::insdel;
                CHECK(run_indexing_trial(self, sp).bound_respected);
            }
            {
                TrialSpec sp = spec;
                sp.decoder = DecoderKind::deletion_greedy;
                sp.mode = ChannelMode::del_only;
                CHECK(run_indexing_trial(sync, sp).bound_respected);
            }
            {
                TrialSpec sp = spec;
                sp.decoder = DecoderKind::two_sided_ins;
                sp.mode = ChannelMode::ins_only;
                auto out = run_indexing_trial(sync, sp);
                CHECK(out.bound_respected);
                CHECK(out.error_free_violations == 0);
            }
            {
                TrialSpec sp = spec;
                sp.decoder = DecoderKind::two_sided_del;
                sp.mode = ChannelMode::del_only;
                auto out = run_indexing_trial(sync, sp);
                CHECK(out.bound_respected);
                CHECK(out.error_free_violations == 0);
            }
        }
    }
}

TEST_CASE("suffix error density spikes are rare along any transcript") {
    SyncString s = certified_sync(64, Rational(1, 2), 51);
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
        Rng rng(seed);
        auto script = adversary_generate(AdversaryKind::uniform_random, s.body, Rational(1, 8), ChannelMode::insdel, rng);
        auto t = apply_script(s.body, script);
        int ci = t.insertions, cd = t.deletions;
        for (int tt : {1, 2, 3}) {
            Rational threshold = (Rational(1) - s.eps) / Rational(tt);
            int spikes = 0;
            for (int i = 1; i <= s.body.size(); ++i) {
                if (t.received_of_sent[static_cast<std::size_t>(i - 1)] == 0) continue;
                if (suffix_error_density(t, i) >= threshold) ++spikes;
            }
            CHECK(Rational(spikes) <=
                  Rational(tt) * Rational(ci + cd) / (Rational(1) - s.eps) - Rational(cd));
        }
    }
}

TEST_CASE("only one prefix sits within the pseudo-distance threshold") {
    SyncString s = certified_sync(40, Rational(1, 2), 61);
    Rational threshold = Rational(1) - s.eps;
    Rng rng(8);
    for (int it = 0; it < 30; ++it) {
        SymbolString probe;
        probe.alphabet_size = s.body.alphabet_size;
        int len = 1 + static_cast<int>(rng.below(40));
        for (int i = 0; i < len; ++i) {
            // Mix genuine windows with random noise.
            probe.symbols.push_back(rng.coin() ? s.body.at1(1 + static_cast<int>(rng.below(40)))
                                               : rng.symbol(s.body.alphabet_size));
        }
        int qualifying = 0;
        for (int i = 1; i <= s.body.size(); ++i)
            if (rspd_at_most(s.body.prefix(i), probe, threshold)) ++qualifying;
        CHECK(qualifying <= 1);
    }
}
