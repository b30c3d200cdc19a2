#include <doctest.h>

#include "syncstr/harness.hpp"
#include "syncstr/insdel_code.hpp"

using namespace syncstr;

namespace {

std::vector<std::uint32_t> random_msg(Rng& rng, int k, std::uint32_t field) {
    std::vector<std::uint32_t> m(static_cast<std::size_t>(k));
    for (auto& v : m) v = rng.symbol(field);
    return m;
}

SyncString certified_self(int n, Rational eps, std::uint64_t seed, std::int64_t q_override = 0) {
    ConstructionConfig cfg;
    if (q_override > 0) {
        // c3 tuned so the recommended size equals the override at this eps.
        cfg.c3 = static_cast<std::int64_t>(
            q_override * eps.num() * eps.num() * eps.num() / (eps.den() * eps.den() * eps.den()));
    }
    auto r = construct_self_matching_string(n, eps, seed, cfg);
    REQUIRE(r.ok);
    return r.value;
}

}  // namespace

TEST_CASE("field arithmetic") {
    GF gf(4);
    for (std::uint32_t a = 1; a < 16; ++a) {
        CHECK(gf.mul(a, gf.inv(a)) == 1);
        for (std::uint32_t b = 0; b < 16; ++b) {
            CHECK(gf.mul(a, b) == gf.mul(b, a));
            CHECK(gf.mul(a, GF::add(b, 1)) == GF::add(gf.mul(a, b), gf.mul(a, 1)));
        }
    }
}

TEST_CASE("reed-solomon round trip and systematic prefix") {
    ReedSolomon rs(4, 15, 7);
    Rng rng(1);
    auto msg = random_msg(rng, 7, 16);
    auto word = rs.encode(msg);
    for (int i = 0; i < 7; ++i) CHECK(word[static_cast<std::size_t>(i)] == msg[static_cast<std::size_t>(i)]);
    std::vector<std::uint8_t> none(15, 0);
    auto dec = rs.decode(word, none);
    REQUIRE(dec.ok);
    CHECK(dec.msg == msg);
}

TEST_CASE("reed-solomon corrects every small error pattern exhaustively") {
    ReedSolomon rs(4, 15, 7);  // corrects 2e + s <= 8
    Rng rng(2);
    auto msg = random_msg(rng, 7, 16);
    auto word = rs.encode(msg);
    std::vector<std::uint8_t> none(15, 0);

    for (int p1 = 0; p1 < 15; ++p1) {
        for (std::uint32_t v1 = 1; v1 < 16; ++v1) {
            auto w = word;
            w[static_cast<std::size_t>(p1)] ^= v1;
            auto dec = rs.decode(w, none);
            REQUIRE(dec.ok);
            CHECK(dec.msg == msg);
        }
    }
    for (int p1 = 0; p1 < 15; ++p1) {
        for (int p2 = p1 + 1; p2 < 15; ++p2) {
            for (std::uint32_t v1 : {3u, 9u}) {
                for (std::uint32_t v2 : {5u, 12u}) {
                    auto w = word;
                    w[static_cast<std::size_t>(p1)] ^= v1;
                    w[static_cast<std::size_t>(p2)] ^= v2;
                    auto dec = rs.decode(w, none);
                    REQUIRE(dec.ok);
                    CHECK(dec.msg == msg);
                }
            }
        }
    }
}

TEST_CASE("reed-solomon handles erasures to the full radius") {
    ReedSolomon rs(4, 15, 7);
    Rng rng(3);
    auto msg = random_msg(rng, 7, 16);
    auto word = rs.encode(msg);

    // n - k erasures, no corruption.
    std::vector<std::uint8_t> er(15, 0);
    for (int i = 0; i < 8; ++i) er[static_cast<std::size_t>(i)] = 1;
    auto w = word;
    for (int i = 0; i < 8; ++i) w[static_cast<std::size_t>(i)] = 0;
    auto dec = rs.decode(w, er);
    REQUIRE(dec.ok);
    CHECK(dec.msg == msg);

    // Mixed half-error budgets 2e + s <= 8, sampled.
    for (int e = 0; e <= 4; ++e) {
        int s = 8 - 2 * e;
        for (int rep = 0; rep < 20; ++rep) {
            auto w2 = word;
            std::vector<std::uint8_t> er2(15, 0);
            std::vector<int> perm(15);
            for (int i = 0; i < 15; ++i) perm[static_cast<std::size_t>(i)] = i;
            for (int i = 14; i > 0; --i)
                std::swap(perm[static_cast<std::size_t>(i)],
                          perm[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
            for (int x = 0; x < e; ++x)
                w2[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] ^= 1 + rng.symbol(15);
            for (int x = e; x < e + s; ++x) er2[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = 1;
            auto d2 = rs.decode(w2, er2);
            REQUIRE(d2.ok);
            CHECK(d2.msg == msg);
        }
    }
}

TEST_CASE("reed-solomon never lies inside the radius, fails loudly outside") {
    ReedSolomon rs(4, 15, 7);
    Rng rng(4);
    auto msg = random_msg(rng, 7, 16);
    auto word = rs.encode(msg);
    std::vector<std::uint8_t> none(15, 0);
    int failures = 0;
    for (int rep = 0; rep < 300; ++rep) {
        auto w = word;
        // One corruption beyond the radius.
        std::vector<int> pos;
        while (pos.size() < 5) {
            int p = static_cast<int>(rng.below(15));
            bool seen = false;
            for (int x : pos) seen |= (x == p);
            if (!seen) pos.push_back(p);
        }
        for (int p : pos) w[static_cast<std::size_t>(p)] ^= 1 + rng.symbol(15);
        auto dec = rs.decode(w, none);
        if (!dec.ok) {
            ++failures;
            continue;
        }
        // Beyond the radius a different codeword may win, but whatever comes
        // back must be a genuine codeword within the claimed distance of the
        // received word.
        auto re = rs.encode(dec.msg);
        int dist = 0;
        for (int i = 0; i < 15; ++i)
            if (re[static_cast<std::size_t>(i)] != w[static_cast<std::size_t>(i)]) ++dist;
        CHECK(dist <= 4);
    }
    CHECK(failures > 0);
}

TEST_CASE("code parameter recipe stays above the target rate") {
    auto p = code_params(Rational(1, 10), Rational(1, 2), 256, DecoderKind::global_lcs);
    CHECK(p.k_msg >= 1);
    CHECK(p.rate > (Rational(1) - p.delta - p.eps).to_double());
    CHECK(p.radius >= (Rational(256) * p.delta + Rational(2) * p.k_bound).to_double() - 1e-9);
    CHECK(p.eps_prime == p.beta * p.beta);

    auto pd = code_params(Rational(0), Rational(1, 2), 64, DecoderKind::two_sided_del);
    CHECK(pd.radius == 0);
    CHECK(pd.k_msg == 64);

    CHECK_THROWS_AS(code_params(Rational(1, 2), Rational(1, 100), 64, DecoderKind::min_rsd),
                    std::invalid_argument);
}

TEST_CASE("explicit params wire through encode/indexing/decode") {
    const int n = 64;
    SyncString s = certified_self(n, Rational(1, 4), 11, 64);
    auto params = make_params(n, Rational(1, 10), Rational(1, 2), DecoderKind::global_lcs,
                              Rational(1, 4), Rational(1, 2), 64, 7, 40);
    InsdelCode code(params, s);

    Rng rng(5);
    auto msg = random_msg(rng, 40, 128);
    auto cw = code.encode(msg);
    CHECK(cw.size() == n);
    // The attached coordinate equals the certified string exactly.
    CHECK(code.project_sync(cw) == s.body);

    auto clean = code.decode(cw);
    REQUIRE(clean.ok);
    CHECK(clean.msg == msg);
    CHECK(clean.erasures == 0);

    // Half-error accounting against the true inner word across channels.
    auto inner = code.rs().encode(msg);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Rng crng(seed);
        auto script = adversary_generate(AdversaryKind::uniform_random, cw, Rational(1, 10),
                                         ChannelMode::insdel, crng);
        auto t = apply_script(cw, script);
        auto word = code.indexing_procedure(t.received);
        auto dec = code.run_indexing(code.project_sync(t.received));
        auto rep = count_misdecodings(t, dec);
        CHECK(half_error_weight(word, inner) <= t.actions() + 2 * rep.misdecodings);
    }
}

TEST_CASE("codeword serialization round trips") {
    const int n = 64;
    SyncString s = certified_self(n, Rational(1, 4), 17, 64);
    auto params = make_params(n, Rational(1, 10), Rational(1, 2), DecoderKind::global_lcs,
                              Rational(1, 4), Rational(1, 2), 64, 7, 40);
    InsdelCode code(params, s);
    Rng rng(9);
    auto cw = code.encode(random_msg(rng, 40, 128));
    std::string text = serialize_codeword(params, cw);
    auto back = parse_codeword(text);
    CHECK(back.word == cw);
    CHECK(back.params.k_msg == params.k_msg);
    CHECK(back.params.q_sync == params.q_sync);
    CHECK(back.params.delta == params.delta);
    CHECK(serialize_codeword(back.params, back.word) == text);

    CHECK_THROWS_AS(parse_codeword("garbage\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_codeword(text + "999999 0\n"), std::runtime_error);
}

TEST_CASE("rate formulas") {
    auto params = make_params(64, Rational(1, 10), Rational(1, 2), DecoderKind::global_lcs,
                              Rational(1, 4), Rational(1, 2), 64, 7, 40);
    CHECK(params.rate == doctest::Approx(40.0 * 7 / (64.0 * (7 + 6))));
    CHECK(params.rate_lower_bound == doctest::Approx((40.0 / 64) * (1 - 6.0 / 7)));
    CHECK(params.rate >= params.rate_lower_bound);
}

TEST_CASE("end-to-end recovery on a small code") {
    const int n = 64;
    SyncString s = certified_self(n, Rational(1, 4), 13, 64);
    auto params = make_params(n, Rational(1, 12), Rational(1, 2), DecoderKind::global_lcs,
                              Rational(1, 4), Rational(1, 2), 64, 7, 32);
    InsdelCode code(params, s);
    Rng rng(6);
    int recovered = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto msg = random_msg(rng, 32, 128);
        auto cw = code.encode(msg);
        Rng crng(derive_seed(99, static_cast<std::uint64_t>(trial)));
        auto script = adversary_generate(AdversaryKind::uniform_random, cw, params.delta,
                                         ChannelMode::insdel, crng);
        auto t = apply_script(cw, script);
        auto dec = code.decode(t.received);
        if (dec.ok && dec.msg == msg) ++recovered;
        // Soundness: either the right message or an explicit failure.
        if (dec.ok) CHECK(dec.msg == msg);
    }
    CHECK(recovered >= 48);
}
