// Command-line front end: construct and verify certified strings, benchmark
// the indexing decoders against adversarial channels, and run the end-to-end
// codec demonstration. Reports are deterministic byte-for-byte for a fixed
// configuration; wall-clock timing is opt-in because it breaks that.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "syncstr/construction.hpp"
#include "syncstr/harness.hpp"
#include "syncstr/insdel_code.hpp"
#include "syncstr/sync_properties.hpp"

using json = nlohmann::ordered_json;
using namespace syncstr;

namespace {

std::string fmt_ms(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string fmt_rate(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open for writing: " + out_path);
        f << text;
    }
}

SyncString obtain_string(const std::string& path, int n, const std::string& eps_str,
                         const std::string& property, std::uint64_t string_seed) {
    if (!path.empty()) return read_sync_string_file(path);
    Rational eps = Rational::parse(eps_str);
    SyncProperty prop = property_from_string(property);
    ConstructResult r = prop == SyncProperty::full_sync
                            ? construct_sync_string(n, eps, string_seed)
                            : construct_self_matching_string(n, eps, string_seed);
    if (!r.ok) throw std::runtime_error("string construction failed: " + r.error);
    return r.value;
}

int cmd_construct(int n, const std::string& eps_str, const std::string& property,
                  std::uint64_t seed, const std::string& out) {
    Rational eps = Rational::parse(eps_str);
    SyncProperty prop = property_from_string(property);
    ConstructResult r = prop == SyncProperty::full_sync ? construct_sync_string(n, eps, seed)
                                                        : construct_self_matching_string(n, eps, seed);
    if (!r.ok) {
        std::cerr << "construction failed: " << r.error << "\n";
        return 1;
    }
    std::string text = serialize_sync_string(r.value);
    std::ostream& summary = out.empty() ? std::cerr : std::cout;
    summary << "certified property=" << to_string(prop) << " n=" << n << " eps=" << eps.str()
            << " q=" << r.value.body.alphabet_size << " seed=" << seed
            << " resamples=" << r.value.resamples << " retries=" << r.value.retries << "\n";
    emit(text, out);
    return 0;
}

int cmd_verify(const std::string& path, const std::string& eps_str, const std::string& property) {
    SyncString s = read_sync_string_file(path);
    Rational eps = eps_str.empty() ? s.eps : Rational::parse(eps_str);
    SyncProperty prop = property.empty() ? s.property : property_from_string(property);

    if (prop == SyncProperty::full_sync) {
        auto v = check_synchronization(s.body, eps);
        if (v.holds) {
            std::cout << "OK full_sync holds at eps=" << eps.str() << " for n=" << s.body.size() << "\n";
            return 0;
        }
        const auto& w = *v.violation;
        std::cout << "VIOLATION full_sync eps=" << eps.str() << " triple i=" << w.i << " j=" << w.j
                  << " k=" << w.k << " ed=" << w.ed << " needed> "
                  << ((Rational(1) - eps) * Rational(w.k - w.i)).str() << "\n";
        return 1;
    }
    auto v = check_self_matching(s.body, eps);
    if (v.holds) {
        std::cout << "OK self_matching holds at eps=" << eps.str() << " max_bad=" << v.max_bad
                  << " < " << (eps * Rational(s.body.size())).str() << "\n";
        return 0;
    }
    std::cout << "VIOLATION self_matching eps=" << eps.str() << " max_bad=" << v.max_bad
              << " >= " << (eps * Rational(s.body.size())).str() << " witness";
    for (auto [a, b] : v.bad_matching->pairs) std::cout << " (" << a << "," << b << ")";
    std::cout << "\n";
    return 1;
}

struct BenchConfig {
    std::string string_path;
    int n = 100;
    std::string eps = "1/2";
    std::string property = "full_sync";
    std::uint64_t string_seed = 1;
    std::string decoder = "min_rsd";
    std::string adversary = "mix";
    std::string mode;
    std::string delta = "0.1";
    std::string beta = "1/2";
    int trials = 20;
    std::uint64_t seed = 1;
    int q_inner = 0;
    std::string format = "csv";
    std::string out;
    bool timing = false;
};

int cmd_bench(const BenchConfig& cfg) {
    SyncString s = obtain_string(cfg.string_path, cfg.n, cfg.eps, cfg.property, cfg.string_seed);
    DecoderKind decoder = decoder_from_string(cfg.decoder);
    ChannelMode mode = cfg.mode.empty() ? decoder_channel_mode(decoder) : mode_from_string(cfg.mode);
    if ((decoder == DecoderKind::deletion_greedy || decoder == DecoderKind::two_sided_del) &&
        mode != ChannelMode::del_only)
        throw CLI::ValidationError("--mode", "decoder requires a deletion-only channel");
    if (decoder == DecoderKind::two_sided_ins && mode != ChannelMode::ins_only)
        throw CLI::ValidationError("--mode", "decoder requires an insertion-only channel");

    const bool mix = cfg.adversary == "mix";
    AdversaryKind fixed_kind = mix ? AdversaryKind::uniform_random : adversary_from_string(cfg.adversary);
    static constexpr AdversaryKind kMix[3] = {AdversaryKind::uniform_random, AdversaryKind::burst,
                                              AdversaryKind::greedy_repeat};

    std::vector<AdversaryKind> kinds(static_cast<std::size_t>(cfg.trials));
    for (int t = 0; t < cfg.trials; ++t) {
        kinds[static_cast<std::size_t>(t)] = mix ? kMix[t % 3] : fixed_kind;
    }
    const Rational delta = Rational::parse(cfg.delta);
    const Rational beta = Rational::parse(cfg.beta);
    std::vector<TrialOutcome> rows = run_indexing_trials(
        s,
        [&](int t) {
            TrialSpec spec;
            spec.decoder = decoder;
            spec.adversary = kinds[static_cast<std::size_t>(t)];
            spec.mode = mode;
            spec.delta = delta;
            spec.beta = beta;
            spec.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
            spec.q_inner = cfg.q_inner;
            spec.timing = cfg.timing;
            return spec;
        },
        cfg.trials);

    bool all_ok = true;
    int max_mis = 0;
    for (const auto& r : rows) {
        all_ok = all_ok && r.bound_respected && r.half_ok;
        max_mis = std::max(max_mis, r.misdecodings);
    }

    if (cfg.format == "json") {
        json doc;
        doc["schema"] = "synctool/bench-indexing/v1";
        doc["config"] = {{"decoder", cfg.decoder},
                         {"property", to_string(s.property)},
                         {"n", s.body.size()},
                         {"eps", s.eps.str()},
                         {"delta", Rational::parse(cfg.delta).str()},
                         {"beta", Rational::parse(cfg.beta).str()},
                         {"adversary", cfg.adversary},
                         {"mode", to_string(mode)},
                         {"trials", cfg.trials},
                         {"seed", cfg.seed},
                         {"q_inner", cfg.q_inner}};
        doc["rows"] = json::array();
        for (int t = 0; t < cfg.trials; ++t) {
            const auto& r = rows[static_cast<std::size_t>(t)];
            doc["rows"].push_back({{"trial", t},
                                   {"adversary", to_string(kinds[static_cast<std::size_t>(t)])},
                                   {"seed", derive_seed(cfg.seed, static_cast<std::uint64_t>(t))},
                                   {"actions", r.actions},
                                   {"d_i", r.d_i},
                                   {"d_r", r.d_r},
                                   {"transmitted", r.transmitted},
                                   {"misdecodings", r.misdecodings},
                                   {"error_free_violations", r.error_free_violations},
                                   {"bound", r.bound.str()},
                                   {"bound_respected", r.bound_respected},
                                   {"half_errors", r.half_errors},
                                   {"half_cap", r.half_error_cap},
                                   {"half_ok", r.half_ok},
                                   {"wall_ms", fmt_ms(r.wall_ms)}});
        }
        doc["aggregate"] = {{"max_misdecodings", max_mis}, {"all_bounds_respected", all_ok}};
        emit(doc.dump(2) + "\n", cfg.out);
    } else {
        std::ostringstream os;
        os << "schema,decoder,property,n,eps,delta,beta,adversary,mode,trial,seed,actions,d_i,d_r,"
              "transmitted,misdecodings,error_free_violations,bound,bound_respected,half_errors,half_cap,"
              "half_ok,wall_ms\n";
        for (int t = 0; t < cfg.trials; ++t) {
            const auto& r = rows[static_cast<std::size_t>(t)];
            os << "bench-indexing/v1," << cfg.decoder << "," << to_string(s.property) << ","
               << s.body.size() << "," << s.eps.str() << "," << Rational::parse(cfg.delta).str() << ","
               << Rational::parse(cfg.beta).str() << "," << to_string(kinds[static_cast<std::size_t>(t)])
               << "," << to_string(mode) << "," << t << ","
               << derive_seed(cfg.seed, static_cast<std::uint64_t>(t)) << "," << r.actions << ","
               << r.d_i << "," << r.d_r << "," << r.transmitted << "," << r.misdecodings << ","
               << r.error_free_violations << "," << r.bound.str() << ","
               << (r.bound_respected ? "true" : "false") << "," << r.half_errors << ","
               << r.half_error_cap << "," << (r.half_ok ? "true" : "false") << "," << fmt_ms(r.wall_ms)
               << "\n";
        }
        os << "bench-indexing/v1," << cfg.decoder << "," << to_string(s.property) << "," << s.body.size()
           << "," << s.eps.str() << "," << Rational::parse(cfg.delta).str() << ","
           << Rational::parse(cfg.beta).str() << "," << cfg.adversary << "," << to_string(mode)
           << ",agg,," << "" << ",,,," << max_mis << ",,," << (all_ok ? "true" : "false") << ",,,,\n";
        emit(os.str(), cfg.out);
    }
    return all_ok ? 0 : 1;
}

struct DemoConfig {
    int n = 256;
    std::string delta = "0.1";
    std::string eps = "1/2";
    std::string eps_prime = "1/4";
    std::string beta = "1/2";
    std::string decoder = "global";
    std::int64_t q_sync = 128;
    int gf_m = 10;
    int k_msg = 200;
    int trials = 20;
    std::uint64_t seed = 1;
    std::uint64_t string_seed = 1;
    std::string adversary = "uniform_random";
    std::string mode;
    std::string format = "csv";
    std::string out;
    std::string dump_codeword;
};

int cmd_codec_demo(const DemoConfig& cfg) {
    DecoderKind decoder = decoder_from_string(cfg.decoder);
    Rational eps_prime = Rational::parse(cfg.eps_prime);
    ChannelMode mode = cfg.mode.empty() ? decoder_channel_mode(decoder) : mode_from_string(cfg.mode);

    // The attached string alphabet has to match q_sync: tune the draw config.
    ConstructionConfig ccfg;
    SyncString s;
    if (decoder_string_property(decoder) == SyncProperty::self_matching) {
        if (cfg.q_sync < 2) throw CLI::ValidationError("--q-sync", "needs at least two symbols");
        ccfg.c3 = cfg.q_sync * eps_prime.num() * eps_prime.num() * eps_prime.num() /
                  (eps_prime.den() * eps_prime.den() * eps_prime.den());
        auto r = construct_self_matching_string(cfg.n, eps_prime, cfg.string_seed, ccfg);
        if (!r.ok) throw std::runtime_error("string construction failed: " + r.error);
        s = r.value;
    } else {
        auto r = construct_sync_string(cfg.n, eps_prime, cfg.string_seed, ccfg);
        if (!r.ok) throw std::runtime_error("string construction failed: " + r.error);
        s = r.value;
    }

    auto params = make_params(cfg.n, Rational::parse(cfg.delta), Rational::parse(cfg.eps), decoder,
                              eps_prime, Rational::parse(cfg.beta),
                              static_cast<std::int64_t>(s.body.alphabet_size), cfg.gf_m, cfg.k_msg);
    InsdelCode code(params, s);

    struct Row {
        std::uint64_t seed;
        int actions, d_i, d_r, misdecodings, half_errors, erasures;
        bool recovered;
    };
    std::vector<Row> rows;
    int recoveries = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
        Rng rng(seed);
        std::vector<std::uint32_t> msg(static_cast<std::size_t>(cfg.k_msg));
        for (auto& v : msg) v = rng.symbol(1u << cfg.gf_m);
        auto cw = code.encode(msg);
        if (t == 0 && !cfg.dump_codeword.empty())
            emit(serialize_codeword(params, cw), cfg.dump_codeword);
        auto script = adversary_generate(adversary_from_string(cfg.adversary), cw,
                                         Rational::parse(cfg.delta), mode, rng);
        auto tr = apply_script(cw, script);

        auto dec_idx = code.run_indexing(code.project_sync(tr.received));
        auto rep = count_misdecodings(tr, dec_idx);
        auto word = code.indexing_procedure(tr.received);
        auto inner = code.rs().encode(msg);
        auto result = code.decode(tr.received);
        bool recovered = result.ok && result.msg == msg;
        if (recovered) ++recoveries;
        rows.push_back(Row{seed, tr.actions(), tr.insertions, tr.deletions, rep.misdecodings,
                           half_error_weight(word, inner), result.erasures, recovered});
    }

    const bool all = recoveries == cfg.trials;
    if (cfg.format == "json") {
        json doc;
        doc["schema"] = "synctool/codec-demo/v1";
        doc["params"] = {{"n", params.n},
                         {"delta", params.delta.str()},
                         {"eps", params.eps.str()},
                         {"eps_prime", params.eps_prime.str()},
                         {"beta", params.beta.str()},
                         {"decoder", cfg.decoder},
                         {"q_sync", static_cast<std::int64_t>(s.body.alphabet_size)},
                         {"gf_m", params.gf_m},
                         {"k_msg", params.k_msg},
                         {"radius", params.radius},
                         {"k_bound", params.k_bound.str()},
                         {"rate", fmt_rate(params.rate)},
                         {"rate_lower_bound", fmt_rate(params.rate_lower_bound)},
                         {"string_seed", cfg.string_seed},
                         {"seed", cfg.seed},
                         {"trials", cfg.trials}};
        doc["rows"] = json::array();
        for (std::size_t t = 0; t < rows.size(); ++t) {
            const auto& r = rows[t];
            doc["rows"].push_back({{"trial", static_cast<int>(t)},
                                   {"seed", r.seed},
                                   {"actions", r.actions},
                                   {"d_i", r.d_i},
                                   {"d_r", r.d_r},
                                   {"misdecodings", r.misdecodings},
                                   {"half_errors", r.half_errors},
                                   {"erasures", r.erasures},
                                   {"recovered", r.recovered}});
        }
        doc["aggregate"] = {{"recoveries", recoveries},
                            {"failures", cfg.trials - recoveries},
                            {"all_recovered", all}};
        emit(doc.dump(2) + "\n", cfg.out);
    } else {
        std::ostringstream os;
        os << "# synctool/codec-demo/v1 n=" << params.n << " delta=" << params.delta.str()
           << " eps=" << params.eps.str() << " eps_prime=" << params.eps_prime.str()
           << " beta=" << params.beta.str() << " decoder=" << cfg.decoder << " q_sync="
           << s.body.alphabet_size << " gf_m=" << params.gf_m << " k_msg=" << params.k_msg
           << " radius=" << params.radius << " k_bound=" << params.k_bound.str()
           << " rate=" << fmt_rate(params.rate) << " rate_lower_bound="
           << fmt_rate(params.rate_lower_bound) << "\n";
        os << "schema,trial,seed,actions,d_i,d_r,misdecodings,half_errors,erasures,recovered\n";
        for (std::size_t t = 0; t < rows.size(); ++t) {
            const auto& r = rows[t];
            os << "codec-demo/v1," << t << "," << r.seed << "," << r.actions << "," << r.d_i << ","
               << r.d_r << "," << r.misdecodings << "," << r.half_errors << "," << r.erasures << ","
               << (r.recovered ? "true" : "false") << "\n";
        }
        os << "codec-demo/v1,agg,,,,,,,," << recoveries << "/" << cfg.trials << "\n";
        emit(os.str(), cfg.out);
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"synchronization-string toolkit: certified string construction, indexing "
                 "benchmarks, and the insertion/deletion codec demo"};
    app.require_subcommand(1);

    // construct
    auto* c = app.add_subcommand("construct", "construct and certify a string");
    int c_n = 100;
    std::string c_eps = "1/2", c_prop = "full_sync", c_out;
    std::uint64_t c_seed = 1;
    c->add_option("--n", c_n, "string length");
    c->add_option("--eps", c_eps, "quality level, rational like 1/2 or 0.25");
    c->add_option("--property", c_prop, "full_sync | self_matching");
    c->add_option("--seed", c_seed, "construction seed");
    c->add_option("-o,--out", c_out, "output file (stdout when omitted)");

    // verify
    auto* v = app.add_subcommand("verify", "re-check a serialized string");
    std::string v_in, v_eps, v_prop;
    v->add_option("--in", v_in, "serialized string file")->required();
    v->add_option("--eps", v_eps, "level to check (default: header value)");
    v->add_option("--property", v_prop, "property to check (default: header value)");

    // bench-indexing
    auto* b = app.add_subcommand("bench-indexing", "decoder misdecoding benchmark");
    BenchConfig bc;
    b->add_option("--string", bc.string_path, "serialized string file (else construct)");
    b->add_option("--n", bc.n, "length when constructing");
    b->add_option("--eps", bc.eps, "level when constructing");
    b->add_option("--property", bc.property, "property when constructing");
    b->add_option("--string-seed", bc.string_seed, "construction seed");
    b->add_option("--decoder", bc.decoder, "min_rsd | min_rspd | global | del_greedy | two_sided_ins | two_sided_del");
    b->add_option("--adversary", bc.adversary, "uniform_random | burst | greedy_repeat | mix");
    b->add_option("--mode", bc.mode, "insdel | del_only | ins_only (default per decoder)");
    b->add_option("--delta", bc.delta, "action budget fraction");
    b->add_option("--beta", bc.beta, "matching-rounds parameter (global decoder)");
    b->add_option("--trials", bc.trials, "trial count");
    b->add_option("--seed", bc.seed, "master seed; per-trial seeds are derived");
    b->add_option("--q-inner", bc.q_inner, "wrap trials with message coordinates of this alphabet");
    b->add_option("--format", bc.format, "csv | json");
    b->add_option("--out", bc.out, "report file (stdout when omitted)");
    b->add_flag("--timing", bc.timing, "fill wall_ms (breaks byte determinism)");

    // codec-demo
    auto* d = app.add_subcommand("codec-demo", "end-to-end encode/channel/decode trials");
    DemoConfig dc;
    d->add_option("--n", dc.n, "block length");
    d->add_option("--delta", dc.delta, "insdel fraction");
    d->add_option("--eps", dc.eps, "configured slack for the rate target");
    d->add_option("--eps-prime", dc.eps_prime, "certified string level");
    d->add_option("--beta", dc.beta, "matching-rounds parameter");
    d->add_option("--decoder", dc.decoder, "indexing decoder");
    d->add_option("--q-sync", dc.q_sync, "attached-coordinate alphabet size");
    d->add_option("--gf-m", dc.gf_m, "inner field exponent (GF(2^m))");
    d->add_option("--k-msg", dc.k_msg, "message length");
    d->add_option("--trials", dc.trials, "trial count");
    d->add_option("--seed", dc.seed, "master seed");
    d->add_option("--string-seed", dc.string_seed, "string construction seed");
    d->add_option("--adversary", dc.adversary, "channel adversary");
    d->add_option("--mode", dc.mode, "channel mode (default per decoder)");
    d->add_option("--format", dc.format, "csv | json");
    d->add_option("--out", dc.out, "report file (stdout when omitted)");
    d->add_option("--dump-codeword", dc.dump_codeword, "write the first trial's codeword file here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c) return cmd_construct(c_n, c_eps, c_prop, c_seed, c_out);
        if (*v) return cmd_verify(v_in, v_eps, v_prop);
        if (*b) return cmd_bench(bc);
        if (*d) return cmd_codec_demo(dc);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
