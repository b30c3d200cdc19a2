#include "syncstr/insdel_code.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace syncstr {

std::string to_string(DecoderKind d) {
    switch (d) {
        case DecoderKind::min_rsd: return "min_rsd";
        case DecoderKind::min_rspd: return "min_rspd";
        case DecoderKind::global_lcs: return "global";
        case DecoderKind::deletion_greedy: return "del_greedy";
        case DecoderKind::two_sided_ins: return "two_sided_ins";
        case DecoderKind::two_sided_del: return "two_sided_del";
    }
    return "?";
}

DecoderKind decoder_from_string(const std::string& s) {
    if (s == "min_rsd") return DecoderKind::min_rsd;
    if (s == "min_rspd") return DecoderKind::min_rspd;
    if (s == "global") return DecoderKind::global_lcs;
    if (s == "del_greedy") return DecoderKind::deletion_greedy;
    if (s == "two_sided_ins") return DecoderKind::two_sided_ins;
    if (s == "two_sided_del") return DecoderKind::two_sided_del;
    throw std::invalid_argument("unknown decoder: " + s);
}

bool decoder_is_error_free(DecoderKind d) {
    return d == DecoderKind::two_sided_ins || d == DecoderKind::two_sided_del;
}

SyncProperty decoder_string_property(DecoderKind d) {
    return d == DecoderKind::global_lcs ? SyncProperty::self_matching : SyncProperty::full_sync;
}

Rational decoder_misdecoding_bound(DecoderKind d, int n, const Rational& delta,
                                   const Rational& eps_prime, const Rational& beta) {
    const Rational nd = Rational(n) * delta;
    const Rational one_minus = Rational(1) - eps_prime;
    switch (d) {
        case DecoderKind::min_rsd:
            return Rational(2) * nd / one_minus;
        case DecoderKind::min_rspd:
            // Insertions dominate: c_i/(1-eps) with c_i up to the whole budget.
            return nd / one_minus;
        case DecoderKind::global_lcs:
            // d_i - d_r <= budget.
            return (Rational(n) + nd) * beta + (eps_prime / beta) * Rational(n);
        case DecoderKind::deletion_greedy:
        case DecoderKind::two_sided_del:
            return eps_prime / one_minus * nd;
        case DecoderKind::two_sided_ins:
            return nd / one_minus;
    }
    return Rational(0);
}

namespace {

long long rational_ceil(const Rational& r) {
    return (r.num() + r.den() - 1) / r.den();
}

int bits_for(long long v) {
    int b = 0;
    while ((1LL << b) < v) ++b;
    return b;
}

void fill_rates(InsdelCodeParams& p) {
    const double log_qs = std::log2(static_cast<double>(p.q_sync));
    const double m = static_cast<double>(p.gf_m);
    const double r_inner = static_cast<double>(p.k_msg) / p.n;
    p.rate = (p.k_msg * m) / (p.n * (m + log_qs));
    p.rate_lower_bound = r_inner * (1.0 - log_qs / m);
    p.q_inner = p.gf_m <= 62 ? (1LL << p.gf_m) : 0;
}

}  // namespace

InsdelCodeParams code_params(const Rational& delta, const Rational& eps, int n, DecoderKind decoder,
                             const EpsSplits& splits) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (!(Rational(0) <= delta && delta < Rational(1)))
        throw std::invalid_argument("delta must lie in [0, 1)");
    if (!(Rational(0) < eps && delta + eps < Rational(1)))
        throw std::invalid_argument("need 0 < eps and delta + eps < 1");

    InsdelCodeParams p;
    p.n = n;
    p.delta = delta;
    p.eps = eps;
    p.decoder = decoder;
    p.error_free = decoder_is_error_free(decoder);
    const Rational mis_budget = eps * splits.misdecode_share * Rational(n) /
                                Rational(p.error_free ? 1 : 2);  // k_bound must fit here
    const Rational zero(0);

    // Solve for the string quality eps_prime that brings the decoder's bound
    // inside the misdecoding share.
    switch (decoder) {
        case DecoderKind::global_lcs: {
            // bound = n*beta*(2+delta) with beta = sqrt(eps_prime).
            p.beta = mis_budget / (Rational(n) * (Rational(2) + delta));
            if (!(zero < p.beta))
                throw std::invalid_argument("infeasible: misdecoding share leaves no room for beta");
            // The bound n*beta*(2+delta) only shrinks with beta, so capping
            // keeps it inside the share while eps_prime stays a valid level.
            if (p.beta > Rational(1, 2)) p.beta = Rational(1, 2);
            p.eps_prime = p.beta * p.beta;
            break;
        }
        case DecoderKind::min_rsd: {
            // 2*n*delta/(1-e') <= mis_budget.
            if (delta == zero) { p.eps_prime = Rational(1, 2); break; }
            Rational one_minus = Rational(2) * Rational(n) * delta / mis_budget;
            if (one_minus >= Rational(1))
                throw std::invalid_argument(
                    "infeasible: 2*n*delta/(1-eps') exceeds the misdecoding share for every eps' in (0,1)");
            p.eps_prime = Rational(1) - one_minus;
            break;
        }
        case DecoderKind::min_rspd: {
            if (delta == zero) { p.eps_prime = Rational(1, 2); break; }
            Rational one_minus = Rational(n) * delta / mis_budget;
            if (one_minus >= Rational(1))
                throw std::invalid_argument(
                    "infeasible: binding constraint is n*delta/(1-eps') <= misdecoding budget");
            p.eps_prime = Rational(1) - one_minus;
            break;
        }
        case DecoderKind::deletion_greedy:
        case DecoderKind::two_sided_del: {
            if (delta == zero) { p.eps_prime = Rational(1, 2); break; }
            // e'/(1-e') * n*delta <= mis_budget  =>  e' = b / (b + n*delta).
            p.eps_prime = mis_budget / (mis_budget + Rational(n) * delta);
            break;
        }
        case DecoderKind::two_sided_ins: {
            if (delta == zero) { p.eps_prime = Rational(1, 2); break; }
            Rational one_minus = Rational(n) * delta / mis_budget;
            if (one_minus >= Rational(1))
                throw std::invalid_argument(
                    "infeasible: binding constraint is n*delta/(1-eps') <= misdecoding budget");
            p.eps_prime = Rational(1) - one_minus;
            break;
        }
    }
    if (!(zero < p.eps_prime && p.eps_prime < Rational(1)))
        throw std::invalid_argument("infeasible: derived eps_prime left (0,1)");
    if (p.beta == Rational(0)) p.beta = Rational(1);

    p.k_bound = delta == zero ? Rational(0)
                              : decoder_misdecoding_bound(decoder, n, delta, p.eps_prime, p.beta);
    const Rational radius_r = Rational(n) * delta + Rational(p.error_free ? 1 : 2) * p.k_bound;
    p.radius = static_cast<int>(rational_ceil(radius_r));
    p.k_msg = n - p.radius;
    if (p.k_msg < 1)
        throw std::invalid_argument("infeasible: binding constraint is radius < n (rate would be zero)");

    p.q_sync = recommended_alphabet_size(p.eps_prime, decoder_string_property(decoder));
    const double log_qs = std::log2(static_cast<double>(p.q_sync));
    const double alpha_share = (eps * splits.alphabet_share).to_double();
    int m = std::max(bits_for(static_cast<long long>(n) + 1),
                     static_cast<int>(std::ceil(log_qs / alpha_share)));
    p.gf_m = m;
    fill_rates(p);
    return p;
}

InsdelCodeParams make_params(int n, const Rational& delta, const Rational& eps, DecoderKind decoder,
                             const Rational& eps_prime, const Rational& beta, std::int64_t q_sync,
                             int gf_m, int k_msg) {
    InsdelCodeParams p;
    p.n = n;
    p.delta = delta;
    p.eps = eps;
    p.decoder = decoder;
    p.error_free = decoder_is_error_free(decoder);
    p.eps_prime = eps_prime;
    p.beta = beta;
    p.q_sync = q_sync;
    p.gf_m = gf_m;
    p.k_msg = k_msg;
    p.radius = n - k_msg;
    if (p.radius < 0) throw std::invalid_argument("k_msg exceeds n");
    // Misdecoding budget actually covered by this radius.
    Rational slack = Rational(p.radius) - Rational(n) * delta;
    if (slack < Rational(0))
        throw std::invalid_argument("radius does not even cover the raw action budget");
    p.k_bound = slack / Rational(p.error_free ? 1 : 2);
    fill_rates(p);
    return p;
}

std::string serialize_codeword(const InsdelCodeParams& params, const SymbolString& word) {
    std::ostringstream os;
    os << "insdelcode v1 n=" << params.n << " delta=" << params.delta.num() << "/" << params.delta.den()
       << " eps=" << params.eps.num() << "/" << params.eps.den() << " eps_prime="
       << params.eps_prime.num() << "/" << params.eps_prime.den() << " beta=" << params.beta.num()
       << "/" << params.beta.den() << " decoder=" << to_string(params.decoder)
       << " q_sync=" << params.q_sync << " gf_m=" << params.gf_m << " k_msg=" << params.k_msg << "\n";
    for (Symbol s : word.symbols)
        os << (s / params.q_sync) << " " << (s % params.q_sync) << "\n";
    return os.str();
}

namespace {

std::string field_of(const std::string& header, const std::string& key) {
    const std::string needle = key + "=";
    auto pos = header.find(needle);
    if (pos == std::string::npos) throw std::runtime_error("line 1: missing field '" + key + "'");
    auto end = header.find(' ', pos);
    return header.substr(pos + needle.size(),
                         end == std::string::npos ? std::string::npos : end - pos - needle.size());
}

}  // namespace

ParsedCodeword parse_codeword(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header) || header.rfind("insdelcode v1 ", 0) != 0)
        throw std::runtime_error("line 1: expected 'insdelcode v1' header");
    ParsedCodeword out;
    int n = std::stoi(field_of(header, "n"));
    out.params = make_params(n, Rational::parse(field_of(header, "delta")),
                             Rational::parse(field_of(header, "eps")),
                             decoder_from_string(field_of(header, "decoder")),
                             Rational::parse(field_of(header, "eps_prime")),
                             Rational::parse(field_of(header, "beta")),
                             std::stoll(field_of(header, "q_sync")), std::stoi(field_of(header, "gf_m")),
                             std::stoi(field_of(header, "k_msg")));
    out.word.alphabet_size =
        static_cast<std::uint32_t>(out.params.q_sync * (1LL << out.params.gf_m));
    std::string line;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long inner, sync;
        if (!(ls >> inner >> sync) || inner < 0 || inner >= (1LL << out.params.gf_m) || sync < 0 ||
            sync >= out.params.q_sync)
            throw std::runtime_error("line " + std::to_string(lineno) + ": bad symbol pair");
        out.word.symbols.push_back(static_cast<Symbol>(inner * out.params.q_sync + sync));
    }
    // Received words may be shorter or longer than n; no length constraint.
    return out;
}

int half_error_weight(const HalfErrorWord& got, const std::vector<std::uint32_t>& sent) {
    if (got.symbols.size() != sent.size()) throw std::invalid_argument("length mismatch");
    int w = 0;
    for (std::size_t i = 0; i < sent.size(); ++i) {
        if (got.erased[i])
            w += 1;
        else if (got.symbols[i] != sent[i])
            w += 2;
    }
    return w;
}

InsdelCode::InsdelCode(InsdelCodeParams params, SyncString sync)
    : params_(std::move(params)), sync_(std::move(sync)), rs_(params_.gf_m, params_.n, params_.k_msg) {
    if (!params_.constructible())
        throw std::invalid_argument("parameters are not constructible at desk scale");
    if (sync_.body.size() != params_.n)
        throw std::invalid_argument("sync string length does not match block length");
    if (static_cast<std::int64_t>(sync_.body.alphabet_size) != params_.q_sync)
        throw std::invalid_argument("sync alphabet does not match params");
    const std::int64_t combined = static_cast<std::int64_t>(params_.q_sync) * (1LL << params_.gf_m);
    if (combined > (1LL << 32))
        throw std::invalid_argument("combined product alphabet exceeds 2^32");
}

Symbol InsdelCode::pack(std::uint32_t inner, Symbol sync_symbol) const {
    return static_cast<Symbol>(static_cast<std::uint64_t>(inner) * params_.q_sync + sync_symbol);
}

std::uint32_t InsdelCode::inner_of(Symbol packed) const {
    return static_cast<std::uint32_t>(packed / params_.q_sync);
}

Symbol InsdelCode::sync_of(Symbol packed) const {
    return static_cast<Symbol>(packed % params_.q_sync);
}

SymbolString InsdelCode::project_sync(const SymbolString& word) const {
    SymbolString out;
    out.alphabet_size = static_cast<std::uint32_t>(params_.q_sync);
    out.symbols.reserve(word.symbols.size());
    for (Symbol s : word.symbols) out.symbols.push_back(sync_of(s));
    return out;
}

SymbolString InsdelCode::encode(const std::vector<std::uint32_t>& msg) const {
    std::vector<std::uint32_t> inner = rs_.encode(msg);
    SymbolString out;
    out.alphabet_size = static_cast<std::uint32_t>(params_.q_sync * (1LL << params_.gf_m));
    out.symbols.reserve(inner.size());
    for (int i = 0; i < params_.n; ++i)
        out.symbols.push_back(pack(inner[static_cast<std::size_t>(i)], sync_.body.at1(i + 1)));
    return out;
}

DecodedIndices InsdelCode::run_indexing(const SymbolString& received_sync) const {
    switch (params_.decoder) {
        case DecoderKind::min_rsd: return decode_min_rsd(sync_.body, received_sync);
        case DecoderKind::min_rspd: return decode_min_rspd(sync_.body, sync_.eps, received_sync);
        case DecoderKind::global_lcs: return decode_global(sync_.body, received_sync, params_.beta);
        case DecoderKind::deletion_greedy: return decode_deletion_greedy(sync_.body, received_sync);
        case DecoderKind::two_sided_ins: return decode_two_sided(sync_.body, received_sync, TwoSidedMode::ins_only);
        case DecoderKind::two_sided_del: return decode_two_sided(sync_.body, received_sync, TwoSidedMode::del_only);
    }
    throw std::logic_error("unreachable");
}

HalfErrorWord InsdelCode::indexing_procedure(const SymbolString& received) const {
    DecodedIndices dec = run_indexing(project_sync(received));
    HalfErrorWord word;
    word.symbols.assign(static_cast<std::size_t>(params_.n), 0);
    word.erased.assign(static_cast<std::size_t>(params_.n), 1);
    std::vector<int> claims(static_cast<std::size_t>(params_.n) + 1, 0);
    std::vector<int> claim_pos(static_cast<std::size_t>(params_.n) + 1, 0);
    for (int j = 1; j <= received.size(); ++j) {
        int g = dec.guesses[static_cast<std::size_t>(j - 1)];
        if (g != DecodedIndices::kBot) {
            ++claims[static_cast<std::size_t>(g)];
            claim_pos[static_cast<std::size_t>(g)] = j;
        }
    }
    for (int i = 1; i <= params_.n; ++i) {
        // Exactly one received symbol may claim an index; ties erase even when
        // the claimants agree on the message coordinate.
        if (claims[static_cast<std::size_t>(i)] == 1) {
            word.symbols[static_cast<std::size_t>(i - 1)] =
                inner_of(received.at1(claim_pos[static_cast<std::size_t>(i)]));
            word.erased[static_cast<std::size_t>(i - 1)] = 0;
        }
    }
    return word;
}

InsdelDecodeResult InsdelCode::decode(const SymbolString& received) const {
    HalfErrorWord word = indexing_procedure(received);
    InsdelDecodeResult out;
    for (std::uint8_t e : word.erased) out.erasures += e;
    auto dec = rs_.decode(word.symbols, word.erased);
    out.ok = dec.ok;
    out.msg = std::move(dec.msg);
    return out;
}

}  // namespace syncstr
