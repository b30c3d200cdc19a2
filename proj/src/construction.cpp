#include "syncstr/construction.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "syncstr/sync_properties.hpp"

namespace syncstr {

std::string to_string(SyncProperty p) {
    return p == SyncProperty::full_sync ? "full_sync" : "self_matching";
}

SyncProperty property_from_string(const std::string& s) {
    if (s == "full_sync") return SyncProperty::full_sync;
    if (s == "self_matching") return SyncProperty::self_matching;
    throw std::invalid_argument("unknown property: " + s);
}

namespace {

void require_inputs(int n, const Rational& eps) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (!(Rational(0) < eps && eps < Rational(1)))
        throw std::invalid_argument("eps must lie strictly between 0 and 1");
}

std::int64_t ceil_div(__int128 a, __int128 b) {
    return static_cast<std::int64_t>((a + b - 1) / b);
}

std::int64_t residual_alphabet(const Rational& eps, const ConstructionConfig& cfg) {
    double inv2 = static_cast<double>(eps.den()) / static_cast<double>(eps.num());
    return static_cast<std::int64_t>(std::ceil(cfg.residual_factor * inv2 * inv2));
}

// Every window of ceil(1/eps) consecutive symbols must be pairwise distinct;
// this is a necessary condition for the adjacent-interval property.
bool windows_distinct(const SymbolString& s, const Rational& eps) {
    const int w = static_cast<int>(ceil_div(eps.den(), eps.num()));
    const int n = s.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= std::min(n, i + w - 1); ++j) {
            if (s.at1(i) == s.at1(j)) return false;
        }
    }
    return true;
}

}  // namespace

std::int64_t sync_tier_count(const Rational& eps, const ConstructionConfig& cfg) {
    __int128 num = static_cast<__int128>(cfg.c2) * eps.den() * eps.den();
    __int128 den = static_cast<__int128>(eps.num()) * eps.num();
    return ceil_div(num, den);
}

std::int64_t recommended_alphabet_size(const Rational& eps, SyncProperty property,
                                       const ConstructionConfig& cfg) {
    if (!(Rational(0) < eps && eps < Rational(1)))
        throw std::invalid_argument("eps must lie strictly between 0 and 1");
    if (property == SyncProperty::self_matching) {
        __int128 num = static_cast<__int128>(cfg.c3) * eps.den() * eps.den() * eps.den();
        __int128 den = static_cast<__int128>(eps.num()) * eps.num() * eps.num();
        return ceil_div(num, den);
    }
    return sync_tier_count(eps, cfg) * residual_alphabet(eps, cfg);
}

ConstructResult construct_sync_string(int n, const Rational& eps, std::uint64_t seed,
                                      const ConstructionConfig& cfg) {
    require_inputs(n, eps);
    ConstructResult res;
    res.seed = seed;

    const std::int64_t t = sync_tier_count(eps, cfg);
    const std::int64_t q2 = residual_alphabet(eps, cfg);
    const std::int64_t q = t * q2;
    if (q > (1LL << 31)) throw std::invalid_argument("recommended alphabet exceeds 2^31; pick a larger eps");

    Rng rng(seed);
    SymbolString body;
    body.alphabet_size = static_cast<std::uint32_t>(q);
    body.symbols.resize(static_cast<std::size_t>(n));
    auto draw = [&](int idx0) {
        std::int64_t tier = idx0 % t;
        body.symbols[static_cast<std::size_t>(idx0)] =
            static_cast<Symbol>(tier * q2 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(q2))));
    };
    for (int i = 0; i < n; ++i) draw(i);

    const std::int64_t cap = cfg.resample_cap_factor * n;
    int resamples = 0;
    for (;;) {
        PropertyVerdict v = check_synchronization(body, eps);
        if (v.holds) break;
        if (resamples >= cap) {
            res.ok = false;
            res.attempts = resamples;
            res.error = "resample cap exceeded (" + std::to_string(cap) + ") for seed " + std::to_string(seed);
            return res;
        }
        // Fresh residuals for the whole violating interval [i, k).
        for (int p = v.violation->i; p < v.violation->k; ++p) draw(p - 1);
        ++resamples;
    }

    if (!windows_distinct(body, eps))
        throw std::logic_error("certified string has a repeated symbol inside a 1/eps window");

    res.ok = true;
    res.attempts = resamples;
    res.value = SyncString{std::move(body), eps, SyncProperty::full_sync, seed, resamples, 0};
    return res;
}

ConstructResult construct_self_matching_string(int n, const Rational& eps, std::uint64_t seed,
                                               const ConstructionConfig& cfg) {
    require_inputs(n, eps);
    ConstructResult res;
    res.seed = seed;

    const std::int64_t q = recommended_alphabet_size(eps, SyncProperty::self_matching, cfg);
    if (q > (1LL << 31)) throw std::invalid_argument("recommended alphabet exceeds 2^31; pick a larger eps");

    Rng rng(seed);
    for (int attempt = 1; attempt <= cfg.retry_cap; ++attempt) {
        SymbolString body;
        body.alphabet_size = static_cast<std::uint32_t>(q);
        body.symbols.resize(static_cast<std::size_t>(n));
        for (auto& s : body.symbols)
            s = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(q)));
        if (check_self_matching(body, eps).holds) {
            res.ok = true;
            res.attempts = attempt;
            res.value = SyncString{std::move(body), eps, SyncProperty::self_matching, seed, 0, attempt - 1};
            return res;
        }
    }
    res.ok = false;
    res.attempts = cfg.retry_cap;
    res.error = "retry cap exceeded (" + std::to_string(cfg.retry_cap) + ") for seed " + std::to_string(seed);
    return res;
}

std::string serialize_sync_string(const SyncString& s) {
    std::ostringstream os;
    os << "syncstr v1 n=" << s.body.size() << " q=" << s.body.alphabet_size << " eps=" << s.eps.num()
       << "/" << s.eps.den() << " property=" << to_string(s.property) << " seed=" << s.seed << "\n";
    for (int i = 0; i < s.body.size(); ++i) {
        os << s.body.symbols[static_cast<std::size_t>(i)];
        os << (((i + 1) % 16 == 0 || i + 1 == s.body.size()) ? "\n" : " ");
    }
    return os.str();
}

namespace {

std::string header_field(const std::string& header, const std::string& key) {
    const std::string needle = key + "=";
    auto pos = header.find(needle);
    if (pos == std::string::npos)
        throw std::runtime_error("line 1: missing header field '" + key + "'");
    auto end = header.find(' ', pos);
    return header.substr(pos + needle.size(),
                         end == std::string::npos ? std::string::npos : end - pos - needle.size());
}

}  // namespace

SyncString parse_sync_string(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("line 1: empty input");
    if (header.rfind("syncstr v1 ", 0) != 0)
        throw std::runtime_error("line 1: expected 'syncstr v1' header");

    SyncString out;
    const long long n = std::stoll(header_field(header, "n"));
    const long long q = std::stoll(header_field(header, "q"));
    out.eps = Rational::parse(header_field(header, "eps"));
    out.property = property_from_string(header_field(header, "property"));
    out.seed = std::stoull(header_field(header, "seed"));
    if (n < 0 || q < 1 || q > (1LL << 31)) throw std::runtime_error("line 1: invalid n or q");

    out.body.alphabet_size = static_cast<std::uint32_t>(q);
    out.body.symbols.reserve(static_cast<std::size_t>(n));
    std::string line;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        long long v;
        while (ls >> v) {
            if (v < 0 || v >= q)
                throw std::runtime_error("line " + std::to_string(lineno) + ": symbol " +
                                         std::to_string(v) + " outside alphabet of size " + std::to_string(q));
            out.body.symbols.push_back(static_cast<Symbol>(v));
        }
        std::string rest;
        if (ls.clear(), ls >> rest, !rest.empty())
            throw std::runtime_error("line " + std::to_string(lineno) + ": unexpected token '" + rest + "'");
    }
    if (static_cast<long long>(out.body.symbols.size()) != n)
        throw std::runtime_error("line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                                 " symbols, found " + std::to_string(out.body.symbols.size()));
    return out;
}

void write_sync_string_file(const SyncString& s, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << serialize_sync_string(s);
}

SyncString read_sync_string_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_sync_string(ss.str());
}

}  // namespace syncstr
