#include "syncstr/indexing.hpp"

#include <algorithm>
#include <cstdlib>

namespace syncstr {

std::string to_string(AdversaryKind k) {
    switch (k) {
        case AdversaryKind::uniform_random: return "uniform_random";
        case AdversaryKind::burst: return "burst";
        case AdversaryKind::greedy_repeat: return "greedy_repeat";
    }
    return "?";
}

std::string to_string(ChannelMode m) {
    switch (m) {
        case ChannelMode::insdel: return "insdel";
        case ChannelMode::del_only: return "del_only";
        case ChannelMode::ins_only: return "ins_only";
    }
    return "?";
}

AdversaryKind adversary_from_string(const std::string& s) {
    if (s == "uniform_random") return AdversaryKind::uniform_random;
    if (s == "burst") return AdversaryKind::burst;
    if (s == "greedy_repeat") return AdversaryKind::greedy_repeat;
    throw std::invalid_argument("unknown adversary: " + s);
}

ChannelMode mode_from_string(const std::string& s) {
    if (s == "insdel") return ChannelMode::insdel;
    if (s == "del_only") return ChannelMode::del_only;
    if (s == "ins_only") return ChannelMode::ins_only;
    throw std::invalid_argument("unknown channel mode: " + s);
}

namespace {

// Tracks not-yet-deleted sent positions for uniform draws without replacement.
class AlivePositions {
public:
    explicit AlivePositions(int n) : alive_(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) alive_[static_cast<std::size_t>(i)] = i + 1;
    }
    bool empty() const { return alive_.empty(); }
    int take_random(Rng& rng) {
        std::size_t idx = static_cast<std::size_t>(rng.below(alive_.size()));
        int pos = alive_[idx];
        alive_[idx] = alive_.back();
        alive_.pop_back();
        return pos;
    }
    bool take(int pos) {
        for (std::size_t i = 0; i < alive_.size(); ++i) {
            if (alive_[i] == pos) {
                alive_[i] = alive_.back();
                alive_.pop_back();
                return true;
            }
        }
        return false;
    }

private:
    std::vector<int> alive_;
};

}  // namespace

EditScript adversary_generate(AdversaryKind kind, const SymbolString& sent, const Rational& delta,
                              ChannelMode mode, Rng& rng) {
    if (delta < Rational(0)) throw std::invalid_argument("delta must be non-negative");
    const int n = sent.size();
    const std::uint32_t q = sent.alphabet_size;
    const long long budget = delta.num() * n / delta.den();
    if (mode == ChannelMode::del_only && budget > n)
        throw std::invalid_argument("deletion budget exceeds string length");

    EditScript script;
    AlivePositions alive(n);
    auto rand_sym = [&] { return rng.symbol(q); };
    auto want_delete = [&](long long remaining) {
        if (mode == ChannelMode::del_only) return true;
        if (mode == ChannelMode::ins_only) return false;
        (void)remaining;
        return !alive.empty() && rng.coin();
    };

    switch (kind) {
        case AdversaryKind::uniform_random: {
            for (long long a = 0; a < budget; ++a) {
                if (want_delete(budget - a))
                    script.push_back(EditAction::del(alive.take_random(rng)));
                else
                    script.push_back(EditAction::ins(static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1)),
                                                     rand_sym()));
            }
            break;
        }
        case AdversaryKind::burst: {
            long long dels = mode == ChannelMode::del_only ? budget
                             : mode == ChannelMode::ins_only ? 0
                                                             : std::min<long long>(budget / 2, n);
            long long inss = budget - dels;
            int start = 1;
            if (dels > 0 && dels <= n)
                start = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - dels + 1)));
            for (long long a = 0; a < dels; ++a) script.push_back(EditAction::del(start + static_cast<int>(a)));
            int attach = dels > 0 ? start - 1 : static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
            for (long long a = 0; a < inss; ++a) script.push_back(EditAction::ins(attach, rand_sym()));
            break;
        }
        case AdversaryKind::greedy_repeat: {
            // Spoofing stressor: reuse genuine stream symbols at displaced
            // positions instead of fresh random ones.
            const int window = 8;
            long long left = budget;
            while (left > 0) {
                int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                Symbol s = sent.at1(p);
                if (mode == ChannelMode::ins_only) {
                    script.push_back(EditAction::ins(p, s));
                    --left;
                } else if (mode == ChannelMode::del_only) {
                    int chosen = 0;
                    for (int d = 1; d <= window && p + d <= n; ++d) {
                        if (sent.at1(p + d) == s && alive.take(p)) {
                            chosen = p;
                            break;
                        }
                    }
                    if (chosen == 0) chosen = alive.take_random(rng);
                    script.push_back(EditAction::del(chosen));
                    --left;
                } else {
                    if (left >= 2 && alive.take(p)) {
                        script.push_back(EditAction::del(p));
                        int attach = std::min<int>(n, p + 1 + static_cast<int>(rng.below(window)));
                        script.push_back(EditAction::ins(attach, s));
                        left -= 2;
                    } else {
                        script.push_back(EditAction::ins(std::min<int>(n, p), s));
                        --left;
                    }
                }
            }
            break;
        }
    }
    return script;
}

DecodedIndices decode_min_rsd(const SymbolString& sync, const SymbolString& received) {
    const int n = sync.size();
    const int m = received.size();
    DecodedIndices out;
    out.guesses.resize(static_cast<std::size_t>(m), DecodedIndices::kBot);
    if (n == 0) return out;

    detail::RsdEvaluator ev;
    int prev = 0;
    for (int j = 1; j <= m; ++j) {
        long long bn = -1, bd = 1;
        int besti = 0;
        auto consider = [&](int i) {
            if (bn >= 0) {
                // The padded suffix of the longer side forces at least |i-j|
                // unmatched pads, so the ratio at k=max(i,j) is at least
                // |i-j| / (2 max(i,j)).
                long long lb = std::llabs(static_cast<long long>(i) - j);
                if (lb * bd > bn * 2LL * std::max(i, j)) return;
            }
            auto v = ev.eval(sync.symbols, i, received.symbols, j, bn, bd);
            if (v.aborted) return;
            if (bn < 0 || v.num * bd < bn * v.den || (v.num * bd == bn * v.den && i < besti)) {
                bn = v.num;
                bd = v.den;
                besti = i;
            }
        };
        int seed_i = std::clamp(prev + 1, 1, n);
        consider(seed_i);
        for (int i = 1; i <= n; ++i)
            if (i != seed_i) consider(i);
        out.guesses[static_cast<std::size_t>(j - 1)] = besti;
        prev = besti;
    }
    return out;
}

namespace {

// Feasibility DP deciding whether some matching of a[1..ia] against b[1..jb]
// keeps the suffix star count within threshold * (covered a-suffix length) at
// every cut.
class RspdFeasibility {
public:
    bool at_most(const std::vector<Symbol>& a, int ia, const std::vector<Symbol>& b, int jb,
                 long long tn, long long td) {
        constexpr int kInf = 1 << 28;
        if (std::llabs(static_cast<long long>(ia) - jb) > tn * ia / td && !(ia == 0 && jb == 0))
            return false;
        prev_.assign(static_cast<std::size_t>(jb) + 1, kInf);
        cur_.assign(static_cast<std::size_t>(jb) + 1, kInf);
        prev_[0] = 0;
        for (int p = 1; p <= ia; ++p) {
            const long long cap = tn * p / td;
            const Symbol fa = a[static_cast<std::size_t>(ia - p)];
            cur_[0] = (p <= cap) ? p : kInf;
            for (int q = 1; q <= jb; ++q) {
                int best = std::min(prev_[static_cast<std::size_t>(q)], cur_[static_cast<std::size_t>(q - 1)]) + 1;
                if (fa == b[static_cast<std::size_t>(jb - q)])
                    best = std::min(best, prev_[static_cast<std::size_t>(q - 1)]);
                cur_[static_cast<std::size_t>(q)] = (best <= cap) ? best : kInf;
            }
            std::swap(prev_, cur_);
        }
        return prev_[static_cast<std::size_t>(jb)] < kInf;
    }

private:
    std::vector<int> prev_, cur_;
};

}  // namespace

DecodedIndices decode_min_rspd(const SymbolString& sync, const Rational& eps,
                               const SymbolString& received) {
    const int n = sync.size();
    const int m = received.size();
    const Rational threshold = Rational(1) - eps;
    const long long tn = threshold.num(), td = threshold.den();
    DecodedIndices out;
    out.guesses.resize(static_cast<std::size_t>(m), DecodedIndices::kBot);

    RspdFeasibility feas;
    for (int j = 1; j <= m; ++j) {
        int found = 0;
        bool multiple = false;
        for (int i = 1; i <= n; ++i) {
            if (!feas.at_most(sync.symbols, i, received.symbols, j, tn, td)) continue;
            if (found != 0) {
                multiple = true;
                break;
            }
            found = i;
        }
        out.guesses[static_cast<std::size_t>(j - 1)] = multiple ? DecodedIndices::kBot : found;
    }
    return out;
}

DecodedIndices decode_global(const SymbolString& sync, const SymbolString& received,
                             const Rational& beta) {
    if (!(Rational(0) < beta && beta <= Rational(1)))
        throw std::invalid_argument("beta must lie in (0, 1]");
    const int n = sync.size();
    const int m = received.size();
    const long long rounds = (beta.den() + beta.num() - 1) / beta.num();

    std::vector<std::uint8_t> matched(static_cast<std::size_t>(m), 0);
    std::vector<int> match_count(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> match_pos(static_cast<std::size_t>(n) + 1, 0);

    for (long long r = 0; r < rounds; ++r) {
        SymbolString comp;
        comp.alphabet_size = received.alphabet_size;
        std::vector<int> orig;
        for (int t = 1; t <= m; ++t) {
            if (!matched[static_cast<std::size_t>(t - 1)]) {
                comp.symbols.push_back(received.at1(t));
                orig.push_back(t);
            }
        }
        if (comp.empty()) break;
        MonotoneMatching mm = longest_common_subsequence(sync, comp);
        if (mm.pairs.empty()) break;
        for (auto [i, cb] : mm.pairs) {
            int t = orig[static_cast<std::size_t>(cb - 1)];
            matched[static_cast<std::size_t>(t - 1)] = 1;
            ++match_count[static_cast<std::size_t>(i)];
            match_pos[static_cast<std::size_t>(i)] = t;
        }
    }

    DecodedIndices out;
    out.guesses.resize(static_cast<std::size_t>(m), DecodedIndices::kBot);
    for (int i = 1; i <= n; ++i) {
        if (match_count[static_cast<std::size_t>(i)] == 1)
            out.guesses[static_cast<std::size_t>(match_pos[static_cast<std::size_t>(i)] - 1)] = i;
    }
    return out;
}

DecodedIndices decode_deletion_greedy(const SymbolString& sync, const SymbolString& received) {
    const int n = sync.size();
    const int m = received.size();
    DecodedIndices out;
    out.guesses.resize(static_cast<std::size_t>(m), DecodedIndices::kBot);
    int t = 1;
    for (int j = 1; j <= m; ++j) {
        while (t <= n && sync.at1(t) != received.at1(j)) ++t;
        if (t > n) throw ContractViolation("received is not a subsequence of the sync string");
        out.guesses[static_cast<std::size_t>(j - 1)] = t;
        ++t;
    }
    return out;
}

namespace {

// Left-most matching of `sub` into `sup`; returns per sub-position the
// matched sup position. Throws when sub is not a subsequence of sup.
std::vector<int> leftmost_embedding(const SymbolString& sub, const SymbolString& sup) {
    std::vector<int> at(static_cast<std::size_t>(sub.size()));
    int t = 1;
    for (int i = 1; i <= sub.size(); ++i) {
        while (t <= sup.size() && sup.at1(t) != sub.at1(i)) ++t;
        if (t > sup.size()) throw ContractViolation("subsequence contract violated");
        at[static_cast<std::size_t>(i - 1)] = t;
        ++t;
    }
    return at;
}

std::vector<int> rightmost_embedding(const SymbolString& sub, const SymbolString& sup) {
    std::vector<int> at(static_cast<std::size_t>(sub.size()));
    int t = sup.size();
    for (int i = sub.size(); i >= 1; --i) {
        while (t >= 1 && sup.at1(t) != sub.at1(i)) --t;
        if (t < 1) throw ContractViolation("subsequence contract violated");
        at[static_cast<std::size_t>(i - 1)] = t;
        --t;
    }
    return at;
}

}  // namespace

DecodedIndices decode_two_sided(const SymbolString& sync, const SymbolString& received,
                                TwoSidedMode mode) {
    DecodedIndices out;
    out.guesses.resize(static_cast<std::size_t>(received.size()), DecodedIndices::kBot);
    if (mode == TwoSidedMode::ins_only) {
        if (received.size() < sync.size())
            throw ContractViolation("insertion-only channel shrank the string");
        auto ml = leftmost_embedding(sync, received);
        auto mr = rightmost_embedding(sync, received);
        for (int i = 1; i <= sync.size(); ++i) {
            if (ml[static_cast<std::size_t>(i - 1)] == mr[static_cast<std::size_t>(i - 1)])
                out.guesses[static_cast<std::size_t>(ml[static_cast<std::size_t>(i - 1)] - 1)] = i;
        }
    } else {
        if (received.size() > sync.size())
            throw ContractViolation("deletion-only channel grew the string");
        auto ml = leftmost_embedding(received, sync);
        auto mr = rightmost_embedding(received, sync);
        for (int j = 1; j <= received.size(); ++j) {
            if (ml[static_cast<std::size_t>(j - 1)] == mr[static_cast<std::size_t>(j - 1)])
                out.guesses[static_cast<std::size_t>(j - 1)] = ml[static_cast<std::size_t>(j - 1)];
        }
    }
    return out;
}

MisdecodingReport count_misdecodings(const Transcript& t, const DecodedIndices& guesses) {
    if (static_cast<int>(guesses.guesses.size()) != t.received.size())
        throw std::invalid_argument("guess count does not match received length");
    MisdecodingReport rep;
    for (int j = 1; j <= t.received.size(); ++j) {
        const int g = guesses.guesses[static_cast<std::size_t>(j - 1)];
        const int si = t.sent_of_received[static_cast<std::size_t>(j - 1)];
        if (si > 0) {
            ++rep.transmitted_total;
            if (g == si)
                ++rep.correctly_decoded;
            else if (g != DecodedIndices::kBot)
                ++rep.error_free_violations;
        } else if (g != DecodedIndices::kBot) {
            ++rep.error_free_violations;
        }
    }
    rep.misdecodings = rep.transmitted_total - rep.correctly_decoded;
    return rep;
}

}  // namespace syncstr
