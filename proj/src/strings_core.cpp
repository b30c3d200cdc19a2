#include "syncstr/strings_core.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace syncstr {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

}  // namespace

int edit_distance(const SymbolString& a, const SymbolString& b) {
    const int n = a.size(), m = b.size();
    std::vector<int> prev(static_cast<std::size_t>(m) + 1), cur(static_cast<std::size_t>(m) + 1);
    for (int q = 0; q <= m; ++q) prev[static_cast<std::size_t>(q)] = q;
    for (int p = 1; p <= n; ++p) {
        cur[0] = p;
        for (int q = 1; q <= m; ++q) {
            int best = std::min(prev[static_cast<std::size_t>(q)], cur[static_cast<std::size_t>(q - 1)]) + 1;
            if (a.symbols[static_cast<std::size_t>(p - 1)] == b.symbols[static_cast<std::size_t>(q - 1)])
                best = std::min(best, prev[static_cast<std::size_t>(q - 1)]);
            cur[static_cast<std::size_t>(q)] = best;
        }
        std::swap(prev, cur);
    }
    return prev[static_cast<std::size_t>(m)];
}

MonotoneMatching longest_common_subsequence(const SymbolString& a, const SymbolString& b) {
    const int n = a.size(), m = b.size();
    // Suffix table: L[i][j] = LCS of a[i..n] and b[j..m], 1-based with n+1/m+1 rims.
    std::vector<int> L(static_cast<std::size_t>(n + 2) * static_cast<std::size_t>(m + 2), 0);
    auto at = [&](int i, int j) -> int& {
        return L[static_cast<std::size_t>(i) * static_cast<std::size_t>(m + 2) + static_cast<std::size_t>(j)];
    };
    for (int i = n; i >= 1; --i) {
        for (int j = m; j >= 1; --j) {
            int v = std::max(at(i + 1, j), at(i, j + 1));
            if (a.at1(i) == b.at1(j)) v = std::max(v, 1 + at(i + 1, j + 1));
            at(i, j) = v;
        }
    }

    MonotoneMatching out;
    int i = 1, j = 1;
    while (i <= n && j <= m && at(i, j) > 0) {
        // Use b[j] if any maximum matching can: among valid rows pick the smallest.
        int found = 0;
        for (int i2 = i; i2 <= n; ++i2) {
            if (a.at1(i2) == b.at1(j) && at(i, j) == 1 + at(i2 + 1, j + 1)) {
                found = i2;
                break;
            }
            if (at(i2, j) != at(i, j)) break;
        }
        if (found != 0) {
            out.pairs.emplace_back(found, j);
            i = found + 1;
            ++j;
        } else {
            ++j;
        }
    }
    return out;
}

Transcript apply_script(const SymbolString& sent, const EditScript& script) {
    const int n = sent.size();
    Transcript t;
    t.sent = sent;
    t.script = script;
    t.deleted.assign(static_cast<std::size_t>(n), 0);
    t.ins_after.assign(static_cast<std::size_t>(n) + 1, 0);

    std::vector<std::vector<Symbol>> ins_syms(static_cast<std::size_t>(n) + 1);
    for (const EditAction& act : script) {
        if (act.kind == EditAction::Kind::Delete) {
            if (act.pos < 1 || act.pos > n) throw std::invalid_argument("delete position out of range");
            auto& flag = t.deleted[static_cast<std::size_t>(act.pos - 1)];
            if (flag) throw std::invalid_argument("position deleted twice");
            flag = 1;
            ++t.deletions;
        } else {
            if (act.pos < 0 || act.pos > n) throw std::invalid_argument("insert position out of range");
            ins_syms[static_cast<std::size_t>(act.pos)].push_back(act.symbol);
            ++t.ins_after[static_cast<std::size_t>(act.pos)];
            ++t.insertions;
        }
    }

    t.received.alphabet_size = sent.alphabet_size;
    t.received_of_sent.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i <= n; ++i) {
        for (Symbol s : ins_syms[static_cast<std::size_t>(i)]) {
            if (s >= sent.alphabet_size) throw std::invalid_argument("inserted symbol outside alphabet");
            t.received.symbols.push_back(s);
            t.sent_of_received.push_back(0);
            t.correspondence.tau1.push_back(kStar);
            t.correspondence.tau2.push_back(s);
        }
        if (i < n) {
            Symbol s = sent.at1(i + 1);
            if (t.deleted[static_cast<std::size_t>(i)]) {
                t.correspondence.tau1.push_back(s);
                t.correspondence.tau2.push_back(kStar);
            } else {
                t.received.symbols.push_back(s);
                t.sent_of_received.push_back(i + 1);
                t.received_of_sent[static_cast<std::size_t>(i)] = t.received.size();
                t.correspondence.tau1.push_back(s);
                t.correspondence.tau2.push_back(s);
            }
        }
    }
    return t;
}

namespace detail {

RsdEvaluator::Value RsdEvaluator::eval(const std::vector<Symbol>& a, int ia,
                                       const std::vector<Symbol>& b, int jb,
                                       long long abort_num, long long abort_den) {
    const int K = std::max(ia, jb);
    if (K == 0) return {0, 1, false};
    if (stride_ < K + 1) {
        stride_ = K + 1;
        tab_.assign(static_cast<std::size_t>(stride_) * static_cast<std::size_t>(stride_), 0);
    }
    auto at = [&](int p, int q) -> std::uint16_t& {
        return tab_[static_cast<std::size_t>(p) * static_cast<std::size_t>(stride_) + static_cast<std::size_t>(q)];
    };
    // Reversed-prefix views: X[p] = a[ia-p], Y[q] = b[jb-q] (1-based p, q).
    auto xs = [&](int p) { return a[static_cast<std::size_t>(ia - p)]; };
    auto ys = [&](int q) { return b[static_cast<std::size_t>(jb - q)]; };

    at(0, 0) = 0;
    long long max_num = 0, max_den = 1;
    const bool bounded = abort_num >= 0;

    for (int k = 1; k <= K; ++k) {
        if (k <= jb) {
            at(0, k) = static_cast<std::uint16_t>(k);
            int plim = std::min(k - 1, ia);
            for (int p = 1; p <= plim; ++p) {
                int best = std::min(at(p - 1, k), at(p, k - 1)) + 1;
                if (xs(p) == ys(k)) best = std::min(best, static_cast<int>(at(p - 1, k - 1)));
                at(p, k) = static_cast<std::uint16_t>(best);
            }
        }
        if (k <= ia) {
            at(k, 0) = static_cast<std::uint16_t>(k);
            int qlim = std::min(k, jb);
            for (int q = 1; q <= qlim; ++q) {
                int best = std::min(at(k - 1, q), at(k, q - 1)) + 1;
                if (xs(k) == ys(q)) best = std::min(best, static_cast<int>(at(k - 1, q - 1)));
                at(k, q) = static_cast<std::uint16_t>(best);
            }
        }
        long long ek;
        if (k <= ia && k <= jb) {
            ek = at(k, k);
        } else if (k > ia) {
            ek = (k - ia) + at(ia, k);
        } else {
            ek = (k - jb) + at(k, jb);
        }
        if (ek * max_den > max_num * 2 * k) {
            max_num = ek;
            max_den = 2LL * k;
            if (bounded && max_num * abort_den > abort_num * max_den) return {-1, 0, true};
        }
    }
    return {max_num, max_den, false};
}

}  // namespace detail

Rational relative_suffix_distance(const SymbolString& a, const SymbolString& b) {
    detail::RsdEvaluator ev;
    auto v = ev.eval(a.symbols, a.size(), b.symbols, b.size(), -1, 1);
    return Rational(v.num, v.den);
}

namespace {

// Small rational cell for the pseudo-distance DP; {1, 0} encodes infinity.
struct RatCell {
    int num;
    int den;
    bool inf() const { return den == 0; }
};

constexpr RatCell kRatInf{1, 0};

bool rat_less(const RatCell& a, const RatCell& b) {
    if (a.inf()) return false;
    if (b.inf()) return true;
    return static_cast<long long>(a.num) * b.den < static_cast<long long>(b.num) * a.den;
}

RatCell rat_max(const RatCell& a, const RatCell& b) { return rat_less(a, b) ? b : a; }
RatCell rat_min(const RatCell& a, const RatCell& b) { return rat_less(b, a) ? b : a; }

}  // namespace

Rational relative_suffix_pseudo_distance(const SymbolString& a, const SymbolString& b) {
    const int n = a.size(), m = b.size();
    // d[p][q][l]: best achievable worst suffix ratio over matchings of the
    // length-p suffix of a against the length-q suffix of b whose first row
    // carries l stars. Rolled over p.
    const std::size_t cells = static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(m + 1);
    std::vector<RatCell> prev(cells, kRatInf), cur(cells, kRatInf);
    auto idx = [&](int q, int l) {
        return static_cast<std::size_t>(q) * static_cast<std::size_t>(m + 1) + static_cast<std::size_t>(l);
    };
    prev[idx(0, 0)] = RatCell{0, 1};

    for (int p = 1; p <= n; ++p) {
        std::fill(cur.begin(), cur.end(), kRatInf);
        Symbol fa = a.symbols[static_cast<std::size_t>(n - p)];
        for (int q = 0; q <= m; ++q) {
            for (int l = std::max(0, q - p); l <= q; ++l) {
                int s2 = p + l - q;
                RatCell front{2 * l + p - q, p};
                RatCell best = kRatInf;
                if (q >= 1 && fa == b.symbols[static_cast<std::size_t>(m - q)])
                    best = rat_min(best, rat_max(prev[idx(q - 1, l)], front));
                if (s2 >= 1) best = rat_min(best, rat_max(prev[idx(q, l)], front));
                if (l >= 1 && q >= 1) best = rat_min(best, rat_max(cur[idx(q - 1, l - 1)], front));
                cur[idx(q, l)] = best;
            }
        }
        std::swap(prev, cur);
    }

    RatCell best = kRatInf;
    for (int l = 0; l <= m; ++l) best = rat_min(best, prev[idx(m, l)]);
    if (best.inf()) return Rational::infinity();
    return Rational(best.num, best.den);
}

bool rspd_at_most(const SymbolString& a, const SymbolString& b, const Rational& threshold) {
    if (threshold.is_infinite()) return true;
    const int n = a.size(), m = b.size();
    if (threshold.num() < 0) return n == 0 && m == 0;
    const long long tn = threshold.num(), td = threshold.den();
    // Minimum achievable |i-j| in stars already rules many prefixes out.
    long long cap_final = tn * n / td;
    if (std::abs(n - m) > cap_final && !(n == 0 && m == 0)) return false;

    // f[p][q]: minimum total star count over walks covering suffix lengths
    // (p, q) that keep stars <= floor(threshold * p') at every step.
    std::vector<int> prev(static_cast<std::size_t>(m) + 1, kInf), cur(static_cast<std::size_t>(m) + 1, kInf);
    prev[0] = 0;
    for (int p = 1; p <= n; ++p) {
        const long long cap = tn * p / td;
        Symbol fa = a.symbols[static_cast<std::size_t>(n - p)];
        cur[0] = (p <= cap) ? p : kInf;
        for (int q = 1; q <= m; ++q) {
            int best = std::min(prev[static_cast<std::size_t>(q)], cur[static_cast<std::size_t>(q - 1)]) + 1;
            if (fa == b.symbols[static_cast<std::size_t>(m - q)])
                best = std::min(best, prev[static_cast<std::size_t>(q - 1)]);
            cur[static_cast<std::size_t>(q)] = (best <= cap) ? best : kInf;
        }
        std::swap(prev, cur);
    }
    return prev[static_cast<std::size_t>(m)] < kInf;
}

Rational suffix_error_density(const Transcript& t, int upto) {
    if (upto < 0 || upto > t.sent.size()) throw std::invalid_argument("upto outside sent range");
    // Prefix sums of deletions / insertion attach points.
    std::vector<int> delp(static_cast<std::size_t>(t.sent.size()) + 1, 0);
    for (int p = 1; p <= t.sent.size(); ++p)
        delp[static_cast<std::size_t>(p)] =
            delp[static_cast<std::size_t>(p - 1)] + (t.deleted[static_cast<std::size_t>(p - 1)] ? 1 : 0);
    std::vector<int> insp(static_cast<std::size_t>(t.sent.size()) + 1, 0);
    insp[0] = t.ins_after[0];
    for (int i = 1; i <= t.sent.size(); ++i)
        insp[static_cast<std::size_t>(i)] = insp[static_cast<std::size_t>(i - 1)] + t.ins_after[static_cast<std::size_t>(i)];

    long long bn = 0, bd = 1;
    for (int i = 1; i <= upto; ++i) {
        int a = upto - i;
        int count = delp[static_cast<std::size_t>(upto)] - delp[static_cast<std::size_t>(a)] +
                    insp[static_cast<std::size_t>(upto - 1)] - (a > 0 ? insp[static_cast<std::size_t>(a - 1)] : 0);
        if (static_cast<long long>(count) * bd > bn * i) {
            bn = count;
            bd = i;
        }
    }
    return Rational(bn, bd);
}

}  // namespace syncstr
