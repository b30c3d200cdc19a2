#include "syncstr/reed_solomon.hpp"

#include <stdexcept>

namespace syncstr {

ReedSolomon::ReedSolomon(int m, int n, int k) : gf_(m), n_(n), k_(k) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (static_cast<std::uint32_t>(n) > gf_.size() - 1)
        throw std::invalid_argument("block length exceeds field size minus one");
    points_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) points_[static_cast<std::size_t>(i)] = gf_.alpha_pow(static_cast<std::uint32_t>(i));
}

int ReedSolomon::degree(const Poly& p) {
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
        if (p[static_cast<std::size_t>(d)] != 0) return d;
    return -1;
}

void ReedSolomon::trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ReedSolomon::Poly ReedSolomon::add(const Poly& a, const Poly& b) const {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] ^= a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] ^= b[i];
    trim(out);
    return out;
}

ReedSolomon::Poly ReedSolomon::mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] ^= gf_.mul(a[i], b[j]);
    }
    trim(out);
    return out;
}

std::pair<ReedSolomon::Poly, ReedSolomon::Poly> ReedSolomon::divmod(const Poly& a, const Poly& b) const {
    int db = degree(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    trim(rem);
    Poly quot;
    int dr = degree(rem);
    if (dr >= db) quot.assign(static_cast<std::size_t>(dr - db) + 1, 0);
    const std::uint32_t lead_inv = gf_.inv(b[static_cast<std::size_t>(db)]);
    while ((dr = degree(rem)) >= db) {
        std::uint32_t c = gf_.mul(rem[static_cast<std::size_t>(dr)], lead_inv);
        int shift = dr - db;
        quot[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(i + shift)] ^= gf_.mul(c, b[static_cast<std::size_t>(i)]);
    }
    trim(rem);
    return {quot, rem};
}

std::uint32_t ReedSolomon::eval(const Poly& p, std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
        acc = GF::add(gf_.mul(acc, x), p[static_cast<std::size_t>(d)]);
    return acc;
}

ReedSolomon::Poly ReedSolomon::interpolate(const std::vector<std::uint32_t>& xs,
                                           const std::vector<std::uint32_t>& ys) const {
    // Lagrange with a shared master polynomial.
    Poly master{1};
    for (std::uint32_t x : xs) master = mul(master, Poly{x, 1});
    Poly out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        auto [mi, rem] = divmod(master, Poly{xs[i], 1});
        std::uint32_t denom = eval(mi, xs[i]);
        std::uint32_t c = gf_.mul(ys[i], gf_.inv(denom));
        if (c == 0) continue;
        Poly scaled = mi;
        for (auto& v : scaled) v = gf_.mul(v, c);
        out = add(out, scaled);
    }
    return out;
}

std::vector<std::uint32_t> ReedSolomon::encode(const std::vector<std::uint32_t>& msg) const {
    if (static_cast<int>(msg.size()) != k_) throw std::invalid_argument("message length mismatch");
    for (std::uint32_t v : msg)
        if (v >= gf_.size()) throw std::invalid_argument("message symbol outside field");
    std::vector<std::uint32_t> xs(points_.begin(), points_.begin() + k_);
    Poly f = interpolate(xs, msg);
    std::vector<std::uint32_t> word(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) word[static_cast<std::size_t>(i)] = eval(f, points_[static_cast<std::size_t>(i)]);
    return word;
}

ReedSolomon::DecodeResult ReedSolomon::decode(const std::vector<std::uint32_t>& word,
                                              const std::vector<std::uint8_t>& erased) const {
    if (static_cast<int>(word.size()) != n_ || static_cast<int>(erased.size()) != n_)
        throw std::invalid_argument("word length mismatch");
    DecodeResult res;

    std::vector<std::uint32_t> xs, ys;
    for (int i = 0; i < n_; ++i) {
        if (!erased[static_cast<std::size_t>(i)]) {
            if (word[static_cast<std::size_t>(i)] >= gf_.size()) return res;
            xs.push_back(points_[static_cast<std::size_t>(i)]);
            ys.push_back(word[static_cast<std::size_t>(i)]);
        }
    }
    const int np = static_cast<int>(xs.size());
    if (np < k_) return res;

    Poly g0{1};
    for (std::uint32_t x : xs) g0 = mul(g0, Poly{x, 1});
    Poly g1 = interpolate(xs, ys);

    // Partial extended GCD until the remainder degree drops below (np + k) / 2.
    Poly r0 = g0, r1 = g1;
    Poly v0, v1{1};
    while (degree(r1) >= 0 && 2 * degree(r1) >= np + k_) {
        auto [q, r2] = divmod(r0, r1);
        Poly v2 = add(v0, mul(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (degree(v1) < 0) return res;
    auto [f, rem] = divmod(r1, v1);
    if (degree(rem) >= 0) return res;
    if (degree(f) >= k_) return res;

    // Guard against answers outside the guaranteed radius.
    int e = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (eval(f, xs[i]) != ys[i]) ++e;
    const int s = n_ - np;
    if (2 * e + s > n_ - k_) return res;

    res.msg.resize(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) res.msg[static_cast<std::size_t>(i)] = eval(f, points_[static_cast<std::size_t>(i)]);
    res.ok = true;
    return res;
}

}  // namespace syncstr
