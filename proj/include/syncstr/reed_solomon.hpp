#pragma once

#include <cstdint>
#include <vector>

#include "syncstr/gf.hpp"

namespace syncstr {

// Systematic Reed-Solomon code over GF(2^m), evaluation view: the message
// fixes a polynomial of degree < k through the first k evaluation points
// alpha^0..alpha^{k-1}, the codeword evaluates it at all n points. Decoding
// drops erased coordinates and runs a partial-GCD decoder on the rest, so any
// mix of e errors and s erasures with 2e + s <= n - k is corrected; failure is
// reported explicitly, a wrong message is never returned within that budget.
class ReedSolomon {
public:
    ReedSolomon(int m, int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const GF& field() const { return gf_; }

    std::vector<std::uint32_t> encode(const std::vector<std::uint32_t>& msg) const;

    struct DecodeResult {
        bool ok = false;
        std::vector<std::uint32_t> msg;
    };
    // `erased[i]` marks coordinate i as an erasure; its symbol value is ignored.
    DecodeResult decode(const std::vector<std::uint32_t>& word,
                        const std::vector<std::uint8_t>& erased) const;

private:
    using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

    Poly interpolate(const std::vector<std::uint32_t>& xs, const std::vector<std::uint32_t>& ys) const;
    std::uint32_t eval(const Poly& p, std::uint32_t x) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly add(const Poly& a, const Poly& b) const;
    // Returns {quotient, remainder}.
    std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
    static int degree(const Poly& p);
    static void trim(Poly& p);

    GF gf_;
    int n_;
    int k_;
    std::vector<std::uint32_t> points_;
};

}  // namespace syncstr
