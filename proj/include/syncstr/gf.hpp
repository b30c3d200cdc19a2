#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace syncstr {

// GF(2^m) arithmetic via exp/log tables, m in [2, 16].
class GF {
public:
    explicit GF(int m) : m_(m) {
        static const std::uint32_t polys[17] = {
            0,      0,      0x7,    0xB,    0x13,  0x25,   0x43,   0x89,  0x11D,
            0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B};
        if (m < 2 || m > 16) throw std::invalid_argument("field exponent must be in [2, 16]");
        q_ = 1u << m;
        exp_.resize(2 * (q_ - 1));
        log_.assign(q_, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x <<= 1;
            if (x & q_) x ^= polys[m];
        }
        for (std::uint32_t i = 0; i < q_ - 1; ++i) exp_[q_ - 1 + i] = exp_[i];
    }

    int m() const { return m_; }
    std::uint32_t size() const { return q_; }

    static std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t alpha_pow(std::uint32_t e) const { return exp_[e % (q_ - 1)]; }

private:
    int m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

}  // namespace syncstr
