#include "syncstr/sync_properties.hpp"

#include <algorithm>
#include <stdexcept>

#include "syncstr/strings_core.hpp"

namespace syncstr {

namespace {

void require_eps(const Rational& eps) {
    if (!(Rational(0) < eps && eps < Rational(1)))
        throw std::invalid_argument("eps must lie strictly between 0 and 1");
}

}  // namespace

PropertyVerdict check_synchronization(const SymbolString& s, const Rational& eps) {
    require_eps(eps);
    const int n = s.size();
    const long long num = eps.den() - eps.num();  // 1 - eps = num/den
    const long long den = eps.den();

    std::vector<int> col, next;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int la = j - i;
            col.assign(static_cast<std::size_t>(la) + 1, 0);
            for (int p = 0; p <= la; ++p) col[static_cast<std::size_t>(p)] = p;
            // Extend the right window one symbol at a time and keep the DP column.
            for (int k = j + 1; k <= n + 1; ++k) {
                const Symbol bsym = s.at1(k - 1);
                next.assign(static_cast<std::size_t>(la) + 1, 0);
                next[0] = k - j;
                for (int p = 1; p <= la; ++p) {
                    int best = std::min(col[static_cast<std::size_t>(p)], next[static_cast<std::size_t>(p - 1)]) + 1;
                    if (s.at1(i + p - 1) == bsym) best = std::min(best, col[static_cast<std::size_t>(p - 1)]);
                    next[static_cast<std::size_t>(p)] = best;
                }
                std::swap(col, next);
                const long long ed = col[static_cast<std::size_t>(la)];
                if (!(ed * den > num * (k - i))) {
                    PropertyVerdict v;
                    v.holds = false;
                    v.violation = SyncViolation{i, j, k, static_cast<int>(ed)};
                    return v;
                }
            }
        }
    }
    PropertyVerdict v;
    v.holds = true;
    return v;
}

std::pair<int, MonotoneMatching> max_bad_self_matching(const SymbolString& s) {
    const int n = s.size();
    std::vector<int> L(static_cast<std::size_t>(n + 2) * static_cast<std::size_t>(n + 2), 0);
    auto at = [&](int i, int j) -> int& {
        return L[static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 2) + static_cast<std::size_t>(j)];
    };
    for (int i = n; i >= 1; --i) {
        for (int j = n; j >= 1; --j) {
            int v = std::max(at(i + 1, j), at(i, j + 1));
            if (i != j && s.at1(i) == s.at1(j)) v = std::max(v, 1 + at(i + 1, j + 1));
            at(i, j) = v;
        }
    }

    MonotoneMatching witness;
    int i = 1, j = 1;
    while (i <= n && j <= n && at(i, j) > 0) {
        int found = 0;
        for (int i2 = i; i2 <= n; ++i2) {
            if (i2 != j && s.at1(i2) == s.at1(j) && at(i, j) == 1 + at(i2 + 1, j + 1)) {
                found = i2;
                break;
            }
            if (at(i2, j) != at(i, j)) break;
        }
        if (found != 0) {
            witness.pairs.emplace_back(found, j);
            i = found + 1;
            ++j;
        } else {
            ++j;
        }
    }
    return {at(1, 1), std::move(witness)};
}

PropertyVerdict check_self_matching(const SymbolString& s, const Rational& eps) {
    require_eps(eps);
    auto [count, witness] = max_bad_self_matching(s);
    PropertyVerdict v;
    v.max_bad = count;
    v.holds = static_cast<long long>(count) * eps.den() < eps.num() * static_cast<long long>(s.size());
    if (!v.holds) v.bad_matching = std::move(witness);
    return v;
}

BadIndexReport find_bad_indices(const SymbolString& s, const Rational& eps) {
    require_eps(eps);
    const int n = s.size();
    BadIndexReport report;
    report.eps = eps;
    std::vector<std::pair<int, int>> blamed(static_cast<std::size_t>(n) + 1, {0, 0});
    std::vector<std::uint8_t> bad(static_cast<std::size_t>(n) + 1, 0);

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            auto [count, witness] = max_bad_self_matching(s.slice(i, j + 1));
            const int len = j - i + 1;
            if (static_cast<long long>(count) * eps.den() >= eps.num() * static_cast<long long>(len)) {
                for (int k = i; k <= j; ++k) {
                    if (!bad[static_cast<std::size_t>(k)]) {
                        bad[static_cast<std::size_t>(k)] = 1;
                        blamed[static_cast<std::size_t>(k)] = {i, j};
                    }
                }
            }
        }
    }
    for (int k = 1; k <= n; ++k) {
        if (bad[static_cast<std::size_t>(k)]) {
            report.bad_indices.push_back(k);
            report.blamed_intervals.push_back(blamed[static_cast<std::size_t>(k)]);
        }
    }
    return report;
}

}  // namespace syncstr
