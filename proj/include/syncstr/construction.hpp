#pragma once

#include <cstdint>
#include <string>

#include "syncstr/rational.hpp"
#include "syncstr/rng.hpp"
#include "syncstr/symbol_string.hpp"

namespace syncstr {

enum class SyncProperty { full_sync, self_matching };

std::string to_string(SyncProperty p);
SyncProperty property_from_string(const std::string& s);

// Knobs for the randomized constructions. The analysis behind the default
// alphabet sizes is asymptotic and its constants are not optimized, so they
// are exposed here; certification is unconditional either way because every
// candidate is checked before it is returned.
struct ConstructionConfig {
    // Layered construction: symbol i is the pair (i mod t, random residual)
    // with t = ceil(c2 / eps^2) tiers.
    std::int64_t c2 = 4;
    // Residual alphabet q2 = ceil(residual_factor / eps^2); 362.064 ~ 49 e^2.
    double residual_factor = 362.0637;
    // Uniform self-matching construction: q = ceil(c3 / eps^3).
    std::int64_t c3 = 8;
    // Adjacent-interval construction gives up after resample_cap_factor * n
    // interval resamplings.
    std::int64_t resample_cap_factor = 100;
    // Self-matching construction redraws the whole string at most retry_cap times.
    int retry_cap = 50;
};

// A string certified to carry one of the two properties at level eps. The
// certificate is only stored after the matching verifier accepted the body.
struct SyncString {
    SymbolString body;
    Rational eps;
    SyncProperty property = SyncProperty::full_sync;
    std::uint64_t seed = 0;
    int resamples = 0;  // interval resamplings (full_sync)
    int retries = 0;    // whole-string redraws (self_matching)
};

struct ConstructResult {
    bool ok = false;
    SyncString value;
    std::uint64_t seed = 0;
    int attempts = 0;
    std::string error;
};

// Number of tiers t for the layered full_sync construction.
std::int64_t sync_tier_count(const Rational& eps, const ConstructionConfig& cfg = {});

// Recommended alphabet size: t * q2 (roughly c * eps^-4) for full_sync,
// ceil(c3 * eps^-3) for self_matching.
std::int64_t recommended_alphabet_size(const Rational& eps, SyncProperty property,
                                       const ConstructionConfig& cfg = {});

// Draws the layered random string and resamples the first violating interval
// until the adjacent-interval check passes. The result is certified, not
// merely probable; on cap exhaustion a failure carrying the seed is returned.
ConstructResult construct_sync_string(int n, const Rational& eps, std::uint64_t seed,
                                      const ConstructionConfig& cfg = {});

// Uniform random string over the recommended alphabet, redrawn until the
// self-matching check passes.
ConstructResult construct_self_matching_string(int n, const Rational& eps, std::uint64_t seed,
                                               const ConstructionConfig& cfg = {});

// Header line `syncstr v1 n=<n> q=<q> eps=<p>/<q> property=<...> seed=<u64>`
// followed by whitespace-separated integer symbols. Byte-exact round trip.
std::string serialize_sync_string(const SyncString& s);
SyncString parse_sync_string(const std::string& text);  // throws std::runtime_error with line info

void write_sync_string_file(const SyncString& s, const std::string& path);
SyncString read_sync_string_file(const std::string& path);

}  // namespace syncstr
