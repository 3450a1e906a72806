#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pellcode/correction.hpp"

namespace pellcode {

/// SplitMix64 (Steele, Lea, Flood): the pinned portable generator, so that
/// reports are reproducible bit-for-bit across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [lo, hi] (modulo bias is irrelevant here; only
    /// determinism matters).
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

struct ChannelConfig {
    int trials = 100;
    std::map<int, int> pattern_weights = {{1, 1}, {2, 1}, {3, 1}, {4, 1}};
    int magnitude = 50;
    std::uint64_t seed = 1;
    int n_min = 3;
    int n_max = 10;
    int entry_min = 1;
    int entry_max = 28;

    void validate() const;
};

/// Copy of pkg with every position in `pattern` perturbed by a nonzero
/// additive delta in [-magnitude, magnitude]; the header is untouched.
CodePackage inject(const CodePackage& pkg, const ErrorPattern& pattern, std::uint64_t seed,
                   int magnitude);

struct SimReport {
    struct Tally {
        long corrected = 0;
        long ambiguous = 0;
        long uncorrectable = 0;
        long silent = 0;  // detect passed on a corrupted package
        long truth_in_candidates = 0;
        long trials = 0;
    };
    ChannelConfig config;
    std::map<std::uint8_t, Tally> per_pattern;  // keyed by pattern mask
    long trials = 0;
    long silent_total = 0;
    long truth_in_candidates_total = 0;
    double wall_ms = 0;  // diagnostic only; excluded from rendered reports
};

SimReport simulate(const ChannelConfig& cfg);

/// Aligned text table; byte-identical for identical configs.
std::string render_table(const SimReport& report);

/// Machine-readable key=value block; byte-identical for identical configs.
std::string render_kv(const SimReport& report);

}  // namespace pellcode
