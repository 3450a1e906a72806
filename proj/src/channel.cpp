#include "pellcode/channel.hpp"

#include <array>
#include <chrono>
#include <cstdio>

namespace pellcode {

void ChannelConfig::validate() const {
    if (trials < 1) throw std::domain_error("ChannelConfig: trials must be >= 1");
    if (magnitude < 1) throw std::domain_error("ChannelConfig: magnitude must be >= 1");
    if (n_min < 1 || n_max < n_min) throw std::domain_error("ChannelConfig: bad n range");
    if (entry_min < 1 || entry_max < entry_min)
        throw std::domain_error("ChannelConfig: entry range must be positive");
    long total = 0;
    for (const auto& [size, weight] : pattern_weights) {
        if (size < 1 || size > 4)
            throw std::domain_error("ChannelConfig: pattern sizes must be in 1..4");
        if (weight < 0) throw std::domain_error("ChannelConfig: negative weight");
        total += weight;
    }
    if (total <= 0) throw std::domain_error("ChannelConfig: no positive pattern weight");
}

CodePackage inject(const CodePackage& pkg, const ErrorPattern& pattern, std::uint64_t seed,
                   int magnitude) {
    if (magnitude < 1) throw std::domain_error("inject: magnitude must be >= 1");
    SplitMix64 rng(seed);
    CodePackage out = pkg;
    for (int pos : pattern.positions()) {
        long delta;
        do {
            delta = rng.range(-magnitude, magnitude);
        } while (delta == 0);
        out.e.at((pos - 1) / 2, (pos - 1) % 2) += delta;
    }
    return out;
}

namespace {

ErrorPattern draw_pattern(SplitMix64& rng, const std::map<int, int>& weights) {
    long total = 0;
    for (const auto& [size, weight] : weights) total += weight;
    long pick = rng.range(0, total - 1);
    int size = 1;
    for (const auto& [s, weight] : weights) {
        if (pick < weight) {
            size = s;
            break;
        }
        pick -= weight;
    }
    // Uniform among the masks of the chosen popcount, in ascending mask order.
    std::array<std::uint8_t, 6> masks{};
    int count = 0;
    for (std::uint8_t mask = 1; mask <= 0xF; ++mask)
        if (__builtin_popcount(mask) == size) masks[count++] = mask;
    return ErrorPattern(masks[rng.range(0, count - 1)]);
}

}  // namespace

SimReport simulate(const ChannelConfig& cfg) {
    cfg.validate();
    auto start = std::chrono::steady_clock::now();
    SimReport report;
    report.config = cfg;
    report.trials = cfg.trials;
    for (int t = 0; t < cfg.trials; ++t) {
        SplitMix64 rng(cfg.seed ^ static_cast<std::uint64_t>(t));
        IntMatrix body(2, 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                body.at(r, c) = rng.range(cfg.entry_min, cfg.entry_max);
        MessageMatrix message(body);
        int n = static_cast<int>(rng.range(cfg.n_min, cfg.n_max));
        ErrorPattern pattern = draw_pattern(rng, cfg.pattern_weights);
        CodePackage clean = encode(message, 1, n);
        CodePackage corrupted = inject(clean, pattern, rng.next(), cfg.magnitude);
        CorrectionResult result = correct(corrupted);
        SimReport::Tally& tally = report.per_pattern[pattern.mask()];
        ++tally.trials;
        bool truth = false;
        switch (result.status) {
            case CorrectionStatus::Clean:
                ++tally.silent;
                ++report.silent_total;
                break;
            case CorrectionStatus::Corrected:
                ++tally.corrected;
                break;
            case CorrectionStatus::Ambiguous:
                ++tally.ambiguous;
                break;
            case CorrectionStatus::Uncorrectable:
                ++tally.uncorrectable;
                break;
        }
        for (const Candidate& c : result.candidates)
            if (c.message == message.body()) {
                truth = true;
                break;
            }
        if (truth) {
            ++tally.truth_in_candidates;
            ++report.truth_in_candidates_total;
        }
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

namespace {

std::string pad(std::string s, std::size_t width) {
    while (s.size() < width) s += ' ';
    return s;
}

std::string rate_str(long num, long den) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", den == 0 ? 0.0 : double(num) / double(den));
    return buf;
}

}  // namespace

std::string render_table(const SimReport& report) {
    const ChannelConfig& cfg = report.config;
    std::string out;
    out += "trials=" + std::to_string(cfg.trials) + " seed=" + std::to_string(cfg.seed) +
           " magnitude=" + std::to_string(cfg.magnitude) + " n=[" + std::to_string(cfg.n_min) +
           "," + std::to_string(cfg.n_max) + "] entries=[" + std::to_string(cfg.entry_min) +
           "," + std::to_string(cfg.entry_max) + "]\n";
    out += pad("pattern", 10) + pad("trials", 8) + pad("corrected", 11) +
           pad("ambiguous", 11) + pad("uncorrectable", 15) + pad("silent", 8) +
           "truth-in-candidates\n";
    for (const auto& [mask, tally] : report.per_pattern) {
        out += pad(ErrorPattern(mask).to_string(), 10) + pad(std::to_string(tally.trials), 8) +
               pad(std::to_string(tally.corrected), 11) +
               pad(std::to_string(tally.ambiguous), 11) +
               pad(std::to_string(tally.uncorrectable), 15) +
               pad(std::to_string(tally.silent), 8) +
               std::to_string(tally.truth_in_candidates) + "\n";
    }
    out += pad("total", 10) + pad(std::to_string(report.trials), 8);
    long corrected = 0, ambiguous = 0, uncorrectable = 0;
    for (const auto& [mask, tally] : report.per_pattern) {
        corrected += tally.corrected;
        ambiguous += tally.ambiguous;
        uncorrectable += tally.uncorrectable;
    }
    out += pad(std::to_string(corrected), 11) + pad(std::to_string(ambiguous), 11) +
           pad(std::to_string(uncorrectable), 15) + pad(std::to_string(report.silent_total), 8) +
           std::to_string(report.truth_in_candidates_total) + "\n";
    out += "truth-in-candidates rate: " +
           rate_str(report.truth_in_candidates_total, report.trials) + "\n";
    return out;
}

std::string render_kv(const SimReport& report) {
    const ChannelConfig& cfg = report.config;
    std::string out;
    out += "trials=" + std::to_string(cfg.trials) + "\n";
    out += "seed=" + std::to_string(cfg.seed) + "\n";
    out += "magnitude=" + std::to_string(cfg.magnitude) + "\n";
    out += "n_min=" + std::to_string(cfg.n_min) + "\n";
    out += "n_max=" + std::to_string(cfg.n_max) + "\n";
    out += "entry_min=" + std::to_string(cfg.entry_min) + "\n";
    out += "entry_max=" + std::to_string(cfg.entry_max) + "\n";
    for (const auto& [mask, tally] : report.per_pattern) {
        std::string key = "pattern." + std::to_string(int(mask));
        out += key + ".trials=" + std::to_string(tally.trials) + "\n";
        out += key + ".corrected=" + std::to_string(tally.corrected) + "\n";
        out += key + ".ambiguous=" + std::to_string(tally.ambiguous) + "\n";
        out += key + ".uncorrectable=" + std::to_string(tally.uncorrectable) + "\n";
        out += key + ".silent=" + std::to_string(tally.silent) + "\n";
        out += key + ".truth_in_candidates=" + std::to_string(tally.truth_in_candidates) + "\n";
    }
    out += "silent_total=" + std::to_string(report.silent_total) + "\n";
    out += "truth_in_candidates_total=" + std::to_string(report.truth_in_candidates_total) + "\n";
    out += "truth_in_candidates_rate=" +
           rate_str(report.truth_in_candidates_total, report.trials) + "\n";
    return out;
}

}  // namespace pellcode
