#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellcode/codec.hpp"

namespace pellcode {

/// Non-empty subset of the code-matrix positions e_1..e_4 (row-major).
class ErrorPattern {
public:
    explicit ErrorPattern(std::uint8_t mask) : mask_(mask) {
        if (mask == 0 || mask > 0xF)
            throw std::domain_error("ErrorPattern: need a non-empty subset of {1,2,3,4}");
    }
    static ErrorPattern single(int pos) { return ErrorPattern(std::uint8_t(1u << (pos - 1))); }

    std::uint8_t mask() const { return mask_; }
    bool contains(int pos) const { return (mask_ >> (pos - 1)) & 1u; }
    int size() const;
    std::vector<int> positions() const;
    std::string to_string() const;  // "{1,3}"

    bool operator==(const ErrorPattern& o) const { return mask_ == o.mask_; }

private:
    std::uint8_t mask_;
};

enum class CorrectionStatus { Clean, Corrected, Ambiguous, Uncorrectable };

std::string to_string(CorrectionStatus s);

/// One surviving repair hypothesis. pattern is absent for the dedicated
/// "checking-element error" hypothesis (E intact, Det(M) header corrupted),
/// in which case fixed_det_m carries the recomputed checking element.
struct Candidate {
    std::optional<ErrorPattern> pattern;
    IntMatrix repaired_e;
    IntMatrix message;
    std::optional<ArbInt> fixed_det_m;
};

struct CorrectionResult {
    CorrectionStatus status;
    std::optional<IntMatrix> message;
    std::optional<ErrorPattern> pattern;
    std::vector<Candidate> candidates;
    std::vector<std::string> notes;
};

/// True iff the determinant relation holds (no error signature). p=1 only.
bool detect(const CodePackage& pkg);

/// Single-error scan: solve the determinant relation for each position and keep
/// hypotheses that divide exactly, are positive, pass both row ratio checks
/// and decode to an all-positive message. Positions whose denominator is zero
/// are reported in `skipped`.
struct SingleScan {
    std::vector<std::pair<int, ArbInt>> candidates;
    std::vector<int> skipped;
};
SingleScan hypothesize_single(const CodePackage& pkg);

/// Same-row double-error solver: all positive integer solutions of the
/// determinant Diophantine equation whose ratio lies strictly inside
/// ratio_interval(n), enumerated smallest-first. The in-interval solution
/// set is an infinite suffix whenever the trusted row is genuine (its ratio
/// is a mediant of the interval endpoints), so enumeration stops at
/// kSameRowSolutionCap and sets `truncated`.
struct DoubleScan {
    std::vector<std::pair<ArbInt, ArbInt>> solutions;
    bool truncated = false;
    bool rejected_trusted_row = false;  // trusted row failed its own ratio check
};
inline constexpr int kSameRowSolutionCap = 1024;
DoubleScan solve_double_same_row(const CodePackage& pkg, int row);

/// Per-unknown enumeration budget for the finite (mixed/triple) searches.
inline constexpr long kEnumerationBudget = 1000000;

/// Full cascade: Clean / singles / doubles / triples / checking element.
CorrectionResult correct(const CodePackage& pkg);

/// Deterministic corruption rule: maps (position, original value) to the
/// corrupted value; must never return the original value.
using CorruptionOracle = std::function<ArbInt(int pos, const ArbInt& value)>;

/// x -> -(x + shift). Fires the determinant check on every one of the 15
/// patterns and drives wrong-pattern hypotheses negative, which is what lets
/// the enumeration reproduce the 14/15 correction-ability figure.
CorruptionOracle negating_shift_oracle(long shift);

/// x -> x + shift.
CorruptionOracle additive_oracle(long shift);

struct AbilityReport {
    struct Entry {
        ErrorPattern pattern;
        CorrectionStatus status;
        bool truth_in_candidates;
    };
    std::vector<Entry> entries;  // all 15 non-empty patterns, mask order
    int recovered = 0;           // patterns with truth in candidates
    int total = 15;
};

/// Runs the cascade against every non-empty error pattern of a fixed message
/// and corruption rule; the 4-error pattern is expected Uncorrectable.
AbilityReport correction_ability_enumeration(const MessageMatrix& m, int n,
                                             const CorruptionOracle& oracle);

}  // namespace pellcode
