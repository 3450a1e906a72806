#include "pellcode/correction.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace pellcode {

int ErrorPattern::size() const {
    int n = 0;
    for (int pos = 1; pos <= 4; ++pos)
        if (contains(pos)) ++n;
    return n;
}

std::vector<int> ErrorPattern::positions() const {
    std::vector<int> out;
    for (int pos = 1; pos <= 4; ++pos)
        if (contains(pos)) out.push_back(pos);
    return out;
}

std::string ErrorPattern::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int pos : positions()) {
        if (!first) out += ',';
        out += std::to_string(pos);
        first = false;
    }
    return out + "}";
}

std::string to_string(CorrectionStatus s) {
    switch (s) {
        case CorrectionStatus::Clean: return "Clean";
        case CorrectionStatus::Corrected: return "Corrected";
        case CorrectionStatus::Ambiguous: return "Ambiguous";
        case CorrectionStatus::Uncorrectable: return "Uncorrectable";
    }
    return "?";
}

namespace {

void require_p1(const CodePackage& pkg, const char* op) {
    if (pkg.p != 1)
        throw UnsupportedError(std::string(op) + ": only p=1 is supported");
}

const ArbInt& entry(const IntMatrix& e, int pos) {
    return e.at((pos - 1) / 2, (pos - 1) % 2);
}

ArbInt& entry(IntMatrix& e, int pos) {
    return e.at((pos - 1) / 2, (pos - 1) % 2);
}

// Shared per-call state: the target Det(E), the gamma interval and the
// decoding matrix, computed once.
struct Ctx {
    const CodePackage& pkg;
    ArbInt target;
    RatioInterval interval;
    IntMatrix g_inv;

    explicit Ctx(const CodePackage& p)
        : pkg(p),
          target(det_sign(p.p, p.n) < 0 ? -p.det_m : p.det_m),
          interval(ratio_interval(p.n)),
          g_inv(unimodular_inverse(g_matrix(p.p, p.n))) {}
};

bool ratio_inside(const ArbInt& num, const ArbInt& den, const RatioInterval& interval) {
    if (is_zero(den)) return false;
    return interval.contains(num, den);
}

// Full candidate filter: both row ratios strictly inside the interval and the
// decoded message all-positive (the latter is what rules out sign-flipped
// rows whose normalized ratio still lands inside).
bool candidate_ok(const IntMatrix& repaired, const Ctx& ctx, IntMatrix& message_out) {
    if (!ratio_inside(repaired.at(0, 0), repaired.at(0, 1), ctx.interval)) return false;
    if (!ratio_inside(repaired.at(1, 0), repaired.at(1, 1), ctx.interval)) return false;
    IntMatrix message = mat_mul(repaired, ctx.g_inv);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (sgn(message.at(r, c)) <= 0) return false;
    message_out = std::move(message);
    return true;
}

// Integer range for one unknown bounded by the interval times a trusted
// partner entry. `unbounded` is only possible at n=1 (interval open above).
struct EnumRange {
    bool feasible = false;
    bool unbounded = false;
    ArbInt lo;
    ArbInt hi;
};

// x with x/partner strictly inside the interval (x is the row's numerator).
EnumRange numerator_range(const ArbInt& partner, const RatioInterval& interval) {
    EnumRange r;
    if (sgn(partner) <= 0) return r;
    r.feasible = true;
    r.lo = floor_div(interval.lo.num() * partner, interval.lo.den()) + 1;
    if (sgn(r.lo) <= 0) r.lo = 1;
    if (!interval.hi) {
        r.unbounded = true;
        return r;
    }
    r.hi = ceil_div(interval.hi->num() * partner, interval.hi->den()) - 1;
    if (r.hi < r.lo) r.feasible = false;
    return r;
}

// x with partner/x strictly inside the interval (x is the row's denominator).
// Always bounded: x < partner/lo.
EnumRange denominator_range(const ArbInt& partner, const RatioInterval& interval) {
    EnumRange r;
    if (sgn(partner) <= 0) return r;
    r.feasible = true;
    r.lo = interval.hi ? floor_div(partner * interval.hi->den(), interval.hi->num()) + 1
                       : ArbInt(1);
    if (sgn(r.lo) <= 0) r.lo = 1;
    r.hi = ceil_div(partner * interval.lo.den(), interval.lo.num()) - 1;
    if (r.hi < r.lo) r.feasible = false;
    return r;
}

bool range_over_budget(const EnumRange& r) {
    if (!r.feasible) return false;
    if (r.unbounded) return true;
    return r.hi - r.lo + 1 > kEnumerationBudget;
}

}  // namespace

bool detect(const CodePackage& pkg) {
    require_p1(pkg, "detect");
    return verify_det_relation(pkg);
}

namespace {

SingleScan hypothesize_single_impl(const Ctx& ctx) {
    SingleScan scan;
    const IntMatrix& e = ctx.pkg.e;
    const ArbInt& e1 = entry(e, 1);
    const ArbInt& e2 = entry(e, 2);
    const ArbInt& e3 = entry(e, 3);
    const ArbInt& e4 = entry(e, 4);
    const ArbInt adj_corner = ctx.target + e2 * e3;  // t1*e4 or e1*t4 equals this
    const ArbInt main_corner = e1 * e4 - ctx.target;  // t2*e3 or t3*e2 equals this
    for (int pos = 1; pos <= 4; ++pos) {
        const ArbInt& num = (pos == 1 || pos == 4) ? adj_corner : main_corner;
        const ArbInt& den = pos == 1 ? e4 : pos == 2 ? e3 : pos == 3 ? e2 : e1;
        if (is_zero(den)) {
            scan.skipped.push_back(pos);
            continue;
        }
        if (!divides(den, num)) continue;
        ArbInt t = exact_div(num, den);
        if (sgn(t) <= 0) continue;
        IntMatrix repaired = e;
        entry(repaired, pos) = t;
        IntMatrix message(2, 2);
        if (!candidate_ok(repaired, ctx, message)) continue;
        scan.candidates.emplace_back(pos, std::move(t));
    }
    return scan;
}

DoubleScan solve_double_same_row_impl(const IntMatrix& e, const ArbInt& target,
                                      const RatioInterval& interval, int row) {
    if (row != 1 && row != 2)
        throw std::domain_error("solve_double_same_row: row must be 1 or 2");
    DoubleScan scan;
    // Unknowns are (x, y) = the two entries of `row`; the other row is trusted.
    // Row 1: x*e4 - y*e3 = target  -> a = e4, b = -e3
    // Row 2: e1*y - e2*x = target  -> a = -e2, b = e1
    const ArbInt& trusted_num = row == 1 ? entry(e, 3) : entry(e, 1);
    const ArbInt& trusted_den = row == 1 ? entry(e, 4) : entry(e, 2);
    if (!ratio_inside(trusted_num, trusted_den, interval)) {
        scan.rejected_trusted_row = true;
        return scan;
    }
    ArbInt a = row == 1 ? trusted_den : -trusted_den;
    ArbInt b = row == 1 ? -trusted_num : trusted_num;
    GcdExt eg = gcd_ext(a, b);
    if (!divides(eg.g, target)) return scan;  // wrong pattern hypothesis
    ArbInt scale = exact_div(target, eg.g);
    ArbInt x0 = eg.s * scale;
    ArbInt y0 = eg.t * scale;
    // General solution x = x0 + dx*k, y = y0 + dy*k along direction
    // (b, -a)/g; normalize so both coordinates increase with k.
    ArbInt dx = exact_div(b, eg.g);
    ArbInt dy = exact_div(-a, eg.g);
    if (sgn(dy) < 0) {
        dx = -dx;
        dy = -dy;
    }
    // dx/dy equals the normalized trusted ratio, strictly inside the open
    // interval, so every constraint below is a lower bound on k and the
    // solution set is an infinite suffix.
    ArbInt k_start = ceil_div(ArbInt(1 - x0), dx);
    k_start = std::max(k_start, ceil_div(ArbInt(1 - y0), dy));
    {
        ArbInt coef = interval.lo.den() * dx - interval.lo.num() * dy;
        ArbInt rhs = interval.lo.num() * y0 - interval.lo.den() * x0;
        k_start = std::max(k_start, ArbInt(floor_div(rhs, coef) + 1));
    }
    if (interval.hi) {
        ArbInt coef = interval.hi->num() * dy - interval.hi->den() * dx;
        ArbInt rhs = interval.hi->den() * x0 - interval.hi->num() * y0;
        k_start = std::max(k_start, ArbInt(floor_div(rhs, coef) + 1));
    }
    ArbInt x = x0 + dx * k_start;
    ArbInt y = y0 + dy * k_start;
    for (int count = 0; count < kSameRowSolutionCap; ++count) {
        scan.solutions.emplace_back(x, y);
        x += dx;
        y += dy;
    }
    scan.truncated = true;
    return scan;
}

}  // namespace

SingleScan hypothesize_single(const CodePackage& pkg) {
    require_p1(pkg, "hypothesize_single");
    return hypothesize_single_impl(Ctx(pkg));
}

DoubleScan solve_double_same_row(const CodePackage& pkg, int row) {
    require_p1(pkg, "solve_double_same_row");
    Ctx ctx(pkg);
    return solve_double_same_row_impl(pkg.e, ctx.target, ctx.interval, row);
}

namespace {

// Candidate pool with message-level dedup; insertion order is the
// deterministic merge order (singles, doubles lexicographic, triples).
struct Pool {
    std::vector<Candidate> candidates;
    std::map<std::string, std::size_t> seen;

    void add(const ErrorPattern& pattern, IntMatrix repaired, IntMatrix message) {
        std::string key = repaired.to_string();
        if (seen.count(key)) return;
        seen.emplace(std::move(key), candidates.size());
        candidates.push_back(Candidate{pattern, std::move(repaired), std::move(message),
                                       std::nullopt});
    }
};

void try_add(Pool& pool, const Ctx& ctx, const ErrorPattern& pattern, IntMatrix repaired) {
    IntMatrix message(2, 2);
    if (!candidate_ok(repaired, ctx, message)) return;
    pool.add(pattern, std::move(repaired), std::move(message));
}

void run_same_row_double(Pool& pool, const Ctx& ctx, int row,
                         std::vector<std::string>& notes) {
    DoubleScan scan = solve_double_same_row_impl(ctx.pkg.e, ctx.target, ctx.interval, row);
    ErrorPattern pattern(row == 1 ? std::uint8_t(0b0011) : std::uint8_t(0b1100));
    for (const auto& [x, y] : scan.solutions) {
        IntMatrix repaired = ctx.pkg.e;
        repaired.at(row - 1, 0) = x;
        repaired.at(row - 1, 1) = y;
        try_add(pool, ctx, pattern, std::move(repaired));
    }
    if (scan.truncated)
        notes.push_back("pattern " + pattern.to_string() + ": solution family truncated at " +
                        std::to_string(kSameRowSolutionCap) + " entries");
}

// Mixed double: enumerate the row-1 unknown over its interval range, solve
// the determinant equation exactly for the row-2 unknown.
void run_mixed_double(Pool& pool, const Ctx& ctx, int pos_row1, int pos_row2,
                      std::vector<std::string>& notes) {
    const IntMatrix& e = ctx.pkg.e;
    ErrorPattern pattern(std::uint8_t((1u << (pos_row1 - 1)) | (1u << (pos_row2 - 1))));
    const int partner1 = pos_row1 == 1 ? 2 : 1;
    const ArbInt& p1 = entry(e, partner1);
    EnumRange range = pos_row1 == 1 ? numerator_range(p1, ctx.interval)
                                    : denominator_range(p1, ctx.interval);
    if (range_over_budget(range)) {
        notes.push_back("pattern " + pattern.to_string() + ": search budget exceeded");
        return;
    }
    if (!range.feasible) return;
    for (ArbInt v = range.lo; v <= range.hi; ++v) {
        // Solve det(repaired) = target for the remaining unknown.
        ArbInt num, den;
        const ArbInt& e1 = entry(e, 1);
        const ArbInt& e2 = entry(e, 2);
        const ArbInt& e3 = entry(e, 3);
        const ArbInt& e4 = entry(e, 4);
        if (pos_row1 == 1 && pos_row2 == 3) {
            num = v * e4 - ctx.target;  // t1*e4 - e2*t3 = target
            den = e2;
        } else if (pos_row1 == 1 && pos_row2 == 4) {
            num = ctx.target + e2 * e3;  // t1*t4 - e2*e3 = target
            den = v;
        } else if (pos_row1 == 2 && pos_row2 == 3) {
            num = e1 * e4 - ctx.target;  // e1*e4 - t2*t3 = target
            den = v;
        } else {                          // {2,4}
            num = ctx.target + v * e3;    // e1*t4 - t2*e3 = target
            den = e1;
        }
        if (is_zero(den) || !divides(den, num)) continue;
        ArbInt w = exact_div(num, den);
        if (sgn(w) <= 0) continue;
        IntMatrix repaired = e;
        entry(repaired, pos_row1) = v;
        entry(repaired, pos_row2) = w;
        try_add(pool, ctx, pattern, std::move(repaired));
    }
}

// Triple: bound the unknown sharing a row with the trusted entry, then
// reduce to the same-row double over the remaining row.
void run_triple(Pool& pool, const Ctx& ctx, int trusted_pos,
                std::vector<std::string>& notes) {
    ErrorPattern pattern(std::uint8_t(0xF & ~(1u << (trusted_pos - 1))));
    const ArbInt& anchor = entry(ctx.pkg.e, trusted_pos);
    // Lonely unknown = the trusted entry's row partner.
    const int lonely = trusted_pos == 1 ? 2 : trusted_pos == 2 ? 1
                      : trusted_pos == 3 ? 4 : 3;
    const bool lonely_is_numerator = lonely == 1 || lonely == 3;
    EnumRange range = lonely_is_numerator ? numerator_range(anchor, ctx.interval)
                                          : denominator_range(anchor, ctx.interval);
    if (range_over_budget(range)) {
        notes.push_back("pattern " + pattern.to_string() + ": search budget exceeded");
        return;
    }
    if (!range.feasible) return;
    const int free_row = lonely <= 2 ? 2 : 1;  // the row solved as a double
    bool truncated = false;
    for (ArbInt v = range.lo; v <= range.hi; ++v) {
        IntMatrix synth = ctx.pkg.e;
        entry(synth, lonely) = v;
        DoubleScan scan = solve_double_same_row_impl(synth, ctx.target, ctx.interval, free_row);
        truncated = truncated || scan.truncated;
        for (const auto& [x, y] : scan.solutions) {
            IntMatrix repaired = synth;
            repaired.at(free_row - 1, 0) = x;
            repaired.at(free_row - 1, 1) = y;
            try_add(pool, ctx, pattern, std::move(repaired));
        }
    }
    if (truncated)
        notes.push_back("pattern " + pattern.to_string() + ": solution family truncated at " +
                        std::to_string(kSameRowSolutionCap) + " entries per branch");
}

CorrectionResult verdict(Pool&& pool, std::vector<std::string>&& notes) {
    CorrectionResult result;
    result.notes = std::move(notes);
    result.candidates = std::move(pool.candidates);
    if (result.candidates.size() == 1) {
        result.status = CorrectionStatus::Corrected;
        result.message = result.candidates[0].message;
        result.pattern = result.candidates[0].pattern;
    } else {
        result.status = CorrectionStatus::Ambiguous;
    }
    return result;
}

}  // namespace

CorrectionResult correct(const CodePackage& pkg) {
    require_p1(pkg, "correct");
    if (verify_det_relation(pkg)) {
        CorrectionResult result;
        result.status = CorrectionStatus::Clean;
        result.message = decode(pkg);
        return result;
    }
    Ctx ctx(pkg);
    Pool pool;
    std::vector<std::string> notes;

    SingleScan singles = hypothesize_single_impl(ctx);
    for (int pos : singles.skipped)
        notes.push_back("single hypothesis at position " + std::to_string(pos) +
                        " skipped: zero denominator");
    for (const auto& [pos, t] : singles.candidates) {
        IntMatrix repaired = pkg.e;
        entry(repaired, pos) = t;
        try_add(pool, ctx, ErrorPattern::single(pos), std::move(repaired));
    }
    if (pool.candidates.size() == 1) {
        CorrectionResult result;
        result.status = CorrectionStatus::Corrected;
        result.message = pool.candidates[0].message;
        result.pattern = pool.candidates[0].pattern;
        result.candidates = std::move(pool.candidates);
        result.notes = std::move(notes);
        return result;
    }

    // Doubles in lexicographic position order.
    run_same_row_double(pool, ctx, 1, notes);                // {1,2}
    run_mixed_double(pool, ctx, 1, 3, notes);                // {1,3}
    run_mixed_double(pool, ctx, 1, 4, notes);                // {1,4}
    run_mixed_double(pool, ctx, 2, 3, notes);                // {2,3}
    run_mixed_double(pool, ctx, 2, 4, notes);                // {2,4}
    run_same_row_double(pool, ctx, 2, notes);                // {3,4}
    if (!pool.candidates.empty()) return verdict(std::move(pool), std::move(notes));

    for (int trusted = 4; trusted >= 1; --trusted)           // {1,2,3} ... {2,3,4}
        run_triple(pool, ctx, trusted, notes);
    if (!pool.candidates.empty()) return verdict(std::move(pool), std::move(notes));

    // Checking-element hypothesis: E intact, Det(M) header corrupted.
    IntMatrix message(2, 2);
    if (candidate_ok(pkg.e, ctx, message)) {
        ArbInt det_e = determinant(pkg.e);
        ArbInt fixed = det_sign(pkg.p, pkg.n) < 0 ? -det_e : det_e;
        CorrectionResult result;
        result.status = CorrectionStatus::Corrected;
        result.message = message;
        result.candidates.push_back(
            Candidate{std::nullopt, pkg.e, std::move(message), std::move(fixed)});
        notes.push_back("checking element (det header) corrupted; E itself is consistent");
        result.notes = std::move(notes);
        return result;
    }

    CorrectionResult result;
    result.status = CorrectionStatus::Uncorrectable;
    result.notes = std::move(notes);
    return result;
}

CorruptionOracle negating_shift_oracle(long shift) {
    return [shift](int, const ArbInt& value) { return ArbInt(-(value + shift)); };
}

CorruptionOracle additive_oracle(long shift) {
    if (shift == 0) throw std::domain_error("additive_oracle: shift must be nonzero");
    return [shift](int, const ArbInt& value) { return ArbInt(value + shift); };
}

AbilityReport correction_ability_enumeration(const MessageMatrix& m, int n,
                                             const CorruptionOracle& oracle) {
    if (m.order() != 2)
        throw UnsupportedError("correction_ability_enumeration: only p=1 is supported");
    CodePackage base = encode(m, 1, n);
    AbilityReport report;
    for (std::uint8_t mask = 1; mask <= 0xF; ++mask) {
        ErrorPattern pattern(mask);
        CodePackage pkg = base;
        for (int pos : pattern.positions()) {
            ArbInt corrupted = oracle(pos, entry(base.e, pos));
            if (corrupted == entry(base.e, pos))
                throw std::domain_error("corruption oracle returned the original value");
            entry(pkg.e, pos) = std::move(corrupted);
        }
        CorrectionResult res = correct(pkg);
        bool truth = false;
        for (const Candidate& c : res.candidates)
            if (c.message == m.body()) {
                truth = true;
                break;
            }
        if (truth) ++report.recovered;
        report.entries.push_back(AbilityReport::Entry{pattern, res.status, truth});
    }
    return report;
}

}  // namespace pellcode
