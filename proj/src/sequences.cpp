#include "pellcode/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pellcode {

namespace {

// a + b*sqrt(2) with exact integer coefficients.
struct Sqrt2Int {
    ArbInt a;
    ArbInt b;

    Sqrt2Int operator*(const Sqrt2Int& o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }
    Sqrt2Int operator-(const Sqrt2Int& o) const { return {a - o.a, b - o.b}; }
};

Sqrt2Int pow_sqrt2(Sqrt2Int base, int n) {
    Sqrt2Int result{1, 0};
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

// Exact division in Z[sqrt(2)]: num / d via the conjugate, d = c + e*sqrt(2).
// Throws if the quotient is not integral (never happens for Binet inputs).
Sqrt2Int div_sqrt2(const Sqrt2Int& num, const Sqrt2Int& d) {
    ArbInt norm = d.a * d.a - 2 * d.b * d.b;
    if (is_zero(norm)) throw std::domain_error("div_sqrt2: division by zero norm");
    Sqrt2Int scaled{num.a * d.a - 2 * num.b * d.b, num.b * d.a - num.a * d.b};
    if (!divides(norm, scaled.a) || !divides(norm, scaled.b))
        throw std::domain_error("div_sqrt2: inexact division");
    return {exact_div(scaled.a, norm), exact_div(scaled.b, norm)};
}

}  // namespace

ArbInt pell(int n) {
    if (n < 0) throw std::domain_error("pell: n must be >= 0");
    ArbInt prev = 0, cur = 1;
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        ArbInt next = 2 * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ArbInt gen_pell(const SequenceParams& params, int n) {
    if (n <= 0) throw std::domain_error("gen_pell: n must be >= 1");
    std::vector<ArbInt> buf(static_cast<std::size_t>(n) + 1);
    int upto = std::min(n, params.p + 1);
    for (int k = 1; k <= upto; ++k) buf[k] = (k <= params.i) ? 0 : 1;
    for (int k = params.p + 2; k <= n; ++k)
        buf[k] = 2 * buf[k - 1] + buf[k - params.p - 1];
    return buf[n];
}

ArbInt binet_pell(int n) {
    if (n < 0) throw std::domain_error("binet_pell: n must be >= 0");
    const Sqrt2Int gamma{1, 1};
    const Sqrt2Int delta{1, -1};
    Sqrt2Int num = pow_sqrt2(gamma, n) - pow_sqrt2(delta, n);
    Sqrt2Int q = div_sqrt2(num, gamma - delta);
    if (!is_zero(q.b)) throw std::domain_error("binet_pell: non-integer result");
    return q.a;
}

Rational pell_ratio(int n) {
    if (n < 1) throw std::domain_error("pell_ratio: n must be >= 1");
    return Rational(pell(n + 1), pell(n));
}

bool RatioInterval::contains(const ArbInt& num, const ArbInt& den) const {
    if (is_zero(den)) throw std::domain_error("RatioInterval::contains: zero denominator");
    if (lo.cmp(num, den) >= 0) return false;
    if (hi && hi->cmp(num, den) <= 0) return false;
    return true;
}

bool RatioInterval::contains(const Rational& r) const {
    return contains(r.num(), r.den());
}

Rational RatioInterval::width() const {
    if (!hi) throw std::domain_error("RatioInterval::width: unbounded interval");
    return *hi - lo;
}

RatioInterval ratio_interval(int n) {
    if (n < 1) throw std::domain_error("ratio_interval: n must be >= 1");
    // P_1^{(1)}(k) = pell(k-1), so the two bounds are pell(n+1)/pell(n)
    // and pell(n)/pell(n-1); consecutive ratios alternate around gamma.
    Rational a(pell(n + 1), pell(n));
    if (n == 1) return {a, std::nullopt};  // pell(0) = 0: unbounded above
    Rational b(pell(n), pell(n - 1));
    if (a < b) return {a, b};
    return {b, a};
}

}  // namespace pellcode
