#pragma once

#include <optional>
#include <utility>

#include "pellcode/arbint.hpp"
#include "pellcode/rational.hpp"

namespace pellcode {

/// Parameters of the generalized Pell (p,i) family:
/// P(n) = 2 P(n-1) + P(n-p-1) for n > p+1, with initial terms
/// P(1) = ... = P(i) = 0 and P(i+1) = ... = P(p+1) = 1.
struct SequenceParams {
    int p;
    int i;

    SequenceParams(int p_, int i_) : p(p_), i(i_) {
        if (p < 1) throw std::domain_error("SequenceParams: p must be >= 1");
        if (i < 0 || i > p) throw std::domain_error("SequenceParams: need 0 <= i <= p");
    }
};

/// Classical Pell number, P_0 = 0, P_1 = 1, P_{n+1} = 2 P_n + P_{n-1}.
ArbInt pell(int n);

/// Generalized Pell (p,i)-number, 1-based index.
ArbInt gen_pell(const SequenceParams& params, int n);

/// P_n via the Binet formula, evaluated exactly over Z[sqrt(2)]
/// (gamma = 1 + sqrt2 and delta = 1 - sqrt2 as integer pairs).
ArbInt binet_pell(int n);

/// Exact ratio P_{n+1} / P_n, n >= 1.
Rational pell_ratio(int n);

/// Open interval bracketing gamma = 1 + sqrt(2) by two consecutive ratios
/// P_1^{(1)}(n+2)/P_1^{(1)}(n+1) and P_1^{(1)}(n+1)/P_1^{(1)}(n).
/// At n = 1 the second ratio has a zero denominator, so the interval is
/// unbounded above (hi absent); for n >= 2 both endpoints exist.
struct RatioInterval {
    Rational lo;
    std::optional<Rational> hi;

    /// True iff num/den lies strictly inside the interval. den must be nonzero;
    /// den < 0 is normalized (the interval is positive, so a negative ratio
    /// is simply outside).
    bool contains(const ArbInt& num, const ArbInt& den) const;
    bool contains(const Rational& r) const;

    /// Exact interval width (hi - lo); requires a bounded interval.
    Rational width() const;
};

RatioInterval ratio_interval(int n);

}  // namespace pellcode
