#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace pellcode {

/// Arbitrary-precision signed integer. Pell values grow like (1+sqrt(2))^n,
/// so every sequence/matrix scalar in this library is an ArbInt.
using ArbInt = mpz_class;

inline std::string str(const ArbInt& a) { return a.get_str(); }

/// Parses a decimal integer (optional leading '-'). Returns nullopt on any
/// malformed input; never throws. Used by the file-format parsers.
inline std::optional<ArbInt> parse_arbint(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size()) return std::nullopt;
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') return std::nullopt;
    ArbInt value;
    if (mpz_set_str(value.get_mpz_t(), std::string(text).c_str(), 10) != 0)
        return std::nullopt;
    return value;
}

inline double to_double(const ArbInt& a) { return a.get_d(); }

inline int signum(const ArbInt& a) { return sgn(a); }

inline bool is_zero(const ArbInt& a) { return sgn(a) == 0; }

/// True iff d != 0 and d divides a exactly.
inline bool divides(const ArbInt& d, const ArbInt& a) {
    if (sgn(d) == 0) return false;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient a/d; caller must ensure divisibility.
inline ArbInt exact_div(const ArbInt& a, const ArbInt& d) {
    ArbInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

/// Floor division (rounds toward -infinity). d must be nonzero.
inline ArbInt floor_div(const ArbInt& a, const ArbInt& d) {
    ArbInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

/// Ceiling division (rounds toward +infinity). d must be nonzero.
inline ArbInt ceil_div(const ArbInt& a, const ArbInt& d) {
    ArbInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline ArbInt gcd_int(const ArbInt& a, const ArbInt& b) {
    ArbInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Extended gcd: returns g >= 0 with a*s + b*t = g.
struct GcdExt {
    ArbInt g, s, t;
};
inline GcdExt gcd_ext(const ArbInt& a, const ArbInt& b) {
    GcdExt r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool fits_long(const ArbInt& a) { return a.fits_slong_p(); }
inline long to_long(const ArbInt& a) { return a.get_si(); }

/// (-1)^exponent as an int sign, for the (-1)^{n(p+2)} determinant laws.
inline int neg_one_pow(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace pellcode
