#pragma once

#include <stdexcept>
#include <string>

#include "pellcode/arbint.hpp"

namespace pellcode {

/// Exact rational with normalized representation: denominator > 0 and
/// gcd(|num|, den) = 1. Comparisons are by cross-multiplication; no floats.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(ArbInt num, ArbInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (is_zero(den_)) throw std::domain_error("Rational: zero denominator");
        if (sgn(den_) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (is_zero(num_)) {
            den_ = 1;
        } else {
            ArbInt g = gcd_int(num_, den_);
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }

    const ArbInt& num() const { return num_; }
    const ArbInt& den() const { return den_; }

    /// Sign of (*this - other), computed exactly.
    int cmp(const Rational& other) const {
        ArbInt lhs = num_ * other.den_;
        ArbInt rhs = other.num_ * den_;
        return ::cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
    }

    /// Sign of (*this - n/d) for a raw pair; d may be negative, not zero.
    int cmp(const ArbInt& n, const ArbInt& d) const {
        if (is_zero(d)) throw std::domain_error("Rational::cmp: zero denominator");
        ArbInt lhs = num_ * d;
        ArbInt rhs = n * den_;
        if (sgn(d) < 0) std::swap(lhs, rhs);
        return ::cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(o) >= 0; }

    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }

    std::string to_string() const { return str(num_) + "/" + str(den_); }

    double as_double() const { return to_double(num_) / to_double(den_); }

private:
    ArbInt num_;
    ArbInt den_;
};

}  // namespace pellcode
