#pragma once

#include <string>
#include <string_view>

#include "pellcode/errors.hpp"
#include "pellcode/matrix.hpp"
#include "pellcode/sequences.hpp"

namespace pellcode {

/// Message matrix M: square of order p+1, all entries positive integers.
class MessageMatrix {
public:
    explicit MessageMatrix(IntMatrix body);

    const IntMatrix& body() const { return body_; }
    int order() const { return body_.rows(); }

    bool operator==(const MessageMatrix& o) const { return body_ == o.body_; }
    bool operator!=(const MessageMatrix& o) const { return !(*this == o); }

private:
    IntMatrix body_;
};

/// Transmission unit: code matrix E plus the header the receiver needs
/// (p, n, and the checking element Det(M)).
struct CodePackage {
    IntMatrix e;
    int p;
    int n;
    ArbInt det_m;
};

/// (-1)^{n(p+2)}, the determinant of G_n.
int det_sign(int p, int n);

/// E = M x G_n with the header filled in. M must be (p+1)x(p+1).
CodePackage encode(const MessageMatrix& m, int p, int n);

/// E x (G_n)^{-1}. Pure linear map; corruption shows up as non-positive or
/// implausible entries, which the correction module judges.
IntMatrix decode(const CodePackage& pkg);

/// Det(E) = Det(M) x (-1)^{n(p+2)}?
bool verify_det_relation(const CodePackage& pkg);

/// True iff num/den lies strictly inside ratio_interval(n); p=1 only.
/// Throws on den = 0.
bool row_ratio_ok(const ArbInt& num, const ArbInt& den, int n);

/// PELLE text format:
///   PELLE 1
///   p=<int> n=<int> det=<int>
///   rows of E, space-separated decimal integers
std::string write_pelle(const CodePackage& pkg);
CodePackage parse_pelle(std::string_view text);

}  // namespace pellcode
