#pragma once

// Shared helpers for the test suites: deterministic generators and the
// independent oracles the module tests check against. The oracles are
// deliberately written as plain loops/recursion, separate from the library's
// implementation paths.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "pellcode/channel.hpp"
#include "pellcode/matrix.hpp"

namespace tsupport {

using pellcode::ArbInt;
using pellcode::IntMatrix;

// Independent recurrence oracle for classical Pell numbers.
inline ArbInt oracle_pell(int n) {
    std::vector<ArbInt> v{0, 1};
    for (int k = 2; k <= n; ++k) v.push_back(2 * v[k - 1] + v[k - 2]);
    return v[n];
}

// Independent recurrence oracle for generalized Pell (p,i)-numbers.
inline ArbInt oracle_gen_pell(int p, int i, int n) {
    std::vector<ArbInt> v(n + 1);
    for (int k = 1; k <= std::min(n, p + 1); ++k) v[k] = k <= i ? 0 : 1;
    for (int k = p + 2; k <= n; ++k) v[k] = 2 * v[k - 1] + v[k - p - 1];
    return v[n];
}

// Schoolbook triple loop, independent of the library's mat_mul.
inline IntMatrix oracle_matmul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            ArbInt sum = 0;
            for (int k = 0; k < a.cols(); ++k) sum += a.at(i, k) * b.at(k, j);
            out.at(i, j) = sum;
        }
    return out;
}

// Laplace cofactor expansion, independent of the library's Bareiss path.
inline ArbInt oracle_det(const IntMatrix& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    ArbInt det = 0;
    for (int c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int mc = 0;
            for (int cc = 0; cc < n; ++cc) {
                if (cc == c) continue;
                minor.at(r - 1, mc++) = m.at(r, cc);
            }
        }
        ArbInt term = m.at(0, c) * oracle_det(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

inline IntMatrix random_matrix(pellcode::SplitMix64& rng, int rows, int cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = rng.range(lo, hi);
    return m;
}

// Exact comparison of a rational against sqrt(2): sign of (num/den - sqrt2),
// den > 0. Used to verify the gamma-bracketing property without floats.
inline int cmp_sqrt2(const ArbInt& num, const ArbInt& den) {
    // num/den vs sqrt2  <=>  num^2 vs 2 den^2 (for num >= 0)
    if (pellcode::signum(num) < 0) return -1;
    ArbInt lhs = num * num;
    ArbInt rhs = 2 * den * den;
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

// Sign of (num/den - (1 + sqrt2)).
inline int cmp_gamma(const ArbInt& num, const ArbInt& den) {
    return cmp_sqrt2(ArbInt(num - den), den);
}

}  // namespace tsupport
