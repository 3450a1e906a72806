#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pellcode/arbint.hpp"

namespace pellcode {

/// Dense row-major matrix of ArbInt with explicit dimensions.
class IntMatrix {
public:
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(check_dims(rows, cols)) {}

    /// Convenience builder for literals: IntMatrix{{2, 1}, {1, 0}}.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    ArbInt& at(int r, int c) { return entries_[index(r, c)]; }
    const ArbInt& at(int r, int c) const { return entries_[index(r, c)]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    static IntMatrix identity(int n);

    /// Rows joined by "; ", entries by single spaces: "2 1; 1 0".
    std::string to_string() const;

private:
    static std::size_t check_dims(int rows, int cols);
    std::size_t index(int r, int c) const;

    int rows_;
    int cols_;
    std::vector<ArbInt> entries_;
};

/// Exact product; throws on dimension mismatch.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by Bareiss fraction-free elimination.
ArbInt determinant(const IntMatrix& m);

/// Exact integer inverse of a matrix with determinant +-1 (adjugate times
/// the determinant). Throws "not unimodular" otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// P^n = [[P_{n+1}, P_n], [P_n, P_{n-1}]], n >= 1.
IntMatrix p_power(int n);

/// Companion-style matrix A of order p+1: first row (2, 0, ..., 0, 1),
/// ones on the subdiagonal.
IntMatrix a_matrix(int p);

/// G_n = A^n by repeated exact multiplication.
IntMatrix g_matrix(int p, int n);

}  // namespace pellcode
