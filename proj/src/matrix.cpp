#include "pellcode/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "pellcode/sequences.hpp"

namespace pellcode {

std::size_t IntMatrix::check_dims(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::domain_error("IntMatrix: dimensions must be positive");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
}

std::size_t IntMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("IntMatrix: index out of range");
    return static_cast<std::size_t>(r) * cols_ + c;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    if (rows.size() == 0) throw std::domain_error("IntMatrix: empty literal");
    cols_ = static_cast<int>(rows.begin()->size());
    entries_.reserve(check_dims(rows_, cols_));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw std::domain_error("IntMatrix: ragged literal");
        for (long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::string IntMatrix::to_string() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
        if (r > 0) out += "; ";
        for (int c = 0; c < cols_; ++c) {
            if (c > 0) out += ' ';
            out += str(at(r, c));
        }
    }
    return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::domain_error("mat_mul: dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const ArbInt& aik = a.at(i, k);
            if (is_zero(aik)) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

ArbInt determinant(const IntMatrix& m) {
    if (!m.square()) throw std::domain_error("determinant: matrix not square");
    const int n = m.rows();
    IntMatrix a = m;
    int sign = 1;
    ArbInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (is_zero(a.at(k, k))) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!is_zero(a.at(r, k))) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = exact_div(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign == 1 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

ArbInt minor_det(const IntMatrix& m, int skip_row, int skip_col) {
    const int n = m.rows();
    if (n == 1) return 1;
    IntMatrix minor(n - 1, n - 1);
    int mr = 0;
    for (int r = 0; r < n; ++r) {
        if (r == skip_row) continue;
        int mc = 0;
        for (int c = 0; c < n; ++c) {
            if (c == skip_col) continue;
            minor.at(mr, mc) = m.at(r, c);
            ++mc;
        }
        ++mr;
    }
    return determinant(minor);
}

}  // namespace

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!m.square()) throw std::domain_error("unimodular_inverse: matrix not square");
    ArbInt det = determinant(m);
    if (det != 1 && det != -1)
        throw std::domain_error("unimodular_inverse: not unimodular");
    const int n = m.rows();
    IntMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            ArbInt cof = minor_det(m, c, r);
            if ((r + c) % 2 != 0) cof = -cof;
            inv.at(r, c) = det == 1 ? cof : -cof;
        }
    return inv;
}

IntMatrix p_power(int n) {
    if (n < 1) throw std::domain_error("p_power: n must be >= 1");
    IntMatrix m(2, 2);
    m.at(0, 0) = pell(n + 1);
    m.at(0, 1) = pell(n);
    m.at(1, 0) = pell(n);
    m.at(1, 1) = pell(n - 1);
    return m;
}

IntMatrix a_matrix(int p) {
    if (p < 1) throw std::domain_error("a_matrix: p must be >= 1");
    IntMatrix a(p + 1, p + 1);
    a.at(0, 0) = 2;
    a.at(0, p) = 1;
    for (int r = 1; r <= p; ++r) a.at(r, r - 1) = 1;
    return a;
}

IntMatrix g_matrix(int p, int n) {
    if (n < 1) throw std::domain_error("g_matrix: n must be >= 1");
    IntMatrix a = a_matrix(p);
    IntMatrix g = a;
    for (int k = 1; k < n; ++k) g = mat_mul(g, a);
    return g;
}

}  // namespace pellcode
