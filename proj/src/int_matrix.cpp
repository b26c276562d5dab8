#include "vanhom/int_matrix.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace vanhom {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<long long>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_row_vectors(v);
}

IntMatrix IntMatrix::from_row_vectors(const std::vector<std::vector<long long>>& rows,
                                      std::size_t cols_if_empty) {
    if (rows.empty()) return IntMatrix(0, cols_if_empty);
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::row_axpy(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(dst, k) += c * (*this)(src, k);
}

void IntMatrix::col_axpy(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, dst) += c * (*this)(k, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntVector IntMatrix::row(std::size_t i) const {
    IntVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t last) const {
    if (first > last || last > cols_) throw std::invalid_argument("bad column range");
    IntMatrix m(rows_, last - first);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = first; j < last; ++j) m(i, j - first) = (*this)(i, j);
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    IntVector w(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) w[i] += a(i, j) * v[j];
    return w;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

bool is_zero_vector(const IntVector& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

IntMatrix subtract_identity(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("subtract_identity: matrix not square");
    IntMatrix b = a;
    for (std::size_t i = 0; i < a.rows(); ++i) b(i, i) -= 1;
    return b;
}

IntMatrix vstack(const std::vector<IntMatrix>& blocks, std::size_t cols_if_empty) {
    std::size_t rows = 0, cols = cols_if_empty;
    for (const IntMatrix& b : blocks) {
        rows += b.rows();
        cols = b.cols();
    }
    for (const IntMatrix& b : blocks)
        if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    IntMatrix m(rows, cols);
    std::size_t at = 0;
    for (const IntMatrix& b : blocks) {
        set_block(m, at, 0, b);
        at += b.rows();
    }
    return m;
}

void set_block(IntMatrix& m, std::size_t r0, std::size_t c0, const IntMatrix& b) {
    if (r0 + b.rows() > m.rows() || c0 + b.cols() > m.cols())
        throw std::invalid_argument("set_block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
}

Int determinant(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w(p, k) == 0) ++p;
            if (p == n) return 0;
            w.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;  // exact division
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
    if (!a.is_square()) return false;
    Int d = determinant(a);
    return d == 1 || d == -1;
}

long long to_long_long(const Int& v) {
    if (v > (std::numeric_limits<long long>::max)() || v < (std::numeric_limits<long long>::min)())
        throw std::overflow_error("integer too large for report serialization");
    return v.convert_to<long long>();
}

}  // namespace vanhom
