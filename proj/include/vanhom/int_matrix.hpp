#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace vanhom {

using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

/* Dense matrix over Z, row-major, arbitrary-precision entries.
   Entry growth during elimination is unbounded in machine words, so the
   entry type is never a fixed-width integer. */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix from_row_vectors(const std::vector<std::vector<long long>>& rows,
                                      std::size_t cols_if_empty = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    // elementary operations, shared by the normal-form routines
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void row_axpy(std::size_t dst, std::size_t src, const Int& c);  // row dst += c * row src
    void col_axpy(std::size_t dst, std::size_t src, const Int& c);  // col dst += c * col src
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    IntMatrix transposed() const;
    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    IntMatrix columns(std::size_t first, std::size_t last) const;  // half-open [first, last)

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

bool is_zero_vector(const IntVector& v);

// A - I for square A.
IntMatrix subtract_identity(const IntMatrix& a);

// Stack blocks vertically; all blocks must share a column count.
IntMatrix vstack(const std::vector<IntMatrix>& blocks, std::size_t cols_if_empty);

// Copy b into m with upper-left corner at (r0, c0).
void set_block(IntMatrix& m, std::size_t r0, std::size_t c0, const IntMatrix& b);

// Exact determinant by Bareiss fraction-free elimination.
Int determinant(const IntMatrix& a);

// Square with |det| = 1.
bool is_unimodular(const IntMatrix& a);

// Checked narrowing for report serialization.
long long to_long_long(const Int& v);

}  // namespace vanhom
