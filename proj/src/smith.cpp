#include "vanhom/smith.hpp"

#include <cstdlib>
#include <optional>

namespace vanhom {

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> d;
    for (std::size_t t = 0; t < rank; ++t) d.push_back(D(t, t));
    return d;
}

namespace {

// Smallest |entry| != 0 in the trailing submatrix starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> min_abs_pivot(const IntMatrix& d,
                                                                 std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs = 0;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int a = abs(d(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithForm f;
    f.D = a;
    f.U = IntMatrix::identity(m);
    f.U_inv = IntMatrix::identity(m);
    f.V = IntMatrix::identity(n);
    f.V_inv = IntMatrix::identity(n);
    IntMatrix& D = f.D;

    /* Row op D <- E D mirrors to U <- E U and U_inv <- U_inv E^{-1};
       column op D <- D F mirrors to V <- V F and V_inv <- F^{-1} V_inv. */
    auto row_op = [&](std::size_t dst, std::size_t src, const Int& c) {
        D.row_axpy(dst, src, c);
        f.U.row_axpy(dst, src, c);
        f.U_inv.col_axpy(src, dst, -c);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Int& c) {
        D.col_axpy(dst, src, c);
        f.V.col_axpy(dst, src, c);
        f.V_inv.row_axpy(src, dst, -c);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        D.swap_rows(i, j);
        f.U.swap_rows(i, j);
        f.U_inv.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        D.swap_cols(i, j);
        f.V.swap_cols(i, j);
        f.V_inv.swap_rows(i, j);
    };
    auto row_negate = [&](std::size_t i) {
        D.negate_row(i);
        f.U.negate_row(i);
        f.U_inv.negate_col(i);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        if (!min_abs_pivot(D, t)) break;  // trailing submatrix is zero
        for (;;) {
            auto piv = *min_abs_pivot(D, t);
            row_swap(t, piv.first);
            col_swap(t, piv.second);

            // |pivot| strictly shrinks whenever a remainder survives, so the
            // loop terminates.
            bool cleared = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                Int q = D(i, t) / D(t, t);
                row_op(i, t, -q);
                if (D(i, t) != 0) cleared = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                Int q = D(t, j) / D(t, t);
                col_op(j, t, -q);
                if (D(t, j) != 0) cleared = false;
            }
            if (!cleared) continue;

            // Lone pivot: force it to divide the rest of the submatrix.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        row_op(t, i, Int(1));
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (D(t, t) < 0) row_negate(t);
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (D(t, t) != 0) ++f.rank;
    return f;
}

std::size_t matrix_rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

}  // namespace vanhom
