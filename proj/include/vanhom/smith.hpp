#pragma once

#include "vanhom/int_matrix.hpp"

namespace vanhom {

/* U * A * V = D with U, V unimodular and D diagonal, nonnegative,
   d1 | d2 | ... | dr followed by zeros.  U_inv and V_inv are maintained
   alongside so callers can change basis without inverting anything. */
struct SmithForm {
    IntMatrix D, U, V, U_inv, V_inv;
    std::size_t rank = 0;

    std::vector<Int> diagonal() const;  // the nonzero invariant factors d1..dr
};

SmithForm smith_normal_form(const IntMatrix& a);

std::size_t matrix_rank(const IntMatrix& a);

}  // namespace vanhom
