#pragma once

#include "vanhom/smith.hpp"

#include <vector>

namespace vanhom {

/* Z^m / Im(A): free rank plus invariant-factor torsion.
   Each torsion entry is > 1 and divides the next. */
struct CokernelInvariants {
    long long free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const CokernelInvariants&) const = default;
};

/* Sublattice of Z^ambient.  The stored generator matrix always has
   independent columns (a basis), whatever was fed in. */
class Sublattice {
public:
    Sublattice() = default;

    static Sublattice zero(std::size_t ambient);
    static Sublattice full(std::size_t ambient);
    // Columns of `generators` span the lattice; they are reduced to a basis.
    static Sublattice from_generators(std::size_t ambient, const IntMatrix& generators);
    // Caller promises the columns are already independent.
    static Sublattice from_basis_unchecked(std::size_t ambient, IntMatrix basis);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.cols(); }
    const IntMatrix& generators() const { return basis_; }  // ambient x rank

    bool contains(const IntVector& v) const;

    bool operator==(const Sublattice&) const = default;

private:
    std::size_t ambient_ = 0;
    IntMatrix basis_;  // ambient_ rows
};

// Saturated integer kernel {x : A x = 0}; rank = cols - rank(A).
Sublattice kernel_basis(const IntMatrix& a);

CokernelInvariants cokernel_invariants(const IntMatrix& a);

Sublattice lattice_intersection(const Sublattice& a, const Sublattice& b);

bool lattice_membership(const Sublattice& l, const IntVector& v);

// Image of L under projection onto the given coordinates (order preserved).
Sublattice project_lattice(const Sublattice& l, const std::vector<std::size_t>& coords);

bool equal_span(const Sublattice& a, const Sublattice& b);

// True iff L is a direct summand of Z^ambient.
bool is_saturated(const Sublattice& l);

}  // namespace vanhom
