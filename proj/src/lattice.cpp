#include "vanhom/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace vanhom {

Sublattice Sublattice::zero(std::size_t ambient) {
    Sublattice l;
    l.ambient_ = ambient;
    l.basis_ = IntMatrix(ambient, 0);
    return l;
}

Sublattice Sublattice::full(std::size_t ambient) {
    Sublattice l;
    l.ambient_ = ambient;
    l.basis_ = IntMatrix::identity(ambient);
    return l;
}

Sublattice Sublattice::from_basis_unchecked(std::size_t ambient, IntMatrix basis) {
    if (basis.rows() != ambient) throw std::invalid_argument("basis has wrong ambient dimension");
    Sublattice l;
    l.ambient_ = ambient;
    l.basis_ = std::move(basis);
    return l;
}

Sublattice Sublattice::from_generators(std::size_t ambient, const IntMatrix& generators) {
    if (generators.rows() != ambient)
        throw std::invalid_argument("generators have wrong ambient dimension");
    /* U G V = D gives G V = U^{-1} D; the columns of G V span the same
       lattice and the nonzero ones, d_i * U_inv[:, i], are independent. */
    SmithForm f = smith_normal_form(generators);
    IntMatrix basis(ambient, f.rank);
    for (std::size_t t = 0; t < f.rank; ++t)
        for (std::size_t i = 0; i < ambient; ++i) basis(i, t) = f.D(t, t) * f.U_inv(i, t);
    return from_basis_unchecked(ambient, std::move(basis));
}

bool Sublattice::contains(const IntVector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("membership: vector dimension mismatch");
    if (rank() == 0) return is_zero_vector(v);
    /* Solve B x = v over Z via U B V = D: with c = U v the system D y = c
       needs d_i | c_i on the pivot rows and zero beyond them. */
    SmithForm f = smith_normal_form(basis_);
    IntVector c = f.U * v;
    for (std::size_t i = 0; i < f.rank; ++i)
        if (c[i] % f.D(i, i) != 0) return false;
    for (std::size_t i = f.rank; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

Sublattice kernel_basis(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    // Columns rank..n-1 of the unimodular V: a basis of a direct summand.
    return Sublattice::from_basis_unchecked(a.cols(), f.V.columns(f.rank, a.cols()));
}

CokernelInvariants cokernel_invariants(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    CokernelInvariants inv;
    inv.free_rank = static_cast<long long>(a.rows() - f.rank);
    for (const Int& d : f.diagonal())
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

Sublattice lattice_intersection(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersection: ambient dimension mismatch");
    const std::size_t m = a.ambient_dim();
    const std::size_t ra = a.rank(), rb = b.rank();
    if (ra == 0 || rb == 0) return Sublattice::zero(m);

    // v is in both lattices iff v = A x = B y, i.e. (x, y) kills [A | -B].
    IntMatrix stacked(m, ra + rb);
    set_block(stacked, 0, 0, a.generators());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < rb; ++j) stacked(i, ra + j) = -b.generators()(i, j);
    Sublattice ker = kernel_basis(stacked);

    IntMatrix gens(m, ker.rank());
    for (std::size_t k = 0; k < ker.rank(); ++k) {
        IntVector x(ra);
        for (std::size_t j = 0; j < ra; ++j) x[j] = ker.generators()(j, k);
        IntVector v = a.generators() * x;
        for (std::size_t i = 0; i < m; ++i) gens(i, k) = v[i];
    }
    return Sublattice::from_generators(m, gens);
}

bool lattice_membership(const Sublattice& l, const IntVector& v) { return l.contains(v); }

Sublattice project_lattice(const Sublattice& l, const std::vector<std::size_t>& coords) {
    std::vector<bool> seen(l.ambient_dim(), false);
    for (std::size_t c : coords) {
        if (c >= l.ambient_dim()) throw std::invalid_argument("projection coordinate out of range");
        if (seen[c]) throw std::invalid_argument("projection coordinate repeated");
        seen[c] = true;
    }
    IntMatrix gens(coords.size(), l.rank());
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = 0; j < l.rank(); ++j) gens(i, j) = l.generators()(coords[i], j);
    return Sublattice::from_generators(coords.size(), gens);
}

bool equal_span(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.rank() != b.rank()) return false;
    for (std::size_t j = 0; j < b.rank(); ++j)
        if (!a.contains(b.generators().column(j))) return false;
    for (std::size_t j = 0; j < a.rank(); ++j)
        if (!b.contains(a.generators().column(j))) return false;
    return true;
}

bool is_saturated(const Sublattice& l) {
    if (l.rank() == 0) return true;
    for (const Int& d : smith_normal_form(l.generators()).diagonal())
        if (d != 1) return false;
    return true;
}

}  // namespace vanhom
