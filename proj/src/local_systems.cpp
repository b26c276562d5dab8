#include "vanhom/local_systems.hpp"

#include "vanhom/engine.hpp"

#include <stdexcept>

namespace vanhom {

LoopContribution wang_contribution(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("monodromy operator must be square");
    IntMatrix w = subtract_identity(a);
    LoopContribution out;
    out.h_top = kernel_basis(w);
    out.h_mid = cokernel_invariants(w);
    return out;
}

SpecialPointLocalData special_point_data(const SpecialPoint& q, const HypersurfaceConfig& cfg) {
    SpecialPointLocalData out;
    out.ambient = 0;
    for (const SpecialPointIncidence& si : q.incidences) {
        const CurveComponent* comp = find_component(cfg, si.component);
        if (!comp) throw std::invalid_argument("special point references unknown component");
        for (const IntMatrix& a : si.branch_monodromies) {
            out.branch_kernels.push_back(kernel_basis(subtract_identity(a)));
            out.ambient += static_cast<std::size_t>(comp->mu_perp);
        }
    }
    out.chi_term = q.chi_fiber - 1;
    out.b_free = q.b_fiber_free;

    if (q.relative_cycle_lattice) {
        const IntMatrix& rows = *q.relative_cycle_lattice;
        IntMatrix gens = rows.rows() > 0 ? rows.transposed() : IntMatrix(out.ambient, 0);
        Sublattice lat = Sublattice::from_generators(out.ambient, gens);
        if (lat.rank() != static_cast<std::size_t>(q.b_fiber_free))
            throw EngineError("relative cycle lattice rank disagrees with b_fiber_free");
        // Every relative cycle must be monodromy invariant on each branch.
        IntMatrix basis = lat.generators();
        std::size_t off = 0, s = 0;
        for (const SpecialPointIncidence& si : q.incidences) {
            const CurveComponent* comp = find_component(cfg, si.component);
            const std::size_t mu = static_cast<std::size_t>(comp->mu_perp);
            for (const IntMatrix& a : si.branch_monodromies) {
                IntMatrix w = subtract_identity(a);
                for (std::size_t c = 0; c < basis.cols(); ++c) {
                    IntVector block(mu);
                    for (std::size_t t = 0; t < mu; ++t) block[t] = basis(off + t, c);
                    if (!is_zero_vector(w * block))
                        throw EngineError("relative cycle lattice escapes the branch kernels");
                }
                off += mu;
                ++s;
            }
        }
        out.relative_cycles = std::move(lat);
    } else if (q.b_fiber_free == 0) {
        out.relative_cycles = Sublattice::zero(out.ambient);
    }
    return out;
}

long long isolated_contribution(const IsolatedPoint& r) { return r.milnor_number; }

}  // namespace vanhom
