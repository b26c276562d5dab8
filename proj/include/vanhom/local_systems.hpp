#pragma once

#include "vanhom/config.hpp"
#include "vanhom/lattice.hpp"

namespace vanhom {

/* Homology of the fibre bundle over a loop with monodromy A, relative to
   nothing: the Wang sequence gives ker(A - I) in the top degree and
   coker(A - I) one below. */
struct LoopContribution {
    Sublattice h_top;           // ker(A - I), saturated
    CokernelInvariants h_mid;   // coker(A - I)
};

LoopContribution wang_contribution(const IntMatrix& a);

/* Local data attached to one special point: the branch kernels in declaration
   order, the relative cycle lattice when it is determined, and the Euler
   characteristic term chi(fibre) - 1. */
struct SpecialPointLocalData {
    std::vector<Sublattice> branch_kernels;   // ker(A_s - I) per branch
    std::size_t ambient = 0;                  // sum of branch mu_perp
    std::optional<Sublattice> relative_cycles;  // forced to rank 0 when b_fiber_free = 0
    long long chi_term = 0;                   // chi_fiber - 1
    long long b_free = 0;
};

SpecialPointLocalData special_point_data(const SpecialPoint& q, const HypersurfaceConfig& cfg);

// An isolated singular point feeds its Milnor number straight into the
// middle vanishing homology.
long long isolated_contribution(const IsolatedPoint& r);

}  // namespace vanhom
