#pragma once

#include "vanhom/config.hpp"
#include "vanhom/lattice.hpp"

#include <string>
#include <vector>

namespace vanhom {

/* Chain-level model for the part of the vanishing homology carried by one
   curve component: the singular stratum deformation-retracts to a wedge-like
   complex with one (n+1)-cell block per loop (axis punctures, local branches
   at special points, genus loops), and the boundary map is the block row
   [A_1 - I | A_2 - I | ... | A_w - I] acting into a single Z^{mu_perp}. */
struct PairComplex {
    std::size_t mu_perp = 0;
    std::vector<IntMatrix> loop_operators;
    IntMatrix boundary;  // mu_perp rows, |W| * mu_perp columns
};

PairComplex build_pair_complex(std::size_t mu_perp, std::vector<IntMatrix> loop_operators);

struct PairHomology {
    std::size_t h_top_rank = 0;      // rank ker(boundary); always free
    CokernelInvariants h_mid;        // coker(boundary)
};

PairHomology pair_homology(const PairComplex& complex);

struct OracleVerdict {
    std::string component;
    std::string check;
    bool pass = false;
    std::string detail;  // witness on failure, short note on success
};

// Loop operators for a component: nu identity blocks (axis punctures carry
// trivial vertical monodromy), then branch operators at its special points,
// then genus operators.
std::vector<IntMatrix> component_loop_operators(const CurveComponent& comp,
                                                const HypersurfaceConfig& cfg);

/* The four checks, with the complex injectable so a corrupted boundary can be
   exercised:
   (a) rank ker = (|W| - 1) mu_perp + free rank of coker,
   (b) chain Euler characteristic equals (-1)^(n-1) (|W| - 1) mu_perp,
   (c) each one-loop block reproduces the Wang-sequence contribution,
   (d) every embedded ker(A_j - I) lies inside ker(boundary). */
std::vector<OracleVerdict> verdicts_for_component(const CurveComponent& comp,
                                                  const HypersurfaceConfig& cfg,
                                                  const PairComplex& complex);

std::vector<OracleVerdict> oracle_check(const HypersurfaceConfig& cfg);

}  // namespace vanhom
