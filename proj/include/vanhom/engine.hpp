#pragma once

#include "vanhom/config.hpp"
#include "vanhom/cw_oracle.hpp"
#include "vanhom/lattice.hpp"
#include "vanhom/local_systems.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vanhom {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact mode was requested but some special point with b_fiber_free > 0
// carries no relative cycle lattice.
struct ExactModeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ComputeMode { Auto, Exact, Rank };

struct RankRange {
    long long lo = 0;
    long long hi = 0;

    bool exact() const { return lo == hi; }
    bool operator==(const RankRange&) const = default;
};

// chi and middle Betti number of a smooth degree-d hypersurface in P^{n+1}.
struct SmoothBaseline {
    long long chi = 0;
    long long b_n = 0;
};

SmoothBaseline smooth_euler(long long n, long long d);

// chi of the vanishing pair: what the degeneration from the smooth member
// adds, with sign conventions matching concentration in degrees n+1, n+2.
long long vanishing_euler(const HypersurfaceConfig& cfg);

// Joint kernel of (A - I) over every branch operator at the component's
// special points and every genus operator; Z^{mu_perp} when there are none.
Sublattice component_kernel(const CurveComponent& comp, const HypersurfaceConfig& cfg);

struct ComponentSummary {
    std::string id;
    long long mu_perp = 0;
    long long genus = 0;
    long long nu = 0;
    long long gamma = 0;
    long long loop_count = 0;          // 2g + nu + gamma
    long long kernel_rank = 0;         // rank of the joint loop kernel
    long long min_loop_kernel_rank = 0;
    bool loop_without_unit_eigenvalue = false;  // some loop with det(A - I) != 0
    bool rank_zero_special_fibre = false;       // some special point with b_fiber_free = 0
    bool no_special_points = false;
    std::size_t block_offset = 0;      // offset of this component's block in the
                                       // ambient of the top-degree basis
};

std::vector<ComponentSummary> corollary_checks(const HypersurfaceConfig& cfg);

struct TopResult {
    RankRange rank;
    std::optional<Sublattice> basis;  // present whenever the rank is exact
    bool exact_mode = false;          // solved the full constraint system
};

/* Rank (and in exact mode a basis) of the top vanishing homology: solutions
   w_i in Z^{mu_i} annihilated by every loop operator of Sigma_i whose stacked
   branch values at each special point land in the relative cycle lattice. */
TopResult vanishing_top(const HypersurfaceConfig& cfg, ComputeMode mode);

struct AbsoluteHomology {
    std::string away_isomorphisms;
    long long b_top_absolute_upper = 0;   // b_{n+2}(V) <= 1 + sum mu_i
    long long b_middle_upper = 0;         // b_n(V) <= b_n of the smooth member
    std::optional<RankRange> b_top_absolute;  // even n: exactly 1 + top vanishing rank
    std::optional<long long> expected_top_from_components;  // n = 2 with r given: r - 1
    std::optional<bool> components_identity_consistent;
    std::string b_n_formula;
    std::optional<RankRange> b_n_assuming_injective;
    std::optional<long long> b_n_plus_1_assuming_injective;
};

struct HomologyReport {
    long long n = 0;
    long long d = 0;
    std::string label;
    std::string mode;  // "exact" or "rank-bound"
    long long chi_vanishing = 0;
    RankRange b_top;   // degree n + 2
    RankRange b_mid;   // degree n + 1
    std::optional<Sublattice> b_top_basis;
    std::vector<ComponentSummary> components;
    bool top_forced_zero_by_corollary = false;
    std::optional<long long> betti_via_closed_form;  // the rank-zero-fibre formula
    std::string torsion_note;
    SmoothBaseline smooth;
    AbsoluteHomology absolute;
    std::vector<OracleVerdict> oracle_verdicts;
    bool oracle_ran = false;
};

/* Full report: Euler characteristic, both vanishing Betti numbers (the middle
   one through the Euler identity b_mid - b_top = (-1)^(n+1) chi), corollary
   flags, and the absolute-homology consequences.  Throws EngineError on
   inconsistent local data (negative middle rank, component-count identity
   failure). */
HomologyReport vanishing_betti(const HypersurfaceConfig& cfg, ComputeMode mode,
                               bool assume_phi_injective);

}  // namespace vanhom
