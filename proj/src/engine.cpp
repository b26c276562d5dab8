#include "vanhom/engine.hpp"

#include <map>
#include <sstream>

namespace vanhom {

SmoothBaseline smooth_euler(long long n, long long d) {
    Int pw = 1;
    for (long long k = 0; k < n + 2; ++k) pw *= Int(d - 1);
    // (d - 1)^(n+2) = (-1)^(n+2) mod d, so the bracket is divisible by d.
    Int bracket = Int(1) + ((n % 2 == 0) ? -pw : pw);
    if (bracket % d != 0) throw EngineError("degree does not divide the Euler bracket");
    Int chi = Int(n + 2) - bracket / d;
    SmoothBaseline out;
    out.chi = to_long_long(chi);
    Int bn = (n % 2 == 0) ? chi - n : Int(n + 1) - chi;
    out.b_n = to_long_long(bn);
    return out;
}

long long vanishing_euler(const HypersurfaceConfig& cfg) {
    const long long sgn = (cfg.n % 2 == 0) ? -1 : 1;  // (-1)^(n+1)
    Int total = 0;
    DerivedCounts dc = derived_counts(cfg);
    for (std::size_t i = 0; i < cfg.components.size(); ++i)
        total += Int(sgn) * Int(dc.per_component[i].loop_count - 2) *
                 Int(cfg.components[i].mu_perp);
    for (const SpecialPoint& q : cfg.special_points) total -= Int(q.chi_fiber - 1);
    for (const IsolatedPoint& r : cfg.isolated_points) total += Int(sgn) * Int(r.milnor_number);
    return to_long_long(total);
}

Sublattice component_kernel(const CurveComponent& comp, const HypersurfaceConfig& cfg) {
    const std::size_t mu = static_cast<std::size_t>(comp.mu_perp);
    std::vector<IntMatrix> blocks;
    for (const SpecialPoint& q : cfg.special_points)
        for (const SpecialPointIncidence& si : q.incidences)
            if (si.component == comp.id)
                for (const IntMatrix& a : si.branch_monodromies)
                    blocks.push_back(subtract_identity(a));
    for (const IntMatrix& a : comp.genus_loop_monodromies) blocks.push_back(subtract_identity(a));
    if (blocks.empty()) return Sublattice::full(mu);
    return kernel_basis(vstack(blocks, mu));
}

std::vector<ComponentSummary> corollary_checks(const HypersurfaceConfig& cfg) {
    std::vector<ComponentSummary> out;
    DerivedCounts dc = derived_counts(cfg);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < cfg.components.size(); ++i) {
        const CurveComponent& c = cfg.components[i];
        ComponentSummary s;
        s.id = c.id;
        s.mu_perp = c.mu_perp;
        s.genus = c.genus;
        s.nu = dc.per_component[i].nu;
        s.gamma = dc.per_component[i].gamma;
        s.loop_count = dc.per_component[i].loop_count;
        s.block_offset = offset;
        offset += static_cast<std::size_t>(c.mu_perp);
        s.kernel_rank = static_cast<long long>(component_kernel(c, cfg).rank());

        long long min_rank = c.mu_perp;  // axis loops carry the identity
        bool no_unit = false;
        auto consider = [&](const IntMatrix& a) {
            long long k = static_cast<long long>(kernel_basis(subtract_identity(a)).rank());
            if (k < min_rank) min_rank = k;
            if (k == 0) no_unit = true;
        };
        bool incident = false, rank_zero = false;
        for (const SpecialPoint& q : cfg.special_points)
            for (const SpecialPointIncidence& si : q.incidences)
                if (si.component == c.id) {
                    incident = true;
                    if (q.b_fiber_free == 0) rank_zero = true;
                    for (const IntMatrix& a : si.branch_monodromies) consider(a);
                }
        for (const IntMatrix& a : c.genus_loop_monodromies) consider(a);
        s.min_loop_kernel_rank = min_rank;
        s.loop_without_unit_eigenvalue = no_unit;
        s.rank_zero_special_fibre = rank_zero;
        s.no_special_points = !incident;
        out.push_back(std::move(s));
    }
    return out;
}

TopResult vanishing_top(const HypersurfaceConfig& cfg, ComputeMode mode) {
    std::vector<ComponentSummary> summaries = corollary_checks(cfg);
    std::map<std::string, std::size_t> offset_of;
    std::size_t total_w = 0;
    for (std::size_t i = 0; i < cfg.components.size(); ++i) {
        offset_of[cfg.components[i].id] = summaries[i].block_offset;
        total_w += static_cast<std::size_t>(cfg.components[i].mu_perp);
    }

    bool exact_possible = true;
    for (const SpecialPoint& q : cfg.special_points)
        if (q.b_fiber_free > 0 && !q.relative_cycle_lattice) exact_possible = false;
    if (mode == ComputeMode::Exact && !exact_possible)
        throw ExactModeError(
            "exact mode requires a relative cycle lattice at every special point with "
            "positive fibre rank");

    if (mode == ComputeMode::Rank || !exact_possible) {
        long long hi = 0;
        for (const ComponentSummary& s : summaries)
            if (!(s.loop_without_unit_eigenvalue || s.rank_zero_special_fibre))
                hi += s.kernel_rank;
        TopResult out;
        out.rank = {0, hi};
        out.exact_mode = false;
        if (hi == 0) out.basis = Sublattice::zero(total_w);
        return out;
    }

    /* Unknowns: the per-component classes w, then one coefficient block per
       special point expressing the stacked branch values of w inside the
       relative cycle lattice.  Rows impose (A - I)w = 0 for every branch and
       genus loop, then the stacking constraint at each special point. */
    std::vector<SpecialPointLocalData> point_data;
    std::size_t total_c = 0, loop_rows = 0, point_rows = 0;
    for (const SpecialPoint& q : cfg.special_points) {
        point_data.push_back(special_point_data(q, cfg));
        total_c += point_data.back().relative_cycles->rank();
        point_rows += point_data.back().ambient;
    }
    for (std::size_t i = 0; i < cfg.components.size(); ++i)
        loop_rows += static_cast<std::size_t>(cfg.components[i].mu_perp) *
                     static_cast<std::size_t>(summaries[i].gamma + 2 * cfg.components[i].genus);

    IntMatrix sys(loop_rows + point_rows, total_w + total_c);
    std::size_t row = 0;
    for (const CurveComponent& c : cfg.components) {
        const std::size_t off = offset_of[c.id];
        const std::size_t mu = static_cast<std::size_t>(c.mu_perp);
        for (const SpecialPoint& q : cfg.special_points)
            for (const SpecialPointIncidence& si : q.incidences)
                if (si.component == c.id)
                    for (const IntMatrix& a : si.branch_monodromies) {
                        set_block(sys, row, off, subtract_identity(a));
                        row += mu;
                    }
        for (const IntMatrix& a : c.genus_loop_monodromies) {
            set_block(sys, row, off, subtract_identity(a));
            row += mu;
        }
    }
    std::size_t c_off = total_w;
    for (std::size_t p = 0; p < cfg.special_points.size(); ++p) {
        const SpecialPoint& q = cfg.special_points[p];
        const IntMatrix& gen = point_data[p].relative_cycles->generators();
        std::size_t b_off = 0;
        for (const SpecialPointIncidence& si : q.incidences) {
            const CurveComponent* comp = find_component(cfg, si.component);
            const std::size_t mu = static_cast<std::size_t>(comp->mu_perp);
            const std::size_t w_off = offset_of[si.component];
            for (std::size_t b = 0; b < si.branch_monodromies.size(); ++b) {
                set_block(sys, row + b_off, w_off, IntMatrix::identity(mu));
                for (std::size_t rr = 0; rr < mu; ++rr)
                    for (std::size_t cc = 0; cc < gen.cols(); ++cc)
                        sys(row + b_off + rr, c_off + cc) = -gen(b_off + rr, cc);
                b_off += mu;
            }
        }
        row += point_data[p].ambient;
        c_off += gen.cols();
    }

    Sublattice kernel = kernel_basis(sys);
    std::vector<std::size_t> w_coords(total_w);
    for (std::size_t i = 0; i < total_w; ++i) w_coords[i] = i;
    Sublattice classes = project_lattice(kernel, w_coords);
    // The coefficient block is determined by w, so the projection keeps the rank.
    if (classes.rank() != kernel.rank())
        throw EngineError("constraint solve lost rank under projection");
    long long bound = 0;
    for (const ComponentSummary& s : summaries) bound += s.kernel_rank;
    if (static_cast<long long>(classes.rank()) > bound)
        throw EngineError("constrained solution exceeds the unconstrained loop kernel");

    TopResult out;
    out.rank = {static_cast<long long>(classes.rank()), static_cast<long long>(classes.rank())};
    out.basis = std::move(classes);
    out.exact_mode = true;
    return out;
}

HomologyReport vanishing_betti(const HypersurfaceConfig& cfg, ComputeMode mode,
                               bool assume_phi_injective) {
    HomologyReport rep;
    rep.n = cfg.n;
    rep.d = cfg.d;
    rep.label = cfg.label;
    rep.components = corollary_checks(cfg);
    TopResult top = vanishing_top(cfg, mode);
    rep.mode = top.exact_mode ? "exact" : "rank-bound";
    rep.chi_vanishing = vanishing_euler(cfg);
    rep.b_top = top.rank;
    rep.b_top_basis = std::move(top.basis);

    bool all_flagged = true, all_rank_zero_fibre = true;
    long long sum_min = 0, sum_mu = 0;
    for (const ComponentSummary& s : rep.components) {
        if (!(s.loop_without_unit_eigenvalue || s.rank_zero_special_fibre)) all_flagged = false;
        if (!s.rank_zero_special_fibre) all_rank_zero_fibre = false;
        sum_min += s.min_loop_kernel_rank;
        sum_mu += s.mu_perp;
    }
    rep.top_forced_zero_by_corollary = !rep.components.empty() && all_flagged;
    if (rep.b_top.hi > sum_min)
        throw EngineError("top vanishing rank exceeds the loop kernel bound");
    if (rep.top_forced_zero_by_corollary && rep.b_top.exact() && rep.b_top.lo != 0)
        throw EngineError("a corollary forces top rank zero but the constraint solve disagrees");

    const long long shift = (cfg.n % 2 == 0) ? -rep.chi_vanishing : rep.chi_vanishing;
    RankRange mid{rep.b_top.lo + shift, rep.b_top.hi + shift};
    if (mid.hi < 0)
        throw EngineError("middle vanishing rank would be negative: local data is inconsistent");
    if (mid.lo < 0) {  // the middle rank is a rank, so the pair tightens together
        mid.lo = 0;
        rep.b_top.lo = -shift;
    }
    rep.b_mid = mid;

    if (all_rank_zero_fibre) {
        Int cf = 0;
        const long long sgn_n = (cfg.n % 2 == 0) ? 1 : -1;
        for (const ComponentSummary& s : rep.components)
            cf += Int(s.loop_count - 2) * Int(s.mu_perp);
        for (const SpecialPoint& q : cfg.special_points) cf += Int(sgn_n) * Int(q.chi_fiber - 1);
        for (const IsolatedPoint& r : cfg.isolated_points) cf += Int(r.milnor_number);
        rep.betti_via_closed_form = to_long_long(cf);
        if (rep.b_mid.exact() && rep.b_mid.lo != *rep.betti_via_closed_form)
            throw EngineError("closed-form middle rank disagrees with the Euler identity");
    }

    if (cfg.components.empty())
        rep.torsion_note = "both vanishing groups are free";
    else if (all_rank_zero_fibre)
        rep.torsion_note = "top vanishing group is free; middle vanishing group is free";
    else
        rep.torsion_note = "top vanishing group is free; middle torsion undetermined by rank data";

    rep.smooth = smooth_euler(cfg.n, cfg.d);
    AbsoluteHomology& abs = rep.absolute;
    {
        std::ostringstream os;
        os << "H_k(V) = H_k(P^" << cfg.n << ") for k outside {" << cfg.n << ", " << cfg.n + 1
           << ", " << cfg.n + 2 << "}";
        abs.away_isomorphisms = os.str();
    }
    abs.b_top_absolute_upper = 1 + sum_mu;
    abs.b_middle_upper = rep.smooth.b_n;
    if (cfg.n % 2 == 0) {
        abs.b_top_absolute = RankRange{1 + rep.b_top.lo, 1 + rep.b_top.hi};
        std::ostringstream os;
        os << "b_" << cfg.n << "(V) = " << rep.smooth.b_n << " - b∨_" << cfg.n + 1
           << " + rank ker Phi_" << cfg.n + 1;
        abs.b_n_formula = os.str();
        if (assume_phi_injective) {
            RankRange bn{rep.smooth.b_n - rep.b_mid.hi, rep.smooth.b_n - rep.b_mid.lo};
            if (bn.hi < 0)
                throw EngineError("the injectivity assertion forces a negative middle rank of V");
            if (bn.lo < 0) bn.lo = 0;
            abs.b_n_assuming_injective = bn;
            abs.b_n_plus_1_assuming_injective = 0;
        }
    }

    if (cfg.n == 2 && cfg.num_irreducible_components_of_V) {
        const long long r = *cfg.num_irreducible_components_of_V;
        abs.expected_top_from_components = r - 1;
        if (r - 1 > sum_mu)
            throw EngineError(
                "irreducible component count violates the bound r - 1 <= sum of mu_perp");
        if (rep.b_top.exact()) {
            if (rep.b_top.lo != r - 1)
                throw EngineError(
                    "top vanishing rank disagrees with the component count identity r - 1");
        } else if (r - 1 < rep.b_top.lo || r - 1 > rep.b_top.hi) {
            throw EngineError(
                "component count identity r - 1 falls outside the computed rank range");
        }
        abs.components_identity_consistent = true;
    }

    return rep;
}

}  // namespace vanhom
