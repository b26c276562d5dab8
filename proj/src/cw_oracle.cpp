#include "vanhom/cw_oracle.hpp"

#include "vanhom/local_systems.hpp"

#include <sstream>
#include <stdexcept>

namespace vanhom {

PairComplex build_pair_complex(std::size_t mu_perp, std::vector<IntMatrix> loop_operators) {
    for (const IntMatrix& a : loop_operators)
        if (a.rows() != mu_perp || a.cols() != mu_perp)
            throw std::invalid_argument("loop operator does not act on Z^mu_perp");
    PairComplex c;
    c.mu_perp = mu_perp;
    c.boundary = IntMatrix(mu_perp, mu_perp * loop_operators.size());
    for (std::size_t j = 0; j < loop_operators.size(); ++j)
        set_block(c.boundary, 0, j * mu_perp, subtract_identity(loop_operators[j]));
    c.loop_operators = std::move(loop_operators);
    return c;
}

PairHomology pair_homology(const PairComplex& complex) {
    PairHomology h;
    SmithForm f = smith_normal_form(complex.boundary);
    h.h_top_rank = complex.boundary.cols() - f.rank;
    h.h_mid.free_rank = static_cast<long long>(complex.boundary.rows() - f.rank);
    for (const Int& d : f.diagonal())
        if (d > 1) h.h_mid.torsion.push_back(d);
    return h;
}

std::vector<IntMatrix> component_loop_operators(const CurveComponent& comp,
                                                const HypersurfaceConfig& cfg) {
    const std::size_t mu = static_cast<std::size_t>(comp.mu_perp);
    std::vector<IntMatrix> ops;
    const long long nu = comp.nu ? *comp.nu : cfg.d * *comp.degree;
    for (long long k = 0; k < nu; ++k) ops.push_back(IntMatrix::identity(mu));
    for (const SpecialPoint& q : cfg.special_points)
        for (const SpecialPointIncidence& si : q.incidences)
            if (si.component == comp.id)
                for (const IntMatrix& a : si.branch_monodromies) ops.push_back(a);
    for (const IntMatrix& a : comp.genus_loop_monodromies) ops.push_back(a);
    return ops;
}

namespace {

std::string torsion_string(const std::vector<Int>& t) {
    if (t.empty()) return "none";
    std::ostringstream os;
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    return os.str();
}

}  // namespace

std::vector<OracleVerdict> verdicts_for_component(const CurveComponent& comp,
                                                  const HypersurfaceConfig& cfg,
                                                  const PairComplex& complex) {
    std::vector<OracleVerdict> out;
    const std::size_t mu = static_cast<std::size_t>(comp.mu_perp);
    const std::size_t w = complex.loop_operators.size();
    const PairHomology hom = pair_homology(complex);

    {  // (a) rank-nullity across the pair: ker gains exactly what coker keeps
        const long long expected =
            static_cast<long long>((w - 1) * mu) + hom.h_mid.free_rank;
        OracleVerdict v{comp.id, "kernel-cokernel-balance", false, ""};
        v.pass = static_cast<long long>(hom.h_top_rank) == expected;
        std::ostringstream os;
        os << "ker rank " << hom.h_top_rank << ", (|W|-1)mu + free coker = " << expected;
        v.detail = os.str();
        out.push_back(std::move(v));
    }

    {  // (b) Euler characteristic of the chain complex, and the loop census
        const long long sign = (cfg.n % 2 == 0) ? -1 : 1;  // (-1)^(n+1)
        const long long chain =
            sign * static_cast<long long>(complex.boundary.cols()) -
            sign * static_cast<long long>(complex.boundary.rows());
        const long long homological = sign * static_cast<long long>(hom.h_top_rank) -
                                      sign * hom.h_mid.free_rank;
        const long long expected = sign * static_cast<long long>((w - 1) * mu);
        long long census = 0;
        for (const ComponentCounts& cc : derived_counts(cfg).per_component)
            if (cc.id == comp.id) census = cc.loop_count;
        OracleVerdict v{comp.id, "euler-characteristic", false, ""};
        v.pass = chain == expected && homological == expected &&
                 census == static_cast<long long>(w);
        std::ostringstream os;
        os << "chain " << chain << ", homological " << homological << ", expected " << expected
           << ", loops " << w << " vs census " << census;
        v.detail = os.str();
        out.push_back(std::move(v));
    }

    {  // (c) each one-loop slice of the boundary matches the Wang contribution
        std::vector<IntMatrix> fresh = component_loop_operators(comp, cfg);
        OracleVerdict v{comp.id, "wang-blocks", false, ""};
        if (fresh.size() != w) {
            v.detail = "operator count mismatch";
            out.push_back(std::move(v));
        } else {
            bool ok = true;
            std::ostringstream os;
            for (std::size_t j = 0; j < w && ok; ++j) {
                IntMatrix block = complex.boundary.columns(j * mu, (j + 1) * mu);
                Sublattice ker = kernel_basis(block);
                CokernelInvariants coker = cokernel_invariants(block);
                LoopContribution wang = wang_contribution(fresh[j]);
                if (ker.rank() != wang.h_top.rank() || !(coker == wang.h_mid)) {
                    ok = false;
                    os << "block " << j << ": ker rank " << ker.rank() << " vs "
                       << wang.h_top.rank() << ", coker free " << coker.free_rank << " (torsion "
                       << torsion_string(coker.torsion) << ") vs " << wang.h_mid.free_rank
                       << " (torsion " << torsion_string(wang.h_mid.torsion) << ")";
                }
            }
            v.pass = ok;
            v.detail = ok ? "all blocks agree" : os.str();
            out.push_back(std::move(v));
        }
    }

    {  // (d) invariant cycles of each loop survive into the kernel of the pair
        std::vector<IntMatrix> fresh = component_loop_operators(comp, cfg);
        Sublattice full_kernel = kernel_basis(complex.boundary);
        OracleVerdict v{comp.id, "embedded-kernels", false, ""};
        bool ok = fresh.size() == w;
        std::ostringstream os;
        if (!ok) os << "operator count mismatch";
        for (std::size_t j = 0; j < fresh.size() && ok; ++j) {
            Sublattice ker_j = kernel_basis(subtract_identity(fresh[j]));
            const IntMatrix& basis = ker_j.generators();
            for (std::size_t c = 0; c < basis.cols() && ok; ++c) {
                IntVector embedded(complex.boundary.cols(), Int(0));
                for (std::size_t t = 0; t < mu; ++t) embedded[j * mu + t] = basis(t, c);
                if (!lattice_membership(full_kernel, embedded)) {
                    ok = false;
                    os << "loop " << j << ", kernel vector " << c
                       << " is not annihilated by the pair boundary";
                }
            }
        }
        v.pass = ok;
        v.detail = ok ? "every loop kernel embeds" : os.str();
        out.push_back(std::move(v));
    }

    return out;
}

std::vector<OracleVerdict> oracle_check(const HypersurfaceConfig& cfg) {
    std::vector<OracleVerdict> out;
    for (const CurveComponent& comp : cfg.components) {
        PairComplex complex = build_pair_complex(static_cast<std::size_t>(comp.mu_perp),
                                                 component_loop_operators(comp, cfg));
        std::vector<OracleVerdict> v = verdicts_for_component(comp, cfg, complex);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

}  // namespace vanhom
