#include "vanhom/report_io.hpp"

#include <fstream>
#include <sstream>

namespace vanhom {

namespace {

using nlohmann::json;

json range_json(const RankRange& r) {
    json j;
    j["lo"] = r.lo;
    j["hi"] = r.hi;
    j["exact"] = r.exact();
    return j;
}

std::string range_text(const RankRange& r) {
    std::ostringstream os;
    if (r.exact())
        os << "= " << r.lo;
    else
        os << "in [" << r.lo << ", " << r.hi << "]";
    return os.str();
}

json lattice_json(const Sublattice& l) {
    json j;
    j["ambient"] = l.ambient_dim();
    j["rank"] = l.rank();
    json vecs = json::array();
    const IntMatrix& g = l.generators();
    for (std::size_t c = 0; c < g.cols(); ++c) {
        json v = json::array();
        for (std::size_t r = 0; r < g.rows(); ++r) v.push_back(to_long_long(g(r, c)));
        vecs.push_back(std::move(v));
    }
    j["basis_vectors"] = std::move(vecs);
    return j;
}

bool any_oracle_failure(const HomologyReport& rep) {
    for (const OracleVerdict& v : rep.oracle_verdicts)
        if (!v.pass) return true;
    return false;
}

}  // namespace

std::string mode_name(ComputeMode mode) {
    switch (mode) {
        case ComputeMode::Auto: return "auto";
        case ComputeMode::Exact: return "exact";
        default: return "rank";
    }
}

nlohmann::json report_to_json(const HomologyReport& rep, const HypersurfaceConfig& cfg,
                              const RunOptions& opts) {
    json j;
    j["schema"] = "vanhom-report/1";
    j["status"] = any_oracle_failure(rep) ? "oracle-failure" : "ok";
    j["config"] = config_to_json(cfg);

    json jo;
    jo["mode"] = mode_name(opts.mode);
    jo["oracle"] = opts.run_oracle;
    jo["format"] = opts.format == OutputFormat::Machine ? "machine" : "text";
    jo["assume_phi_injective"] = opts.assume_phi_injective;
    j["options"] = std::move(jo);

    json r;
    r["n"] = rep.n;
    r["d"] = rep.d;
    r["label"] = rep.label;
    r["mode"] = rep.mode;
    r["chi_vanishing"] = rep.chi_vanishing;
    r["degree_top"] = rep.n + 2;
    r["degree_mid"] = rep.n + 1;
    r["b_top"] = range_json(rep.b_top);
    r["b_mid"] = range_json(rep.b_mid);
    if (rep.b_top_basis) r["b_top_basis"] = lattice_json(*rep.b_top_basis);

    json comps = json::array();
    for (const ComponentSummary& s : rep.components) {
        json c;
        c["id"] = s.id;
        c["mu_perp"] = s.mu_perp;
        c["genus"] = s.genus;
        c["nu"] = s.nu;
        c["gamma"] = s.gamma;
        c["loop_count"] = s.loop_count;
        c["kernel_rank"] = s.kernel_rank;
        c["min_loop_kernel_rank"] = s.min_loop_kernel_rank;
        c["loop_without_unit_eigenvalue"] = s.loop_without_unit_eigenvalue;
        c["rank_zero_special_fibre"] = s.rank_zero_special_fibre;
        c["no_special_points"] = s.no_special_points;
        c["block_offset"] = s.block_offset;
        comps.push_back(std::move(c));
    }
    r["components"] = std::move(comps);
    r["top_forced_zero_by_corollary"] = rep.top_forced_zero_by_corollary;
    if (rep.betti_via_closed_form) r["betti_via_closed_form"] = *rep.betti_via_closed_form;
    r["torsion_note"] = rep.torsion_note;

    json sm;
    sm["chi"] = rep.smooth.chi;
    sm["b_n"] = rep.smooth.b_n;
    r["smooth"] = std::move(sm);

    json ab;
    ab["away_isomorphisms"] = rep.absolute.away_isomorphisms;
    ab["b_top_absolute_upper"] = rep.absolute.b_top_absolute_upper;
    ab["b_middle_upper"] = rep.absolute.b_middle_upper;
    if (rep.absolute.b_top_absolute)
        ab["b_top_absolute"] = range_json(*rep.absolute.b_top_absolute);
    if (rep.absolute.expected_top_from_components)
        ab["expected_top_from_components"] = *rep.absolute.expected_top_from_components;
    if (rep.absolute.components_identity_consistent)
        ab["components_identity_consistent"] = *rep.absolute.components_identity_consistent;
    if (!rep.absolute.b_n_formula.empty()) ab["b_n_formula"] = rep.absolute.b_n_formula;
    if (rep.absolute.b_n_assuming_injective)
        ab["b_n_assuming_injective"] = range_json(*rep.absolute.b_n_assuming_injective);
    if (rep.absolute.b_n_plus_1_assuming_injective)
        ab["b_n_plus_1_assuming_injective"] = *rep.absolute.b_n_plus_1_assuming_injective;
    r["absolute"] = std::move(ab);

    json orc;
    orc["ran"] = rep.oracle_ran;
    json verdicts = json::array();
    for (const OracleVerdict& v : rep.oracle_verdicts) {
        json jv;
        jv["component"] = v.component;
        jv["check"] = v.check;
        jv["pass"] = v.pass;
        jv["detail"] = v.detail;
        verdicts.push_back(std::move(jv));
    }
    orc["verdicts"] = std::move(verdicts);
    r["oracle"] = std::move(orc);

    j["report"] = std::move(r);
    return j;
}

std::string report_to_text(const HomologyReport& rep, const HypersurfaceConfig& cfg) {
    std::ostringstream os;
    os << (rep.label.empty() ? "(unlabeled)" : rep.label) << ": degree " << rep.d
       << " hypersurface in P^" << rep.n + 1 << " (n = " << rep.n << ")\n";
    os << "mode: " << rep.mode << "\n";
    os << "smooth member: chi = " << rep.smooth.chi << ", b_" << rep.n << " = " << rep.smooth.b_n
       << "\n\n";

    if (rep.components.empty()) {
        os << "singular locus: " << cfg.isolated_points.size() << " isolated point(s), no curve\n";
    } else {
        os << "singular locus components:\n";
        for (const ComponentSummary& s : rep.components) {
            os << "  " << s.id << ": mu_perp " << s.mu_perp << ", genus " << s.genus << ", nu "
               << s.nu << ", gamma " << s.gamma << ", loops " << s.loop_count
               << ", joint kernel rank " << s.kernel_rank << "\n";
            if (s.loop_without_unit_eigenvalue)
                os << "    a loop operator has no unit eigenvalue: top contribution vanishes\n";
            if (s.rank_zero_special_fibre)
                os << "    a special fibre has rank zero: top contribution vanishes\n";
            if (s.no_special_points)
                os << "    no special points on this component\n";
        }
    }
    if (!cfg.special_points.empty()) {
        os << "special points:\n";
        for (const SpecialPoint& q : cfg.special_points)
            os << "  " << q.id << ": chi_fiber " << q.chi_fiber << ", b_fiber_free "
               << q.b_fiber_free << ", relative cycle lattice "
               << (q.relative_cycle_lattice ? "given" : (q.b_fiber_free == 0 ? "forced zero" : "absent"))
               << "\n";
    }
    if (!cfg.isolated_points.empty()) {
        os << "isolated points:\n";
        for (const IsolatedPoint& p : cfg.isolated_points)
            os << "  " << p.id << ": milnor number " << p.milnor_number << "\n";
    }

    os << "\nvanishing homology (degrees " << rep.n + 1 << " and " << rep.n + 2 << " only):\n";
    os << "chi(vanishing) = " << rep.chi_vanishing << "\n";
    os << "b\u2228_" << rep.n + 2 << " " << range_text(rep.b_top) << "\n";
    os << "b\u2228_" << rep.n + 1 << " " << range_text(rep.b_mid) << "\n";
    if (rep.top_forced_zero_by_corollary)
        os << "top rank forced to zero on every component\n";
    if (rep.betti_via_closed_form)
        os << "middle rank by the rank-zero-fibre closed form: " << *rep.betti_via_closed_form
           << "\n";
    if (rep.b_top_basis && rep.b_top_basis->rank() > 0) {
        os << "top basis vectors (coordinates in the transversal blocks";
        for (const ComponentSummary& s : rep.components)
            os << "; " << s.id << " at offset " << s.block_offset;
        os << "):\n";
        const IntMatrix& g = rep.b_top_basis->generators();
        for (std::size_t c = 0; c < g.cols(); ++c) {
            os << "  (";
            for (std::size_t r = 0; r < g.rows(); ++r) os << (r ? ", " : "") << g(r, c);
            os << ")\n";
        }
    }
    os << "torsion: " << rep.torsion_note << "\n";

    os << "\nabsolute homology of V:\n";
    os << rep.absolute.away_isomorphisms << "\n";
    os << "b_" << rep.n + 2 << "(V) <= " << rep.absolute.b_top_absolute_upper << "\n";
    os << "b_" << rep.n << "(V) <= " << rep.absolute.b_middle_upper << "\n";
    if (rep.absolute.b_top_absolute)
        os << "b_" << rep.n + 2 << "(V) " << range_text(*rep.absolute.b_top_absolute) << "\n";
    if (!rep.absolute.b_n_formula.empty()) os << rep.absolute.b_n_formula << "\n";
    if (rep.absolute.b_n_assuming_injective) {
        os << "b_" << rep.n << "(V) " << range_text(*rep.absolute.b_n_assuming_injective)
           << " and b_" << rep.n + 1 << "(V) = " << *rep.absolute.b_n_plus_1_assuming_injective
           << ", asserting ker Phi_" << rep.n + 1 << " = 0\n";
    }
    if (rep.absolute.expected_top_from_components) {
        os << "component count identity: b\u2228_4 = r - 1 = "
           << *rep.absolute.expected_top_from_components << " ("
           << (rep.absolute.components_identity_consistent.value_or(false) ? "consistent"
                                                                           : "contradicted")
           << ")\n";
    }

    if (rep.oracle_ran) {
        std::size_t passed = 0;
        for (const OracleVerdict& v : rep.oracle_verdicts)
            if (v.pass) ++passed;
        os << "\noracle: " << passed << "/" << rep.oracle_verdicts.size()
           << " verdicts passed\n";
        for (const OracleVerdict& v : rep.oracle_verdicts)
            if (!v.pass)
                os << "  FAIL " << v.component << " " << v.check << ": " << v.detail << "\n";
    }
    return os.str();
}

RunOutcome run(const RunOptions& opts) {
    RunOutcome out;
    std::ifstream file(opts.input_path, std::ios::binary);
    if (!file) {
        out.exit_code = 1;
        out.errors = "cannot open " + opts.input_path + "\n";
        return out;
    }
    std::stringstream buf;
    buf << file.rdbuf();
    if (file.bad()) {
        out.exit_code = 1;
        out.errors = "read failure on " + opts.input_path + "\n";
        return out;
    }

    HypersurfaceConfig cfg;
    try {
        cfg = parse_config(buf.str());
    } catch (const ConfigError& e) {
        out.exit_code = 2;
        out.errors = std::string(e.what()) + "\n";
        return out;
    }
    std::vector<Violation> violations = validate(cfg);
    if (!violations.empty()) {
        out.exit_code = 2;
        std::ostringstream os;
        os << "invalid config:\n";
        for (const Violation& v : violations) os << "  " << v.where << ": " << v.message << "\n";
        out.errors = os.str();
        return out;
    }

    HomologyReport rep;
    try {
        rep = vanishing_betti(cfg, opts.mode, opts.assume_phi_injective);
    } catch (const ExactModeError& e) {
        out.exit_code = 2;
        out.errors = std::string(e.what()) + "\n";
        return out;
    } catch (const EngineError& e) {
        out.exit_code = 4;
        out.errors = std::string("inconsistent input data: ") + e.what() + "\n";
        return out;
    } catch (const std::overflow_error& e) {
        out.exit_code = 2;
        out.errors = std::string("value out of range: ") + e.what() + "\n";
        return out;
    }

    if (opts.run_oracle) {
        rep.oracle_verdicts = oracle_check(cfg);
        rep.oracle_ran = true;
    }

    out.output = opts.format == OutputFormat::Machine
                     ? report_to_json(rep, cfg, opts).dump(2) + "\n"
                     : report_to_text(rep, cfg);
    if (any_oracle_failure(rep)) {
        out.exit_code = 3;
        std::size_t failed = 0;
        for (const OracleVerdict& v : rep.oracle_verdicts)
            if (!v.pass) ++failed;
        out.errors = std::to_string(failed) + " oracle verdict(s) failed\n";
    }
    return out;
}

}  // namespace vanhom
