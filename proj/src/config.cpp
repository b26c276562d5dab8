#include "vanhom/config.hpp"

#include "vanhom/lattice.hpp"

#include <set>
#include <sstream>

namespace vanhom {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

void expect_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& item : j.items())
        if (!allowed.count(item.key())) fail(path, "unknown key \"" + item.key() + "\"");
}

long long get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long long>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

const json& require(const json& j, const std::string& key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing required key \"" + key + "\"");
    return *it;
}

// A matrix is an array of equal-length rows of integers.
IntMatrix get_matrix(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected a matrix (array of rows)");
    std::vector<std::vector<long long>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& r = j[i];
        if (!r.is_array()) fail(path, "row " + std::to_string(i) + " is not an array");
        std::vector<long long> row;
        for (std::size_t k = 0; k < r.size(); ++k)
            row.push_back(get_int(r[k], path + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
        if (!rows.empty() && row.size() != rows[0].size())
            fail(path, "rows have different lengths");
        rows.push_back(std::move(row));
    }
    return IntMatrix::from_row_vectors(rows);
}

std::vector<IntMatrix> get_matrix_list(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of matrices");
    std::vector<IntMatrix> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(get_matrix(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

CurveComponent parse_component(const json& j, const std::string& path) {
    expect_keys(j, path, {"id", "genus", "nu", "degree", "mu_perp", "genus_loop_monodromies"});
    CurveComponent c;
    c.id = get_string(require(j, "id", path), path + ".id");
    c.genus = get_int(require(j, "genus", path), path + ".genus");
    if (j.contains("nu")) c.nu = get_int(j["nu"], path + ".nu");
    if (j.contains("degree")) c.degree = get_int(j["degree"], path + ".degree");
    c.mu_perp = get_int(require(j, "mu_perp", path), path + ".mu_perp");
    c.genus_loop_monodromies =
        get_matrix_list(require(j, "genus_loop_monodromies", path), path + ".genus_loop_monodromies");
    return c;
}

SpecialPoint parse_special_point(const json& j, const std::string& path) {
    expect_keys(j, path,
                {"id", "incidences", "chi_fiber", "b_fiber_free", "relative_cycle_lattice"});
    SpecialPoint q;
    q.id = get_string(require(j, "id", path), path + ".id");
    const json& inc = require(j, "incidences", path);
    if (!inc.is_array()) fail(path + ".incidences", "expected an array");
    for (std::size_t i = 0; i < inc.size(); ++i) {
        std::string ipath = path + ".incidences[" + std::to_string(i) + "]";
        expect_keys(inc[i], ipath, {"component", "branch_monodromies"});
        SpecialPointIncidence si;
        si.component = get_string(require(inc[i], "component", ipath), ipath + ".component");
        si.branch_monodromies =
            get_matrix_list(require(inc[i], "branch_monodromies", ipath), ipath + ".branch_monodromies");
        q.incidences.push_back(std::move(si));
    }
    q.chi_fiber = get_int(require(j, "chi_fiber", path), path + ".chi_fiber");
    q.b_fiber_free = get_int(require(j, "b_fiber_free", path), path + ".b_fiber_free");
    if (j.contains("relative_cycle_lattice"))
        q.relative_cycle_lattice = get_matrix(j["relative_cycle_lattice"], path + ".relative_cycle_lattice");
    return q;
}

IsolatedPoint parse_isolated(const json& j, const std::string& path) {
    expect_keys(j, path, {"id", "milnor_number"});
    IsolatedPoint r;
    r.id = get_string(require(j, "id", path), path + ".id");
    r.milnor_number = get_int(require(j, "milnor_number", path), path + ".milnor_number");
    return r;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_long_long(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

HypersurfaceConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("syntax error: ") + e.what());
    }
    const std::string root = "config";
    expect_keys(j, root,
                {"n", "d", "label", "components", "special_points", "isolated_points",
                 "num_irreducible_components_of_V"});
    HypersurfaceConfig cfg;
    cfg.n = get_int(require(j, "n", root), "n");
    cfg.d = get_int(require(j, "d", root), "d");
    if (j.contains("label")) cfg.label = get_string(j["label"], "label");
    if (j.contains("components")) {
        if (!j["components"].is_array()) fail("components", "expected an array");
        for (std::size_t i = 0; i < j["components"].size(); ++i)
            cfg.components.push_back(
                parse_component(j["components"][i], "components[" + std::to_string(i) + "]"));
    }
    if (j.contains("special_points")) {
        if (!j["special_points"].is_array()) fail("special_points", "expected an array");
        for (std::size_t i = 0; i < j["special_points"].size(); ++i)
            cfg.special_points.push_back(
                parse_special_point(j["special_points"][i], "special_points[" + std::to_string(i) + "]"));
    }
    if (j.contains("isolated_points")) {
        if (!j["isolated_points"].is_array()) fail("isolated_points", "expected an array");
        for (std::size_t i = 0; i < j["isolated_points"].size(); ++i)
            cfg.isolated_points.push_back(
                parse_isolated(j["isolated_points"][i], "isolated_points[" + std::to_string(i) + "]"));
    }
    if (j.contains("num_irreducible_components_of_V"))
        cfg.num_irreducible_components_of_V =
            get_int(j["num_irreducible_components_of_V"], "num_irreducible_components_of_V");
    return cfg;
}

nlohmann::json config_to_json(const HypersurfaceConfig& cfg) {
    json j;
    j["n"] = cfg.n;
    j["d"] = cfg.d;
    j["label"] = cfg.label;
    j["components"] = json::array();
    for (const CurveComponent& c : cfg.components) {
        json jc;
        jc["id"] = c.id;
        jc["genus"] = c.genus;
        if (c.nu) jc["nu"] = *c.nu;
        if (c.degree) jc["degree"] = *c.degree;
        jc["mu_perp"] = c.mu_perp;
        jc["genus_loop_monodromies"] = json::array();
        for (const IntMatrix& m : c.genus_loop_monodromies)
            jc["genus_loop_monodromies"].push_back(matrix_to_json(m));
        j["components"].push_back(std::move(jc));
    }
    j["special_points"] = json::array();
    for (const SpecialPoint& q : cfg.special_points) {
        json jq;
        jq["id"] = q.id;
        jq["incidences"] = json::array();
        for (const SpecialPointIncidence& si : q.incidences) {
            json ji;
            ji["component"] = si.component;
            ji["branch_monodromies"] = json::array();
            for (const IntMatrix& m : si.branch_monodromies)
                ji["branch_monodromies"].push_back(matrix_to_json(m));
            jq["incidences"].push_back(std::move(ji));
        }
        jq["chi_fiber"] = q.chi_fiber;
        jq["b_fiber_free"] = q.b_fiber_free;
        if (q.relative_cycle_lattice)
            jq["relative_cycle_lattice"] = matrix_to_json(*q.relative_cycle_lattice);
        j["special_points"].push_back(std::move(jq));
    }
    j["isolated_points"] = json::array();
    for (const IsolatedPoint& r : cfg.isolated_points) {
        json jr;
        jr["id"] = r.id;
        jr["milnor_number"] = r.milnor_number;
        j["isolated_points"].push_back(std::move(jr));
    }
    if (cfg.num_irreducible_components_of_V)
        j["num_irreducible_components_of_V"] = *cfg.num_irreducible_components_of_V;
    return j;
}

std::string serialize_config(const HypersurfaceConfig& cfg) { return config_to_json(cfg).dump(2); }

const CurveComponent* find_component(const HypersurfaceConfig& cfg, const std::string& id) {
    for (const CurveComponent& c : cfg.components)
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

void check_monodromy(std::vector<Violation>& out, const std::string& where, const IntMatrix& m,
                     long long mu) {
    if (m.rows() != static_cast<std::size_t>(mu) || m.cols() != static_cast<std::size_t>(mu)) {
        std::ostringstream os;
        os << "monodromy must be " << mu << "x" << mu << " to match mu_perp, got " << m.rows()
           << "x" << m.cols();
        out.push_back({where, os.str()});
        return;
    }
    if (!is_unimodular(m)) out.push_back({where, "monodromy is not unimodular (|det| != 1)"});
}

}  // namespace

std::vector<Violation> validate(const HypersurfaceConfig& cfg) {
    std::vector<Violation> out;
    if (cfg.n < 2) out.push_back({"n", "n must be at least 2"});
    if (cfg.d < 1) out.push_back({"d", "d must be at least 1"});
    if (cfg.num_irreducible_components_of_V && *cfg.num_irreducible_components_of_V < 1)
        out.push_back({"num_irreducible_components_of_V", "must be at least 1"});

    std::set<std::string> component_ids;
    for (std::size_t i = 0; i < cfg.components.size(); ++i) {
        const CurveComponent& c = cfg.components[i];
        const std::string where = "components[" + std::to_string(i) + "]";
        if (c.id.empty()) out.push_back({where + ".id", "id must be nonempty"});
        if (!component_ids.insert(c.id).second)
            out.push_back({where + ".id", "duplicate component id \"" + c.id + "\""});
        if (c.genus < 0) out.push_back({where + ".genus", "genus must be nonnegative"});
        if (c.mu_perp < 1) out.push_back({where + ".mu_perp", "mu_perp must be at least 1"});
        if (c.nu.has_value() == c.degree.has_value())
            out.push_back({where, "exactly one of nu and degree must be given"});
        if (c.nu && *c.nu < 1) out.push_back({where + ".nu", "nu must be at least 1"});
        if (c.degree && *c.degree < 1) out.push_back({where + ".degree", "degree must be at least 1"});
        if (c.genus >= 0 &&
            c.genus_loop_monodromies.size() != static_cast<std::size_t>(2 * c.genus)) {
            std::ostringstream os;
            os << "expected 2*genus = " << 2 * c.genus << " loop matrices, found "
               << c.genus_loop_monodromies.size();
            out.push_back({where + ".genus_loop_monodromies", os.str()});
        }
        for (std::size_t k = 0; k < c.genus_loop_monodromies.size(); ++k)
            check_monodromy(out, where + ".genus_loop_monodromies[" + std::to_string(k) + "]",
                            c.genus_loop_monodromies[k], c.mu_perp);
    }

    std::set<std::string> point_ids;
    for (std::size_t i = 0; i < cfg.special_points.size(); ++i) {
        const SpecialPoint& q = cfg.special_points[i];
        const std::string where = "special_points[" + std::to_string(i) + "]";
        if (q.id.empty()) out.push_back({where + ".id", "id must be nonempty"});
        if (!point_ids.insert(q.id).second)
            out.push_back({where + ".id", "duplicate special point id \"" + q.id + "\""});
        if (q.b_fiber_free < 0) out.push_back({where + ".b_fiber_free", "must be nonnegative"});
        if (q.incidences.empty())
            out.push_back({where + ".incidences", "a special point must lie on at least one component"});

        std::set<std::string> seen;
        long long ambient = 0;
        bool branch_dims_ok = true;
        for (std::size_t k = 0; k < q.incidences.size(); ++k) {
            const SpecialPointIncidence& si = q.incidences[k];
            const std::string iwhere = where + ".incidences[" + std::to_string(k) + "]";
            const CurveComponent* comp = find_component(cfg, si.component);
            if (!comp) {
                out.push_back({iwhere + ".component",
                               "unknown component \"" + si.component + "\""});
                branch_dims_ok = false;
                continue;
            }
            if (!seen.insert(si.component).second)
                out.push_back({iwhere + ".component",
                               "component \"" + si.component +
                                   "\" listed twice; use one incidence with several branches"});
            if (si.branch_monodromies.empty())
                out.push_back({iwhere + ".branch_monodromies", "at least one branch is required"});
            for (std::size_t b = 0; b < si.branch_monodromies.size(); ++b) {
                check_monodromy(out, iwhere + ".branch_monodromies[" + std::to_string(b) + "]",
                                si.branch_monodromies[b], comp->mu_perp);
                if (si.branch_monodromies[b].rows() != static_cast<std::size_t>(comp->mu_perp) ||
                    si.branch_monodromies[b].cols() != static_cast<std::size_t>(comp->mu_perp))
                    branch_dims_ok = false;
                ambient += comp->mu_perp;
            }
        }

        if (!q.relative_cycle_lattice) continue;
        const IntMatrix& L = *q.relative_cycle_lattice;
        const std::string lwhere = where + ".relative_cycle_lattice";
        if (!branch_dims_ok) continue;  // ambient not meaningful
        if (L.rows() > 0 && L.cols() != static_cast<std::size_t>(ambient)) {
            std::ostringstream os;
            os << "generator rows must have length " << ambient
               << " (sum of branch mu_perp in declaration order), got " << L.cols();
            out.push_back({lwhere, os.str()});
            continue;
        }
        IntMatrix gens =
            L.rows() > 0 ? L.transposed() : IntMatrix(static_cast<std::size_t>(ambient), 0);
        Sublattice lat = Sublattice::from_generators(static_cast<std::size_t>(ambient), gens);
        if (lat.rank() != static_cast<std::size_t>(q.b_fiber_free)) {
            std::ostringstream os;
            os << "relative cycle lattice has rank " << lat.rank() << " but b_fiber_free is "
               << q.b_fiber_free;
            out.push_back({lwhere, os.str()});
        }
        // Each generator must be annihilated blockwise by the branch monodromies.
        for (std::size_t g = 0; g < L.rows(); ++g) {
            std::size_t off = 0;
            bool ok = true;
            for (const SpecialPointIncidence& si : q.incidences) {
                const CurveComponent* comp = find_component(cfg, si.component);
                for (const IntMatrix& A : si.branch_monodromies) {
                    const std::size_t mu = static_cast<std::size_t>(comp->mu_perp);
                    IntVector block(mu);
                    for (std::size_t t = 0; t < mu; ++t) block[t] = L(g, off + t);
                    if (!is_zero_vector(subtract_identity(A) * block)) ok = false;
                    off += mu;
                }
            }
            if (!ok) {
                std::ostringstream os;
                os << "generator " << g << " is not fixed by every branch monodromy "
                   << "(must lie in the direct sum of the branch kernels)";
                out.push_back({lwhere, os.str()});
            }
        }
    }

    std::set<std::string> isolated_ids;
    for (std::size_t i = 0; i < cfg.isolated_points.size(); ++i) {
        const IsolatedPoint& r = cfg.isolated_points[i];
        const std::string where = "isolated_points[" + std::to_string(i) + "]";
        if (r.id.empty()) out.push_back({where + ".id", "id must be nonempty"});
        if (!isolated_ids.insert(r.id).second)
            out.push_back({where + ".id", "duplicate isolated point id \"" + r.id + "\""});
        if (r.milnor_number < 1) out.push_back({where + ".milnor_number", "must be at least 1"});
    }
    return out;
}

DerivedCounts derived_counts(const HypersurfaceConfig& cfg) {
    DerivedCounts dc;
    dc.num_special_points = static_cast<long long>(cfg.special_points.size());
    for (const CurveComponent& c : cfg.components) {
        ComponentCounts cc;
        cc.id = c.id;
        cc.nu = c.nu ? *c.nu : cfg.d * *c.degree;
        cc.gamma = 0;
        for (const SpecialPoint& q : cfg.special_points)
            for (const SpecialPointIncidence& si : q.incidences)
                if (si.component == c.id)
                    cc.gamma += static_cast<long long>(si.branch_monodromies.size());
        cc.loop_count = 2 * c.genus + cc.nu + cc.gamma;
        dc.per_component.push_back(std::move(cc));
    }
    return dc;
}

}  // namespace vanhom
