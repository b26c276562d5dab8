#pragma once

#include "vanhom/int_matrix.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vanhom {

/* Declarative description of a degree-d hypersurface V in P^{n+1} whose
   singular locus is a curve (finitely many irreducible components) plus
   finitely many extra isolated singular points.

   Per curve component Sigma_i:
     - genus g_i and either nu_i (generic member count of the pencil axis on
       Sigma_i) or the degree of Sigma_i, in which case nu_i = d * degree;
     - mu_perp, the Milnor number of the generic transversal singularity type;
     - one unimodular vertical monodromy matrix per genus loop (2g of them),
       acting on Z^{mu_perp}.
   Per special point q (a point of Q, where the transversal type degenerates):
     - the incident components, with one unimodular vertical monodromy per
       local branch of that component at q;
     - chi_fiber = Euler characteristic of the local Milnor fibre at q;
     - b_fiber_free = rank of H_{n-1} of that fibre;
     - optionally the lattice of relative cycles at q, as generator rows in
       the direct sum of the branch lattices (declaration order).
   Isolated points carry their Milnor number. */

struct CurveComponent {
    std::string id;
    long long genus = 0;
    std::optional<long long> nu;      // exactly one of nu / degree
    std::optional<long long> degree;
    long long mu_perp = 1;
    std::vector<IntMatrix> genus_loop_monodromies;  // 2 * genus matrices

    bool operator==(const CurveComponent&) const = default;
};

struct SpecialPointIncidence {
    std::string component;
    std::vector<IntMatrix> branch_monodromies;  // one per local branch at q

    bool operator==(const SpecialPointIncidence&) const = default;
};

struct SpecialPoint {
    std::string id;
    std::vector<SpecialPointIncidence> incidences;
    long long chi_fiber = 0;
    long long b_fiber_free = 0;
    std::optional<IntMatrix> relative_cycle_lattice;  // generator rows

    bool operator==(const SpecialPoint&) const = default;
};

struct IsolatedPoint {
    std::string id;
    long long milnor_number = 1;

    bool operator==(const IsolatedPoint&) const = default;
};

struct HypersurfaceConfig {
    long long n = 2;  // V has dimension n, lives in P^{n+1}
    long long d = 1;
    std::string label;
    std::vector<CurveComponent> components;
    std::vector<SpecialPoint> special_points;
    std::vector<IsolatedPoint> isolated_points;
    std::optional<long long> num_irreducible_components_of_V;

    bool operator==(const HypersurfaceConfig&) const = default;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Violation {
    std::string where;
    std::string message;
};

// Strict JSON reader: unknown keys, wrong types, and ragged matrices are
// errors; syntax errors carry the byte position.  The result is materialized
// but not yet validated.
HypersurfaceConfig parse_config(const std::string& text);

nlohmann::json config_to_json(const HypersurfaceConfig& cfg);
std::string serialize_config(const HypersurfaceConfig& cfg);

// Semantic checks (dimensions, unimodularity, cross-references, relative
// cycle lattice constraints).  Violations are returned as data, not thrown.
std::vector<Violation> validate(const HypersurfaceConfig& cfg);

struct ComponentCounts {
    std::string id;
    long long nu = 0;        // resolved from degree when needed
    long long gamma = 0;     // local branches of this component over all of Q
    long long loop_count = 0;  // 2g + nu + gamma
};

struct DerivedCounts {
    std::vector<ComponentCounts> per_component;
    long long num_special_points = 0;
};

// Precondition: validate(cfg) is clean.
DerivedCounts derived_counts(const HypersurfaceConfig& cfg);

const CurveComponent* find_component(const HypersurfaceConfig& cfg, const std::string& id);

}  // namespace vanhom
