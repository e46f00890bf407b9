#ifndef PQSURF_SCENARIO_HPP
#define PQSURF_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pqsurf/pardini.hpp"
#include "pqsurf/pqsurface.hpp"
#include "pqsurf/tangentcoh.hpp"

namespace pqs {

/// Extra integers the obstruction model cannot derive from the covers:
/// the split of the cokernel into the two square-canonical spaces of the
/// intermediate curves (k1, k2) and the remaining piece z.
struct ObSupplement {
    long long z = 0;
    long long k1 = 0;
    long long k2 = 0;

    bool operator==(const ObSupplement&) const = default;
};

/// One named input configuration: the two covers with the twist and the
/// acting subgroup, optionally the quadric building data and the
/// obstruction supplements.
struct Scenario {
    std::string name;
    long long n = 0;
    std::vector<long long> monodromy1;
    std::vector<long long> monodromy2;
    long long twist = 1;
    long long subgroup_order = 1;
    std::optional<std::map<long long, BiDegree>> building_components;
    std::optional<ObSupplement> ob;

    PQSpec spec() const;
    std::optional<BuildingData> building_data() const;

    bool operator==(const Scenario&) const = default;
};

std::vector<std::string> builtin_scenario_names();
Scenario builtin_scenario(const std::string& name);

/// Builtin name first, then a path to a JSON scenario file.
Scenario load_scenario(const std::string& name_or_path);

Scenario parse_scenario(const nlohmann::json& j);
nlohmann::ordered_json scenario_to_json(const Scenario& sc);

/// Obstruction model assembled from the scenario (needs the supplements,
/// RDP-only singularities and A-type smoothing data).
ObModel build_ob_model(const Scenario& sc);

/// Coefficient names for the natural deformations of the scenario's
/// cover. Builtins carry their conventional names; otherwise every
/// admissible coefficient with a nonzero section space gets h{m}_{chi}.
DeformationMap natural_deformation_symbols(const Scenario& sc, const BuildingData& bd);

} // namespace pqs

#endif
