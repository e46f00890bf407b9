#ifndef PQSURF_REPORTS_HPP
#define PQSURF_REPORTS_HPP

#include <nlohmann/json.hpp>

#include "pqsurf/scenario.hpp"
#include "pqsurf/smoothing.hpp"

namespace pqs::reports {

/// JSON views over the library results. Key order is fixed, values are
/// exact (fractions rendered as "p/q" strings), so the serialized bytes
/// are stable for identical inputs.

nlohmann::ordered_json resolve_point(long long n, long long q);
nlohmann::ordered_json resolve_scenario(const Scenario& sc);
nlohmann::ordered_json invariants(const Scenario& sc);
nlohmann::ordered_json partial_smoothing(const Scenario& sc, long long smooth_count);
nlohmann::ordered_json tangent(const Scenario& sc);
nlohmann::ordered_json pardini(const Scenario& sc);
nlohmann::ordered_json natdef(const Scenario& sc);
nlohmann::ordered_json relations(const Scenario& sc, bool natural);
nlohmann::ordered_json smooth_check(const Scenario& sc, const Fraction& s);
nlohmann::ordered_json bidouble(BiDegree d1, BiDegree d2, BiDegree d3);

} // namespace pqs::reports

#endif
