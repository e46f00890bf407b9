#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "pqsurf/curvecover.hpp"
#include "pqsurf/hj.hpp"
#include "pqsurf/pardini.hpp"
#include "pqsurf/reports.hpp"
#include "pqsurf/scenario.hpp"
#include "pqsurf/tangentcoh.hpp"
#include "pqsurf/verify.hpp"

namespace py = pybind11;

namespace {

/// Reports cross the boundary as plain dicts/lists so the python side
/// needs no wrapper classes and sees exactly the CLI's JSON schema.
py::object to_py(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

pqs::BiDegree as_bidegree(const std::pair<long long, long long>& p) {
    return {p.first, p.second};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact invariants, cohomology and deformation bookkeeping for "
              "cyclic product-quotient surfaces";

    py::register_exception<pqs::error>(m, "PqsurfError");

    m.def("hj_expand", &pqs::hj_expand, py::arg("n"), py::arg("q"),
          "Continued-fraction string of n/q with all entries >= 2");
    m.def("hj_evaluate", &pqs::hj_evaluate, py::arg("b"),
          "Evaluate a continued-fraction string back to the reduced pair "
          "(n, q)");
    m.def(
        "resolve",
        [](long long n, long long q) {
            return to_py(pqs::reports::resolve_point(n, q));
        },
        py::arg("n"), py::arg("q"),
        "Resolution data of the cyclic point 1/n(1,q): string, h, e, B");

    m.def(
        "genus",
        [](long long n, const std::vector<long long>& monodromy) {
            return pqs::genus(pqs::CoverSpec(n, monodromy));
        },
        py::arg("n"), py::arg("monodromy"),
        "Genus of the totally branched cyclic cover of the line");
    m.def(
        "eigendims",
        [](long long n, const std::vector<long long>& monodromy, long long k) {
            return pqs::eigendims(pqs::CoverSpec(n, monodromy), k).dims;
        },
        py::arg("n"), py::arg("monodromy"), py::arg("k"),
        "Character-by-character dimensions of the k-differentials");

    m.def("epsilon", &pqs::epsilon, py::arg("n"), py::arg("m"), py::arg("a"),
          py::arg("b"), "Carry exponent of the cover relation w_a w_b");
    m.def(
        "ci_def_dim",
        [](long long ambient, std::pair<long long, long long> degrees) {
            return pqs::ci_def_dim(ambient, degrees);
        },
        py::arg("ambient_dim"), py::arg("degrees"),
        "Expected deformation dimension of a complete intersection");

    m.def("builtin_scenarios", &pqs::builtin_scenario_names,
          "Names of the four built-in surfaces");
    m.def(
        "scenario",
        [](const std::string& name) {
            return to_py(pqs::scenario_to_json(pqs::load_scenario(name)));
        },
        py::arg("name_or_path"),
        "Load a builtin scenario or a JSON scenario file");

    auto scenario_report =
        [](nlohmann::ordered_json (*builder)(const pqs::Scenario&)) {
            return [builder](const std::string& name) {
                return to_py(builder(pqs::load_scenario(name)));
            };
        };
    m.def("resolve_scenario", scenario_report(&pqs::reports::resolve_scenario),
          py::arg("name_or_path"), "Singular set with resolution data");
    m.def("invariants", scenario_report(&pqs::reports::invariants),
          py::arg("name_or_path"), "K^2, e, q, pg, chi of the resolution");
    m.def("tangent", scenario_report(&pqs::reports::tangent),
          py::arg("name_or_path"),
          "Tangent-sheaf cohomology and deformation ledgers");
    m.def("pardini", scenario_report(&pqs::reports::pardini),
          py::arg("name_or_path"),
          "Building data of the cover of the quadric");
    m.def("natdef", scenario_report(&pqs::reports::natdef),
          py::arg("name_or_path"), "Natural-deformation dimension count");

    m.def(
        "partial_smoothing",
        [](const std::string& name, long long count) {
            return to_py(pqs::reports::partial_smoothing(
                pqs::load_scenario(name), count));
        },
        py::arg("name_or_path"), py::arg("smooth_count"),
        "K^2 after locally smoothing this many basic 1/4(1,1) points");
    m.def(
        "relations",
        [](const std::string& name, bool natural) {
            return to_py(
                pqs::reports::relations(pqs::load_scenario(name), natural));
        },
        py::arg("name_or_path"), py::arg("natural") = false,
        "Multiplication relations of the (deformed) cover algebra");
    m.def(
        "smooth_check",
        [](const std::string& name, const std::string& s) {
            return to_py(pqs::reports::smooth_check(pqs::load_scenario(name),
                                                    pqs::Fraction::parse(s)));
        },
        py::arg("name_or_path"), py::arg("s") = "1",
        "Jacobian certificate for the one-parameter smoothing");
    m.def(
        "bidouble",
        [](std::pair<long long, long long> d1,
           std::pair<long long, long long> d2,
           std::pair<long long, long long> d3) {
            return to_py(pqs::reports::bidouble(
                as_bidegree(d1), as_bidegree(d2), as_bidegree(d3)));
        },
        py::arg("d1"), py::arg("d2"), py::arg("d3"),
        "Invariants of the bidouble cover of the quadric");

    m.def(
        "verify_paper",
        [](const std::string& filter) {
            py::list out;
            for (const auto& r : pqs::run_paper_checks(filter)) {
                py::dict d;
                d["id"] = r.id;
                d["block"] = r.block;
                d["expected"] = r.expected;
                d["computed"] = r.computed;
                d["pass"] = r.pass;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("filter") = "",
        "Run the pinned claims and return one record per check");
}
