#include "pqsurf/scenario.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "pqsurf/modular.hpp"

namespace pqs {

using nlohmann::json;
using nlohmann::ordered_json;

PQSpec Scenario::spec() const {
    return {CoverSpec(n, monodromy1), CoverSpec(n, monodromy2), twist, subgroup_order};
}

std::optional<BuildingData> Scenario::building_data() const {
    if (!building_components) return std::nullopt;
    return solve_building_data(n, *building_components);
}

std::vector<std::string> builtin_scenario_names() {
    return {"example1", "example2", "example3", "Y"};
}

Scenario builtin_scenario(const std::string& name) {
    Scenario sc;
    sc.name = name;
    sc.n = 4;
    sc.monodromy1 = {1, 1, 1, 1};
    sc.monodromy2 = {1, 1, 1, 1};
    sc.subgroup_order = 4;
    if (name == "example1") {
        sc.twist = 3;
        sc.building_components = {{1, {4, 4}}};
        sc.ob = ObSupplement{0, 0, 0};
    } else if (name == "example2") {
        sc.twist = 1;
        sc.building_components = {{1, {4, 0}}, {3, {0, 4}}};
    } else if (name == "example3") {
        sc.twist = 1;
        sc.monodromy2 = {1, 1, 3, 3};
        sc.building_components = {{1, {2, 2}}, {3, {2, 2}}};
    } else if (name == "Y") {
        sc.twist = 3;
        sc.subgroup_order = 2;
        sc.ob = ObSupplement{8, 1, 1};
    } else {
        throw validation_error("unknown scenario: " + name);
    }
    return sc;
}

namespace {

long long require_int(const json& j, const std::string& key) {
    if (!j.contains(key)) throw validation_error("scenario misses field \"" + key + "\"");
    if (!j[key].is_number_integer())
        throw validation_error("scenario field \"" + key + "\" must be an integer");
    return j[key].get<long long>();
}

std::vector<long long> require_monodromy(const json& curve, int index) {
    std::string where = "curves[" + std::to_string(index) + "]";
    if (!curve.is_object() || !curve.contains("monodromy"))
        throw validation_error(where + " must be an object with a \"monodromy\" array");
    const json& m = curve["monodromy"];
    if (!m.is_array() || m.empty())
        throw validation_error(where + ".monodromy must be a nonempty integer array");
    std::vector<long long> out;
    for (const auto& v : m) {
        if (!v.is_number_integer())
            throw validation_error(where + ".monodromy entries must be integers");
        out.push_back(v.get<long long>());
    }
    return out;
}

} // namespace

Scenario parse_scenario(const json& j) {
    if (!j.is_object()) throw validation_error("scenario must be a JSON object");

    Scenario sc;
    if (!j.contains("name") || !j["name"].is_string())
        throw validation_error("scenario needs a string \"name\"");
    sc.name = j["name"].get<std::string>();
    sc.n = require_int(j, "n");

    if (!j.contains("curves") || !j["curves"].is_array() || j["curves"].size() != 2)
        throw validation_error("scenario needs a \"curves\" array with exactly two entries");
    sc.monodromy1 = require_monodromy(j["curves"][0], 0);
    sc.monodromy2 = require_monodromy(j["curves"][1], 1);

    sc.twist = require_int(j, "twist");
    sc.subgroup_order = require_int(j, "subgroup_order");

    if (j.contains("building_data")) {
        const json& b = j["building_data"];
        if (!b.is_object() || !b.contains("components") || !b["components"].is_object())
            throw validation_error("building_data needs a \"components\" object");
        std::map<long long, BiDegree> comps;
        for (const auto& [key, value] : b["components"].items()) {
            long long m = 0;
            try {
                std::size_t used = 0;
                m = std::stoll(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw validation_error("building_data component key \"" + key +
                                       "\" is not an integer");
            }
            if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
                !value[1].is_number_integer())
                throw validation_error("building_data component \"" + key +
                                       "\" must be a [a, b] integer pair");
            comps[m] = {value[0].get<long long>(), value[1].get<long long>()};
        }
        sc.building_components = std::move(comps);
    }

    if (j.contains("ob_model")) {
        const json& o = j["ob_model"];
        if (!o.is_object()) throw validation_error("ob_model must be an object");
        ObSupplement s;
        s.z = require_int(o, "z");
        s.k1 = require_int(o, "k1");
        s.k2 = require_int(o, "k2");
        if (s.z < 0 || s.k1 < 0 || s.k2 < 0)
            throw validation_error("ob_model entries must be non-negative");
        sc.ob = s;
    }

    sc.spec(); // validates covers, twist and subgroup order
    if (sc.building_components) sc.building_data();
    return sc;
}

Scenario load_scenario(const std::string& name_or_path) {
    for (const auto& name : builtin_scenario_names())
        if (name == name_or_path) return builtin_scenario(name);

    std::ifstream in(name_or_path);
    if (!in)
        throw validation_error("no builtin scenario or readable file named \"" +
                               name_or_path + "\"");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw validation_error("scenario file " + name_or_path + ": " + e.what());
    }
    return parse_scenario(j);
}

ordered_json scenario_to_json(const Scenario& sc) {
    ordered_json j;
    j["name"] = sc.name;
    j["n"] = sc.n;
    j["curves"] = ordered_json::array();
    j["curves"].push_back({{"monodromy", sc.monodromy1}});
    j["curves"].push_back({{"monodromy", sc.monodromy2}});
    j["twist"] = sc.twist;
    j["subgroup_order"] = sc.subgroup_order;
    if (sc.building_components) {
        ordered_json comps = ordered_json::object();
        for (const auto& [m, d] : *sc.building_components)
            comps[std::to_string(m)] = {d.a, d.b};
        j["building_data"] = ordered_json::object();
        j["building_data"]["components"] = std::move(comps);
    }
    if (sc.ob) j["ob_model"] = {{"z", sc.ob->z}, {"k1", sc.ob->k1}, {"k2", sc.ob->k2}};
    return j;
}

ObModel build_ob_model(const Scenario& sc) {
    if (!sc.ob)
        throw validation_error("scenario \"" + sc.name + "\" carries no ob_model data");
    PQSpec s = sc.spec();
    auto exc = exceptional_data(s);
    if (!exc.tau_total)
        throw domain_error("obstruction model needs A-type singularities only");
    ResolutionLedger led = resolution_ledger(s);

    ObModel m;
    m.d1 = s.cover1.branch_count();
    m.d2 = s.cover2.branch_count();
    m.k1 = sc.ob->k1;
    m.k2 = sc.ob->k2;
    m.z = sc.ob->z;
    m.tau_total = *exc.tau_total;
    m.h1X = led.h1X;
    m.h2X = h2_theta(s);
    return m;
}

DeformationMap natural_deformation_symbols(const Scenario& sc, const BuildingData& bd) {
    if (sc.name == "example2") return {{{1, 0}, "h1"}, {{3, 0}, "h3"}};
    if (sc.name == "example3")
        return {{{1, 0}, "g1"}, {{1, 1}, "c1"}, {{1, 2}, "c2"},
                {{3, 0}, "g3"}, {{3, 2}, "d2"}, {{3, 3}, "d3"}};

    DeformationMap map;
    for (const auto& [m, d] : bd.components) {
        long long excluded = mod_reduce(-m, bd.n);
        for (long long c = 0; c < bd.n; ++c) {
            if (c == excluded) continue;
            BiDegree cls = c == 0 ? d : d - bd.L.at(c);
            if (h0(cls) > 0)
                map[{m, c}] = "h" + std::to_string(m) + "_" + std::to_string(c);
        }
    }
    return map;
}

} // namespace pqs
