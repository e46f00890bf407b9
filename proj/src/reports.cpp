#include "pqsurf/reports.hpp"

namespace pqs::reports {

using nlohmann::ordered_json;

namespace {

ordered_json resolution_json(const SingularityType& t) {
    HJResolution r = hj_resolve(t);
    ordered_json j;
    j["n"] = t.n();
    j["q"] = t.q();
    j["string"] = r.b;
    j["h"] = r.h.str();
    j["e"] = r.e.str();
    j["B"] = r.B.str();
    j["dual_q"] = t.dual_q();
    j["rdp"] = t.is_rdp();
    return j;
}

} // namespace

ordered_json resolve_point(long long n, long long q) {
    return resolution_json(SingularityType(n, q));
}

ordered_json resolve_scenario(const Scenario& sc) {
    PQSpec s = sc.spec();
    ordered_json j;
    j["name"] = sc.name;
    j["singularities"] = ordered_json::array();
    for (const auto& [type, count] : singularities(s)) {
        ordered_json entry = resolution_json(type);
        entry["count"] = count;
        j["singularities"].push_back(std::move(entry));
    }
    ExceptionalData exc = exceptional_data(s);
    j["exceptional_components"] = exc.components;
    if (exc.tau_total) j["tau_total"] = *exc.tau_total;
    return j;
}

ordered_json invariants(const Scenario& sc) {
    SurfaceInvariants inv = pqs::invariants(sc.spec());
    ordered_json j;
    j["name"] = sc.name;
    j["K2"] = inv.K2;
    j["e"] = inv.e;
    j["q"] = inv.q;
    j["pg"] = inv.p_g;
    j["chi"] = inv.chi;
    j["rdp_only"] = inv.rdp_only;
    if (inv.h0_2K) {
        j["h0_2K"] = *inv.h0_2K;
        j["minimal_certified"] = inv.minimal_certified;
    }
    if (sc.subgroup_order == sc.n) {
        auto [a, b] = canonical_cover_class(sc.spec());
        j["canonical_class"] = {a.str(), b.str()};
    }
    return j;
}

ordered_json partial_smoothing(const Scenario& sc, long long smooth_count) {
    PQSpec s = sc.spec();
    SingularSet smoothed;
    if (smooth_count > 0) smoothed[SingularityType(4, 1)] = smooth_count;
    ordered_json j;
    j["name"] = sc.name;
    j["smoothed_points"] = smooth_count;
    j["K2"] = partial_smoothing_K2(s, smoothed);
    return j;
}

ordered_json tangent(const Scenario& sc) {
    PQSpec s = sc.spec();
    SurfaceInvariants inv = pqs::invariants(s);

    ordered_json j;
    j["name"] = sc.name;
    j["h2_theta"] = h2_theta(s);
    j["rr_gap"] = rr_gap(inv);
    j["esdef_dim"] = esdef_dim(s);
    if (inv.rdp_only) {
        ResolutionLedger led = resolution_ledger(s);
        j["h1S"] = led.h1S;
        j["h2S"] = led.h2S;
        j["h1X"] = led.h1X;
        if (sc.ob) {
            TangentLedger t = tangent_ledger(s, build_ob_model(sc));
            j["ob_rank"] = t.ob.ob_rank;
            j["ob_surjective"] = t.ob.surjective;
            j["ker_ob"] = t.ob.ker_ob;
            j["coker_ob"] = t.ob.coker_ob;
            j["ext1"] = t.ob.ext1;
            j["independent_of_families"] = independence_check(led.h1S, t.ob.ext1);
        }
    }
    return j;
}

ordered_json pardini(const Scenario& sc) {
    auto bd = sc.building_data();
    if (!bd)
        throw validation_error("scenario \"" + sc.name + "\" carries no building data");

    ordered_json j;
    j["name"] = sc.name;
    j["n"] = bd->n;
    j["components"] = ordered_json::object();
    for (const auto& [m, d] : bd->components) j["components"][std::to_string(m)] = {d.a, d.b};
    j["L"] = ordered_json::object();
    for (const auto& [a, d] : bd->L) j["L"][std::to_string(a)] = {d.a, d.b};

    j["epsilon"] = ordered_json::array();
    for (const auto& [m, _] : bd->components)
        for (long long a = 1; a < bd->n; ++a)
            for (long long b = a; b < bd->n; ++b)
                j["epsilon"].push_back({{"m", m}, {"a", a}, {"b", b},
                                        {"value", epsilon(bd->n, m, a, b)}});

    j["cover_relations_hold"] = verify_cover_relations(*bd);
    j["natdef_total"] = natdef_dim(*bd).total;
    j["canonical_eigenpieces"] = canonical_eigenpieces(*bd);

    // A pencil of isomorphic branch components allows degenerating to a
    // bidouble cover; report its invariants when the shape fits.
    if (bd->components.size() == 2 && bd->components.count(1) && bd->components.count(3) &&
        bd->components.at(1) == bd->components.at(3)) {
        BiDegree d = bd->components.at(1);
        BidoubleInvariants bi = bidouble_invariants(d, d, d);
        j["bidouble"] = {{"K2", bi.K2}, {"chi", bi.chi}, {"pg", bi.p_g}, {"q", bi.q}};
    }
    return j;
}

ordered_json natdef(const Scenario& sc) {
    auto bd = sc.building_data();
    if (!bd)
        throw validation_error("scenario \"" + sc.name + "\" carries no building data");
    NatDefReport rep = natdef_dim(*bd);
    ordered_json j;
    j["name"] = sc.name;
    j["terms"] = ordered_json::array();
    for (const auto& t : rep.terms)
        j["terms"].push_back({{"m", t.m}, {"chi", t.chi},
                              {"bidegree", {t.bidegree.a, t.bidegree.b}}, {"dim", t.dim}});
    j["total"] = rep.total;
    return j;
}

ordered_json relations(const Scenario& sc, bool natural) {
    auto bd = sc.building_data();
    if (!bd)
        throw validation_error("scenario \"" + sc.name + "\" carries no building data");
    DeformationMap symbols =
        natural ? natural_deformation_symbols(sc, *bd) : pure_cover_symbols(*bd);
    auto rels = generate_relations(*bd, symbols);

    ordered_json j;
    j["name"] = sc.name;
    j["deformed"] = natural;
    j["relations"] = ordered_json::array();
    for (const auto& r : rels)
        j["relations"].push_back({{"a", r.a}, {"b", r.b}, {"display", r.display},
                                  {"poly", r.relation.str()}});
    return j;
}

ordered_json smooth_check(const Scenario& sc, const Fraction& s) {
    auto bd = sc.building_data();
    if (!bd)
        throw validation_error("scenario \"" + sc.name + "\" carries no building data");
    SmoothingReport rep = smoothing_certificate(*bd, s);
    ordered_json j;
    j["name"] = sc.name;
    j["s"] = rep.s.str();
    j["relations"] = rep.relations;
    j["origin_on_variety"] = rep.origin_on_variety;
    j["rank_at_s"] = rep.rank_at_s;
    j["expected_rank"] = rep.expected_rank;
    j["rank_at_zero"] = rep.rank_at_zero;
    j["pass"] = rep.pass;
    return j;
}

ordered_json bidouble(BiDegree d1, BiDegree d2, BiDegree d3) {
    BidoubleInvariants bi = bidouble_invariants(d1, d2, d3);
    ordered_json j;
    j["D"] = {{d1.a, d1.b}, {d2.a, d2.b}, {d3.a, d3.b}};
    j["K2"] = bi.K2;
    j["chi"] = bi.chi;
    j["pg"] = bi.p_g;
    j["q"] = bi.q;
    return j;
}

} // namespace pqs::reports
