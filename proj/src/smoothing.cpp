#include "pqsurf/smoothing.hpp"

namespace pqs {

namespace {

Poly v(const char* name) { return Poly::variable(name); }

} // namespace

PolyMatrix determinantal_matrix() {
    return {{v("h3"), v("w1"), v("w2")},
            {v("w1"), v("w2"), v("w3")},
            {v("w2"), v("w3"), v("h1")}};
}

PolyMatrix smoothing_matrix(const Fraction& s) {
    PolyMatrix m = determinantal_matrix();
    m[1][1] += Poly::constant(s);
    return m;
}

SmoothingReport smoothing_certificate(const BuildingData& bd, const Fraction& s) {
    bool split_model = bd.n == 4 && bd.components.size() == 2 &&
                       bd.components.count(1) && bd.components.count(3) &&
                       bd.components.at(1) == BiDegree{4, 0} &&
                       bd.components.at(3) == BiDegree{0, 4};
    if (!split_model)
        throw domain_error("smoothing certificate needs the split-branch building data "
                           "(components (4,0) and (0,4))");

    SmoothingReport report;
    report.s = s;

    auto minors = minors2(smoothing_matrix(s));
    for (const auto& p : minors) report.relations.push_back(p.str());

    std::map<std::string, Fraction> origin;
    for (const auto& p : minors)
        for (const auto& var : p.variables()) origin[var] = 0;

    report.origin_on_variety = true;
    for (const auto& p : minors)
        if (p.evaluate(origin) != Fraction(0)) {
            report.origin_on_variety = false;
            break;
        }

    if (report.origin_on_variety) report.rank_at_s = jacobian_rank_at(minors, origin);

    auto flat = minors2(smoothing_matrix(Fraction(0)));
    std::map<std::string, Fraction> flat_origin;
    for (const auto& p : flat)
        for (const auto& var : p.variables()) flat_origin[var] = 0;
    report.rank_at_zero = jacobian_rank_at(flat, flat_origin);

    report.pass = report.origin_on_variety && report.rank_at_s == report.expected_rank &&
                  report.rank_at_zero == 0;
    return report;
}

} // namespace pqs
