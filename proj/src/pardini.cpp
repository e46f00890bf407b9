#include "pqsurf/pardini.hpp"

#include "pqsurf/modular.hpp"

namespace pqs {

long long h0(BiDegree d) {
    if (d.a < 0 || d.b < 0) return 0;
    return (d.a + 1) * (d.b + 1);
}

long long chi(BiDegree d) { return (d.a + 1) * (d.b + 1); }

BuildingData solve_building_data(long long n, const std::map<long long, BiDegree>& components) {
    if (n < 2) throw domain_error("cover order must be >= 2");
    BuildingData bd;
    bd.n = n;
    for (const auto& [m, d] : components) {
        if (mod_reduce(m, n) == 0 || !is_unit_mod(m, n))
            throw domain_error("branch component index " + std::to_string(m) +
                               " must be a nonzero unit mod " + std::to_string(n));
        if (d.a < 0 || d.b < 0)
            throw domain_error("branch component " + std::to_string(m) +
                               " has a negative bidegree");
        bd.components[mod_reduce(m, n)] = d;
    }
    for (long long a = 1; a < n; ++a) {
        BiDegree total{0, 0};
        for (const auto& [m, d] : bd.components) total = total + mod_reduce(a * m, n) * d;
        if (total.a % n != 0 || total.b % n != 0)
            throw integrality_error("eigensheaf class for character " + std::to_string(a) +
                                    " is not integral: " + total.str() + " not divisible by " +
                                    std::to_string(n));
        bd.L[a] = {total.a / n, total.b / n};
    }
    return bd;
}

long long epsilon(long long n, long long m, long long a, long long b) {
    if (!is_unit_mod(m, n)) throw domain_error("epsilon index must be a unit");
    return (mod_reduce(a * m, n) + mod_reduce(b * m, n)) / n;
}

bool verify_cover_relations(const BuildingData& bd) {
    auto L_of = [&](long long a) -> BiDegree {
        a = mod_reduce(a, bd.n);
        if (a == 0) return {0, 0};
        return bd.L.at(a);
    };
    for (long long a = 1; a < bd.n; ++a)
        for (long long b = 1; b < bd.n; ++b) {
            BiDegree lhs = L_of(a) + L_of(b);
            BiDegree rhs = L_of(a + b);
            for (const auto& [m, d] : bd.components) rhs = rhs + epsilon(bd.n, m, a, b) * d;
            if (lhs != rhs) return false;
        }
    return true;
}

NatDefReport natdef_dim(const BuildingData& bd) {
    NatDefReport report;
    for (const auto& [m, d] : bd.components) {
        long long excluded = mod_reduce(-m, bd.n); // the inverse character of chi_m
        for (long long c = 0; c < bd.n; ++c) {
            if (c == excluded) continue;
            BiDegree cls = c == 0 ? d : d - bd.L.at(c);
            report.terms.push_back({m, c, cls, h0(cls)});
            report.total += h0(cls);
        }
    }
    return report;
}

namespace {

Poly w_poly(long long index) {
    if (index == 0) return Poly::constant(1);
    return Poly::variable("w" + std::to_string(index));
}

} // namespace

DeformationMap pure_cover_symbols(const BuildingData& bd) {
    DeformationMap map;
    for (const auto& [m, _] : bd.components) map[{m, 0}] = "g" + std::to_string(m);
    return map;
}

std::vector<CoverRelation> generate_relations(const BuildingData& bd,
                                              const DeformationMap& deformation) {
    // Admissibility: coefficients only on present components, never on the
    // inverse character of the component itself.
    for (const auto& [key, name] : deformation) {
        auto [m, c] = key;
        if (!bd.components.count(m))
            throw domain_error("deformation names absent branch component " + std::to_string(m));
        if (c < 0 || c >= bd.n || c == mod_reduce(-m, bd.n))
            throw domain_error("deformation coefficient (" + std::to_string(m) + "," +
                               std::to_string(c) + ") is not admissible");
        if (name.empty()) throw domain_error("deformation symbol needs a name");
    }

    std::map<long long, Poly> tau;
    std::map<long long, std::string> tau_display;
    for (const auto& [m, _] : bd.components) {
        Poly t;
        std::string disp;
        long long named = 0;
        for (long long c = 0; c < bd.n; ++c) {
            auto it = deformation.find({m, c});
            if (it == deformation.end()) continue;
            t += Poly::variable(it->second) * w_poly(c);
            if (!disp.empty()) disp += " + ";
            disp += it->second;
            if (c != 0) disp += "*w" + std::to_string(c);
            ++named;
        }
        if (named == 0)
            throw domain_error("branch component " + std::to_string(m) +
                               " has no section symbol");
        tau[m] = t;
        tau_display[m] = named > 1 ? "(" + disp + ")" : disp;
    }

    std::vector<CoverRelation> out;
    for (long long a = 1; a < bd.n; ++a)
        for (long long b = a; b < bd.n; ++b) {
            CoverRelation rel;
            rel.a = a;
            rel.b = b;
            rel.lhs = w_poly(a) * w_poly(b);
            rel.rhs = w_poly(mod_reduce(a + b, bd.n));
            std::string rhs_disp;
            for (const auto& [m, t] : tau) {
                long long e = epsilon(bd.n, m, a, b);
                if (e == 0) continue;
                rel.rhs *= t.pow(e);
                for (long long i = 0; i < e; ++i) {
                    if (!rhs_disp.empty()) rhs_disp += "*";
                    rhs_disp += tau_display[m];
                }
            }
            long long target = mod_reduce(a + b, bd.n);
            if (target != 0) {
                if (!rhs_disp.empty()) rhs_disp += "*";
                rhs_disp += "w" + std::to_string(target);
            } else if (rhs_disp.empty()) {
                rhs_disp = "1";
            }
            rel.relation = rel.lhs - rel.rhs;
            rel.display = rel.lhs.str() + " = " + rhs_disp;
            out.push_back(std::move(rel));
        }
    return out;
}

std::vector<long long> canonical_eigenpieces(const BuildingData& bd) {
    std::vector<long long> out(bd.n, 0);
    for (long long a = 1; a < bd.n; ++a) out[a] = h0(BiDegree{-2, -2} + bd.L.at(a));
    return out;
}

BidoubleInvariants bidouble_invariants(BiDegree d1, BiDegree d2, BiDegree d3) {
    BiDegree ds[3] = {d1, d2, d3};
    BiDegree L[3];
    for (int i = 0; i < 3; ++i) {
        BiDegree sum = ds[(i + 1) % 3] + ds[(i + 2) % 3];
        if (sum.a % 2 != 0 || sum.b % 2 != 0)
            throw integrality_error("bidouble eigensheaf " + std::to_string(i + 1) +
                                    " is not 2-divisible: " + sum.str());
        L[i] = {sum.a / 2, sum.b / 2};
    }
    BiDegree total = ds[0] + ds[1] + ds[2];
    if (total.a % 2 != 0 || total.b % 2 != 0)
        throw integrality_error("total branch class is not 2-divisible");
    BiDegree half{total.a / 2, total.b / 2};
    BiDegree kplus = BiDegree{-2, -2} + half;

    BidoubleInvariants inv;
    inv.K2 = 4 * (2 * kplus.a * kplus.b); // self-intersection (a,b)^2 = 2ab
    inv.chi = chi(BiDegree{0, 0});
    for (const auto& l : L) inv.chi += chi(BiDegree{-l.a, -l.b});
    for (const auto& l : L) inv.p_g += h0(BiDegree{-2, -2} + l);
    inv.q = inv.p_g + 1 - inv.chi;
    return inv;
}

} // namespace pqs
