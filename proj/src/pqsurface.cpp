#include "pqsurf/pqsurface.hpp"

#include <string>

#include "pqsurf/modular.hpp"

namespace pqs {

PQSpec::PQSpec(CoverSpec c1, CoverSpec c2, long long twist_, long long subgroup_order_)
    : cover1(std::move(c1)), cover2(std::move(c2)), twist(twist_),
      subgroup_order(subgroup_order_) {
    if (cover1.order() != cover2.order())
        throw validation_error("both covers must share the same deck group order");
    if (!is_unit_mod(twist, cover1.order()))
        throw validation_error("twist must be a unit mod the cover order");
    twist = mod_reduce(twist, cover1.order());
    if (subgroup_order < 1 || cover1.order() % subgroup_order != 0)
        throw validation_error("subgroup order must divide the cover order");
}

SingularSet singularities(const PQSpec& s) {
    SingularSet set;
    long long d = s.subgroup_order;
    if (d == 1) return set; // free action of the trivial group: smooth product
    auto r1 = rotation_numbers(s.cover1);
    auto r2 = rotation_numbers(s.cover2);
    for (long long a : r1)
        for (long long b : r2) {
            SingularityType t = normalize_sing(d, mod_reduce(a, d),
                                               mod_reduce(s.twist * b, d));
            set[t] += 1;
        }
    return set;
}

long long paired_sum(const EigenDimTable& t1, const EigenDimTable& t2,
                     long long d, long long twist) {
    if (t1.n != t2.n) throw domain_error("tables index characters of different groups");
    if (d < 1 || t1.n % d != 0) throw domain_error("subgroup order must divide the group order");
    long long total = 0;
    for (long long a = 0; a < t1.n; ++a)
        for (long long b = 0; b < t2.n; ++b)
            if (mod_reduce(a + twist * b, d) == 0) total += t1.dims[a] * t2.dims[b];
    return total;
}

SurfaceInvariants invariants(const PQSpec& s) {
    long long g1 = genus(s.cover1), g2 = genus(s.cover2);
    long long d = s.subgroup_order;

    Fraction K2(8 * (g1 - 1) * (g2 - 1), d);
    Fraction e(4 * (g1 - 1) * (g2 - 1), d);
    bool rdp_only = true;
    for (const auto& [type, count] : singularities(s)) {
        HJResolution r = hj_resolve(type);
        K2 += Fraction(count) * r.h;
        e += Fraction(count) * r.e;
        if (!type.is_rdp()) rdp_only = false;
    }

    SurfaceInvariants inv;
    inv.K2 = K2.as_integer();
    inv.e = e.as_integer();
    inv.q = quotient_genus(s.cover1, d) + quotient_genus(s.cover2, d);
    inv.p_g = paired_sum(eigendims(s.cover1, 1), eigendims(s.cover2, 1), d, s.twist);
    inv.chi = 1 - inv.q + inv.p_g;
    inv.rdp_only = rdp_only;
    if (rdp_only) {
        inv.h0_2K = paired_sum(eigendims(s.cover1, 2), eigendims(s.cover2, 2), d, s.twist);
        inv.minimal_certified = (*inv.h0_2K == inv.K2 + inv.chi);
    }

    if (12 * inv.chi != inv.K2 + inv.e)
        throw inconsistency_error("Noether identity failed: 12*" + std::to_string(inv.chi) +
                                  " != " + std::to_string(inv.K2) + " + " +
                                  std::to_string(inv.e));
    return inv;
}

std::pair<Fraction, Fraction> canonical_cover_class(const PQSpec& s) {
    if (s.subgroup_order != s.order())
        throw domain_error("canonical class on the quadric needs the full quotient");
    Fraction scale = Fraction(1) - Fraction(1, s.order());
    return {Fraction(-2) + scale * Fraction(s.cover1.branch_count()),
            Fraction(-2) + scale * Fraction(s.cover2.branch_count())};
}

ExceptionalData exceptional_data(const PQSpec& s) {
    ExceptionalData out;
    long long tau = 0;
    bool all_a_type = true;
    for (const auto& [type, count] : singularities(s)) {
        HJResolution r = hj_resolve(type);
        out.components += count * static_cast<long long>(r.b.size());
        if (auto k = type.a_series_index())
            tau += count * *k;
        else
            all_a_type = false;
    }
    if (all_a_type) out.tau_total = tau;
    return out;
}

long long partial_smoothing_K2(const PQSpec& s, const SingularSet& smoothed) {
    SingularSet kept = singularities(s);
    for (const auto& [type, count] : smoothed) {
        if (!(type.n() == 4 && type.q() == 1))
            throw domain_error("only 1/4 (1,1) points admit this smoothing");
        auto it = kept.find(type);
        if (it == kept.end() || it->second < count)
            throw domain_error("asked to smooth more 1/4 (1,1) points than the surface has");
        it->second -= count;
        if (it->second == 0) kept.erase(it);
    }

    long long g1 = genus(s.cover1), g2 = genus(s.cover2);
    Fraction K2(8 * (g1 - 1) * (g2 - 1), s.subgroup_order);
    for (const auto& [type, count] : kept) K2 += Fraction(count) * hj_resolve(type).h;
    return K2.as_integer();
}

} // namespace pqs
