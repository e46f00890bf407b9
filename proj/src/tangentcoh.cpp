#include "pqsurf/tangentcoh.hpp"

#include <algorithm>
#include <string>

namespace pqs {

long long h2_theta(const PQSpec& s) {
    auto w1 = eigendims(s.cover1, 1);
    auto w2 = eigendims(s.cover2, 1);
    auto q1 = eigendims(s.cover1, 2);
    auto q2 = eigendims(s.cover2, 2);
    return paired_sum(w1, q2, s.subgroup_order, s.twist) +
           paired_sum(q1, w2, s.subgroup_order, s.twist);
}

long long rr_gap(const SurfaceInvariants& inv) { return 10 * inv.chi - 2 * inv.K2; }

ResolutionLedger resolution_ledger(const PQSpec& s) {
    SurfaceInvariants inv = invariants(s);
    if (!inv.rdp_only)
        throw domain_error("resolution ledger is only valid when all singularities are RDPs");
    ResolutionLedger led;
    led.h2S = h2_theta(s);
    led.h1S = rr_gap(inv) + led.h2S;
    led.h1X = led.h1S - exceptional_data(s).components;
    return led;
}

ObResult ob_rank_and_ext1(const ObModel& m) {
    if (m.d1 < 1 || m.d2 < 1) throw domain_error("branch counts must be positive");
    if (m.z < 0 || m.k1 < 0 || m.k2 < 0) throw domain_error("kernel pieces cannot be negative");
    if (m.z > m.h2X) throw domain_error("kernel remainder exceeds the obstruction space");

    ObResult r;
    r.ob_rank = (m.d1 - 1) + (m.d2 - 1);
    if (m.h2X - r.ob_rank != m.k1 + m.k2 + m.z)
        throw inconsistency_error("obstruction cokernel mismatch: h2 - rank = " +
                                  std::to_string(m.h2X - r.ob_rank) + " but k1+k2+z = " +
                                  std::to_string(m.k1 + m.k2 + m.z));
    r.ker_ob = m.tau_total - r.ob_rank;
    r.coker_ob = m.h2X - r.ob_rank;
    r.ext1 = m.h1X + r.ker_ob;
    r.surjective = (r.ob_rank == m.h2X);
    if (r.ker_ob < 0) throw inconsistency_error("obstruction map rank exceeds its source");
    return r;
}

TangentLedger tangent_ledger(const PQSpec& s, const ObModel& m) {
    TangentLedger t;
    t.h2_theta = h2_theta(s);
    t.rr_gap = rr_gap(invariants(s));
    t.resolution = resolution_ledger(s);
    if (t.resolution.h2S != t.h2_theta)
        throw inconsistency_error("RDP resolution must preserve h^2");
    if (m.h1X != t.resolution.h1X || m.h2X != t.h2_theta)
        throw inconsistency_error("obstruction model disagrees with the resolution ledger");
    t.ob = ob_rank_and_ext1(m);
    if (t.ob.ob_rank > std::min(m.tau_total, m.h2X))
        throw inconsistency_error("obstruction rank exceeds source or target");
    t.esdef_dim = esdef_dim(s);
    return t;
}

long long esdef_dim(const PQSpec& s) {
    return esdef_dim_from_counts(s.cover1.branch_count(), s.cover2.branch_count(),
                                 s.subgroup_order == s.order());
}

long long esdef_dim_from_counts(long long b1, long long b2, bool full_quotient) {
    if (b1 < 0 || b2 < 0) throw domain_error("branch counts cannot be negative");
    return full_quotient ? (b1 - 3) + (b2 - 3) : b1 + b2;
}

namespace {

long long choose(long long t, long long r) {
    if (t < r) return 0;
    long long value = 1;
    for (long long i = 1; i <= r; ++i) value = value * (t - r + i) / i;
    return value;
}

} // namespace

long long ci_section_dim(long long ambient_dim, std::pair<long long, long long> degrees,
                         long long k) {
    if (ambient_dim < 2) throw domain_error("ambient projective space too small");
    auto [d1, d2] = degrees;
    if (d1 < 1 || d2 < 1) throw domain_error("hypersurface degrees must be positive");
    long long m = ambient_dim;
    return choose(k + m, m) - choose(k - d1 + m, m) - choose(k - d2 + m, m) +
           choose(k - d1 - d2 + m, m);
}

long long ci_def_dim(long long ambient_dim, std::pair<long long, long long> degrees) {
    long long pgl = (ambient_dim + 1) * (ambient_dim + 1) - 1;
    return ci_section_dim(ambient_dim, degrees, degrees.first) +
           ci_section_dim(ambient_dim, degrees, degrees.second) - pgl;
}

long long polarization_h0(long long d1, long long d2) {
    if (d1 < 1 || d2 < 1) throw domain_error("polarization type must be positive");
    return d1 * d2;
}

FamilyDims family_dims() {
    FamilyDims f;
    f.polarization_h0 = polarization_h0(4, 4);
    f.def_Y_expected = 3 + f.polarization_h0 - 1;
    f.todorov_invariant = f.polarization_h0 / 2 + 2 - 1;
    f.todorov_total = 3 + f.todorov_invariant;
    return f;
}

bool independence_check(long long h1S, long long def_dim) { return h1S > def_dim; }

} // namespace pqs
