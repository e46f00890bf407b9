#ifndef PQSURF_TANGENTCOH_HPP
#define PQSURF_TANGENTCOH_HPP

#include <utility>

#include "pqsurf/pqsurface.hpp"

namespace pqs {

/// Obstruction space of the quotient: the invariant part of
/// H^1(omega) (x) H^0(omega^2) of one factor times the other, both ways.
/// By Serre duality on the curves this is the paired sum mixing the
/// 1-form tables with the quadratic-differential tables.
long long h2_theta(const PQSpec& s);

/// Riemann-Roch gap 10 chi - 2 K^2 = h^1(Theta) - h^2(Theta) for the
/// smooth resolution (h^0(Theta) = 0 throughout: general type or an
/// isotrivial fibration with no vector fields).
long long rr_gap(const SurfaceInvariants& inv);

/// Cohomology bookkeeping across the RDP resolution S -> X:
/// h^2 is untouched, and h^1 drops by one for each exceptional
/// (-2)-curve.
struct ResolutionLedger {
    long long h1S = 0;
    long long h2S = 0;
    long long h1X = 0;
};

/// Requires every singular point to be an RDP.
ResolutionLedger resolution_ledger(const PQSpec& s);

/// Finite model of the local-to-global obstruction map: the local
/// smoothing parameters (tau_total of them) hit the quotient of h^2 by
/// the pullback classes. The rank of the map is (d1 - 1) + (d2 - 1) where
/// d_i are the branch-point counts; the dual kernel splits into the two
/// square-canonical spaces of the base curves (k1, k2) plus a remainder z
/// supplied with the scenario.
struct ObModel {
    long long d1 = 0;
    long long d2 = 0;
    long long k1 = 0;
    long long k2 = 0;
    long long z = 0;
    long long tau_total = 0;
    long long h1X = 0;
    long long h2X = 0;
};

struct ObResult {
    long long ob_rank = 0;
    long long ker_ob = 0;
    long long coker_ob = 0;
    long long ext1 = 0;
    bool surjective = false;
};

/// Checks the consistency identity h2X - ob_rank = k1 + k2 + z, then
/// reports ker, coker and Ext^1 = h1X + ker.
ObResult ob_rank_and_ext1(const ObModel& m);

/// Everything above in one record, with the cross identities enforced.
struct TangentLedger {
    long long h2_theta = 0;
    long long rr_gap = 0;
    ResolutionLedger resolution;
    ObResult ob;
    long long esdef_dim = 0;
};

TangentLedger tangent_ledger(const PQSpec& s, const ObModel& m);

/// Dimension of the equisingular deformations obtained by moving branch
/// points: on the full quotient each branch set moves on the line mod its
/// automorphisms (b - 3 each); on a partial quotient the intermediate
/// curves are fixed and all b points of each branch set move.
long long esdef_dim(const PQSpec& s);

/// Raw-count version of the same tally.
long long esdef_dim_from_counts(long long b1, long long b2, bool full_quotient);

/// h^0(O_S(k)) for a smooth complete intersection S of bidegree (d1, d2)
/// hypersurfaces in projective space of the given dimension, by the
/// Koszul resolution of the ideal sheaf.
long long ci_section_dim(long long ambient_dim, std::pair<long long, long long> degrees,
                         long long k);

/// Expected deformation dimension of such a complete intersection:
/// moving both defining forms modulo coordinate changes.
long long ci_def_dim(long long ambient_dim, std::pair<long long, long long> degrees);

/// Section count of the (d1, d2) polarization on an abelian surface.
long long polarization_h0(long long d1, long long d2);

/// Closed-form dimensions of the deformation families tied to the
/// half-quotient construction.
struct FamilyDims {
    long long polarization_h0 = 0;      ///< (4,4) polarization: 16
    long long def_Y_expected = 0;       ///< 3 moduli + 16 divisor moves - 1 scaling = 18
    long long todorov_invariant = 0;    ///< invariant-divisor family: 16/2 + 2 - 1 = 9
    long long todorov_total = 0;        ///< plus the 3 moduli of the two elliptic curves and the gluing
};

FamilyDims family_dims();

/// True when the ambient family is strictly larger than the family of
/// deformations staying in the construction.
bool independence_check(long long h1S, long long def_dim);

} // namespace pqs

#endif
