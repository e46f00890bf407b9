#ifndef PQSURF_PQSURFACE_HPP
#define PQSURF_PQSURFACE_HPP

#include <map>
#include <optional>
#include <utility>

#include "pqsurf/curvecover.hpp"
#include "pqsurf/fraction.hpp"
#include "pqsurf/hj.hpp"

namespace pqs {

/// A product-quotient surface: the product of two cyclic covers of the
/// line with the same deck group, divided by the subgroup of order d
/// acting diagonally with a twist on the second factor,
///   g . (z1, z2) = (g z1, g^twist z2).
/// Invariants reported below are those of the minimal resolution of the
/// quotient.
struct PQSpec {
    CoverSpec cover1;
    CoverSpec cover2;
    long long twist;          ///< unit mod the common cover order
    long long subgroup_order; ///< d with d | n; d = 1 means the plain product

    PQSpec(CoverSpec c1, CoverSpec c2, long long twist, long long subgroup_order);

    long long order() const { return cover1.order(); }

    bool operator==(const PQSpec&) const = default;
};

/// Multiset of quotient singularities, type -> number of points.
using SingularSet = std::map<SingularityType, long long>;

/// The fixed points of the acting subgroup sit over pairs of branch
/// points; each contributes the cyclic germ with weights given by the two
/// rotation numbers reduced mod d.
SingularSet singularities(const PQSpec& s);

struct SurfaceInvariants {
    long long K2 = 0;
    long long e = 0;
    long long q = 0;
    long long p_g = 0;
    long long chi = 0;
    std::optional<long long> h0_2K; ///< only computed when all singularities are RDPs
    bool rdp_only = false;
    bool minimal_certified = false; ///< h0_2K == K2 + chi, the bicanonical count of a minimal model
};

/// Sum of t1[a] * t2[b] over character pairs invariant under the twisted
/// subgroup action: a + twist*b = 0 mod d.
long long paired_sum(const EigenDimTable& t1, const EigenDimTable& t2,
                     long long d, long long twist);

/// K^2, e, q, p_g, chi of the minimal resolution. Enforces the Noether
/// identity 12 chi = K^2 + e and throws inconsistency_error if it fails.
SurfaceInvariants invariants(const PQSpec& s);

/// Bidegree of the canonical class of the full quotient (d = n only) as a
/// divisor class on the quotient quadric: K + (1 - 1/n)(b1, b2) where K is
/// the canonical class (-2, -2) of the quadric.
std::pair<Fraction, Fraction> canonical_cover_class(const PQSpec& s);

struct ExceptionalData {
    long long components = 0;             ///< total curves in all resolution chains
    std::optional<long long> tau_total;   ///< sum of A_k smoothing dimensions; present only if every point is A-type
};

ExceptionalData exceptional_data(const PQSpec& s);

/// K^2 after smoothing the chosen sub-multiset of singular points locally
/// (a Q-Gorenstein one-parameter smoothing of each) and resolving the
/// rest. Only points of type 1/4 (1,1) may be smoothed.
long long partial_smoothing_K2(const PQSpec& s, const SingularSet& smoothed);

} // namespace pqs

#endif
