#ifndef PQSURF_PARDINI_HPP
#define PQSURF_PARDINI_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pqsurf/poly.hpp"

namespace pqs {

/// Divisor class on the smooth quadric, recorded by bidegree.
struct BiDegree {
    long long a = 0;
    long long b = 0;

    friend BiDegree operator+(BiDegree x, BiDegree y) { return {x.a + y.a, x.b + y.b}; }
    friend BiDegree operator-(BiDegree x, BiDegree y) { return {x.a - y.a, x.b - y.b}; }
    friend BiDegree operator*(long long s, BiDegree x) { return {s * x.a, s * x.b}; }
    auto operator<=>(const BiDegree&) const = default;

    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// h^0 of the line bundle of that bidegree: (a+1)(b+1), hard zero as soon
/// as either component is negative.
long long h0(BiDegree d);

/// Euler characteristic chi(O(a,b)) = (a+1)(b+1) on the quadric.
long long chi(BiDegree d);

/// Building data of a cyclic cover of the quadric: the branch components
/// D_m indexed by the nonzero characters that stabilize them, and the
/// solved eigensheaf classes L_a. Absent component means empty divisor.
struct BuildingData {
    long long n = 0;
    std::map<long long, BiDegree> components;
    std::map<long long, BiDegree> L;

    bool operator==(const BuildingData&) const = default;
};

/// Solves the cover conditions n L_a = sum_m (a m mod n) D_m for every
/// nonzero character a. Throws integrality_error when a class does not
/// divide out.
BuildingData solve_building_data(long long n, const std::map<long long, BiDegree>& components);

/// Carry of the character sum: eps = floor(((a m mod n) + (b m mod n)) / n),
/// always 0 or 1. m must be a unit mod n.
long long epsilon(long long n, long long m, long long a, long long b);

/// Checks L_a + L_b = L_{a+b} + sum_m eps(n,m,a,b) D_m for all nonzero
/// pairs, with L_0 = 0.
bool verify_cover_relations(const BuildingData& bd);

/// One admissible coefficient of a natural deformation: the section
/// multiplying w_chi in the deformed equation of branch component m.
struct NatDefTerm {
    long long m = 0;
    long long chi = 0;
    BiDegree bidegree;
    long long dim = 0;
};

struct NatDefReport {
    std::vector<NatDefTerm> terms;
    long long total = 0;
};

/// Natural deformations replace the section of each branch component by a
/// combination over every character except the inverse of the component's
/// own: total = sum over present m, chi != m^{-1} of h^0(D_m - L_chi).
NatDefReport natdef_dim(const BuildingData& bd);

/// Symbol table for deformed equations: (m, chi) -> coefficient name.
/// chi = 0 names the section of D_m itself (the undeformed cover keeps
/// only those entries).
using DeformationMap = std::map<std::pair<long long, long long>, std::string>;

/// One relation of the (deformed) cover algebra:
///   w_a w_b = (prod over present m of tau_m^eps(n,m,a,b)) * w_{a+b}
/// with tau_m the deformed section and w_0 = 1.
struct CoverRelation {
    long long a = 0;
    long long b = 0;
    Poly lhs;
    Poly rhs;
    Poly relation; ///< lhs - rhs
    std::string display;
};

/// All relations for unordered pairs of nonzero characters, ordered by
/// (a, b). The deformation map must only name admissible coefficients.
std::vector<CoverRelation> generate_relations(const BuildingData& bd,
                                              const DeformationMap& deformation);

/// Convenience: the undeformed cover, sections named g{m}.
DeformationMap pure_cover_symbols(const BuildingData& bd);

/// Character decomposition of the canonical sections of the cover:
/// entry a is h^0(K_quadric + L_a) = h^0((-2,-2) + L_a), entry 0 is 0.
std::vector<long long> canonical_eigenpieces(const BuildingData& bd);

/// Invariants of the bidouble cover of the quadric branched over three
/// divisors D_1, D_2, D_3 (L_i = (D_j + D_k)/2):
///   K^2 = 4 (K_Q + sum D_i / 2)^2, chi = chi(O) + sum chi(-L_i),
///   p_g = sum h^0(K_Q + L_i), q = p_g + 1 - chi.
struct BidoubleInvariants {
    long long K2 = 0;
    long long chi = 0;
    long long p_g = 0;
    long long q = 0;
};

BidoubleInvariants bidouble_invariants(BiDegree d1, BiDegree d2, BiDegree d3);

} // namespace pqs

#endif
