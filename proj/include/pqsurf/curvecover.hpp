#ifndef PQSURF_CURVECOVER_HPP
#define PQSURF_CURVECOVER_HPP

#include <vector>

#include "pqsurf/errors.hpp"

namespace pqs {

/// A smooth curve given as a simple cyclic cover of the projective line,
/// totally branched over b distinct finite points with local monodromies
/// m_1, ..., m_b. Every m_j must be a unit mod n and the sum must vanish
/// mod n (so the point at infinity is unbranched).
class CoverSpec {
public:
    CoverSpec(long long n, std::vector<long long> monodromy);

    long long order() const { return n_; }
    long long branch_count() const { return static_cast<long long>(monodromy_.size()); }
    const std::vector<long long>& monodromy() const { return monodromy_; }

    bool operator==(const CoverSpec&) const = default;

private:
    long long n_;
    std::vector<long long> monodromy_; // stored reduced mod n
};

/// Genus via Riemann-Hurwitz: 2g - 2 = -2n + b(n - 1).
long long genus(const CoverSpec& c);

/// Rotation number of the deck generator at the point above branch point j,
/// i.e. the weight of the local coordinate: r_j = m_j^{-1} mod n.
std::vector<long long> rotation_numbers(const CoverSpec& c);

/// Character decomposition of the global k-differentials. Entry a is the
/// dimension of the subspace where the deck generator acts through the
/// a-th power character, for a = 0, ..., n-1.
struct EigenDimTable {
    long long n = 0;
    long long k = 0;
    std::vector<long long> dims;
};

/// Dimension of the character-a eigenspace of H^0 of k-differentials.
/// A form in that eigenspace is h(x) (dx)^k / y^s with s = a mod n; for
/// each admissible s the numerators form a space of polynomials with
/// bounded degree and forced vanishing at the branch points, and the
/// spaces grow into each other as s increases by n (multiply by the
/// defining polynomial). The dimension is the stable maximum
///   cap(s) = s d/n - 2k + 1 - sum_j max(0, ceil((s m_j - k(n-1))/n))
/// over s = a, a+n, ... <= k(n-1)+n, past which cap is constant.
long long eigendim(const CoverSpec& c, long long k, long long a);

/// Full table of eigendim values for one k.
EigenDimTable eigendims(const CoverSpec& c, long long k);

/// Collapses a table to the subgroup of order d (d | n): entry c sums the
/// dims over all characters congruent to c mod d.
std::vector<long long> restrict_to_subgroup(const EigenDimTable& t, long long d);

/// Genus of the quotient of the curve by the subgroup of order d: the
/// invariant part of the 1-forms under that subgroup.
long long quotient_genus(const CoverSpec& c, long long d);

} // namespace pqs

#endif
