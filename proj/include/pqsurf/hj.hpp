#ifndef PQSURF_HJ_HPP
#define PQSURF_HJ_HPP

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "pqsurf/fraction.hpp"

namespace pqs {

/// A cyclic quotient singularity 1/n (1, q): the germ C^2 / mu_n where the
/// group acts by (x, y) -> (zeta x, zeta^q y). Requires n >= 2, 0 < q < n
/// and gcd(n, q) = 1.
class SingularityType {
public:
    SingularityType(long long n, long long q);

    long long n() const { return n_; }
    long long q() const { return q_; }

    /// The inverse weight q' with q q' = 1 mod n. The germs 1/n(1,q) and
    /// 1/n(1,q') are isomorphic (swap the two coordinates).
    long long dual_q() const;

    bool isomorphic_to(const SingularityType& other) const;

    /// Rational double point (type A_{n-1}), equivalently q = n - 1.
    bool is_rdp() const { return q_ == n_ - 1; }

    /// For an A_k point returns k; empty otherwise. The space of
    /// first-order smoothings of an A_k germ has dimension k.
    std::optional<long long> a_series_index() const;

    auto operator<=>(const SingularityType&) const = default;

private:
    long long n_;
    long long q_;
};

/// Hirzebruch-Jung data of the minimal resolution of 1/n (1, q):
/// the chain of self-intersections -b_i together with the three
/// correction terms used by the global invariant formulas.
struct HJResolution {
    std::vector<long long> b; ///< continued fraction n/q = [b_1, ..., b_k]
    Fraction h;               ///< canonical correction, 0 exactly for RDPs
    Fraction e;               ///< Euler number contribution, k + 1 - 1/n
    Fraction B;               ///< 2e - h
};

/// Hirzebruch-Jung continued fraction of n/q:
/// n/q = b_1 - 1/(b_2 - 1/(... - 1/b_k)) with every b_i >= 2.
std::vector<long long> hj_expand(long long n, long long q);

/// Evaluates [b_1, ..., b_k] back to a reduced pair (n, q). This is the
/// exact inverse of hj_expand and doubles as its test oracle.
std::pair<long long, long long> hj_evaluate(const std::vector<long long>& b);

/// Full resolution data for one singularity. The three numbers are
///   h = 2 - (2 + q + q')/n - sum(b_i - 2)
///   e = k + 1 - 1/n
///   B = 2e - h
HJResolution hj_resolve(const SingularityType& t);

/// Classifies the cyclic quotient germ fixed by an action with rotation
/// weights (a, b) on the two coordinates, both units mod n: the result is
/// 1/n (1, b a^{-1}). The raw weight is kept; use dual_q() for the
/// isomorphic partner.
SingularityType normalize_sing(long long n, long long a, long long b);

} // namespace pqs

#endif
