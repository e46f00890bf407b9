#ifndef PQSURF_SMOOTHING_HPP
#define PQSURF_SMOOTHING_HPP

#include <string>
#include <vector>

#include "pqsurf/pardini.hpp"

namespace pqs {

/// The symmetric determinantal form of the natural-deformation ideal of
/// the split-branch cover (branch components of bidegrees (4,0) and
/// (0,4)): the 2x2 minors of
///   [ h3 w1 w2 ]
///   [ w1 w2 w3 ]
///   [ w2 w3 h1 ]
/// span the same ideal as the six deformed cover relations.
PolyMatrix determinantal_matrix();

/// The same matrix with the middle entry moved to w2 + s; for s != 0 the
/// minors define a smooth point at the origin of the fibre direction.
PolyMatrix smoothing_matrix(const Fraction& s);

struct SmoothingReport {
    Fraction s;
    std::vector<std::string> relations; ///< minors of the deformed matrix, canonical order
    bool origin_on_variety = false;
    long long rank_at_s = -1;
    long long expected_rank = 3;
    long long rank_at_zero = -1;
    bool pass = false;
};

/// Certifies the one-parameter smoothing: the origin stays on the
/// deformed variety, the Jacobian there has full rank 3 for the given s,
/// and rank 0 at s = 0. The building data must be the split-branch model.
SmoothingReport smoothing_certificate(const BuildingData& bd, const Fraction& s);

} // namespace pqs

#endif
