#ifndef PQSURF_VERIFY_HPP
#define PQSURF_VERIFY_HPP

#include <string>
#include <vector>

namespace pqs {

/// One pinned claim: a quantity the library must reproduce exactly.
struct CheckResult {
    std::string id;
    std::string block;
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// Runs the full list of pinned claims (exact comparisons, no
/// tolerances) in a fixed order. A non-empty filter keeps only checks
/// whose id or block contains it as a substring. Randomized property
/// checks use fixed seeds, so the report is reproducible byte for byte.
std::vector<CheckResult> run_paper_checks(const std::string& filter = "");

} // namespace pqs

#endif
