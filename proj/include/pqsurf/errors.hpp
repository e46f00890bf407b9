#ifndef PQSURF_ERRORS_HPP
#define PQSURF_ERRORS_HPP

#include <stdexcept>

namespace pqs {

/// Base class for every error this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mathematically invalid input (non-unit residue, zero denominator, ...).
struct domain_error : error {
    using error::error;
};

/// A quantity that must be an integer came out fractional.
struct integrality_error : error {
    using error::error;
};

/// An internal identity failed. Always a bug, never bad input.
struct inconsistency_error : error {
    using error::error;
};

/// A point handed to a rank computation does not lie on the variety.
struct off_variety_error : error {
    using error::error;
};

/// Malformed scenario files, unknown names, bad CLI values.
struct validation_error : error {
    using error::error;
};

} // namespace pqs

#endif
