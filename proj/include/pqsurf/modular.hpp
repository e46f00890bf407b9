#ifndef PQSURF_MODULAR_HPP
#define PQSURF_MODULAR_HPP

#include <numeric>
#include <string>

#include "pqsurf/errors.hpp"

namespace pqs {

/// Canonical representative of a mod n in [0, n). Requires n >= 1.
inline long long mod_reduce(long long a, long long n) {
    if (n < 1) throw domain_error("modulus must be positive");
    long long r = a % n;
    return r < 0 ? r + n : r;
}

inline bool is_unit_mod(long long a, long long n) {
    return std::gcd(mod_reduce(a, n), n) == 1;
}

/// Inverse of a mod n via extended Euclid. Throws domain_error for non-units.
inline long long mod_inverse(long long a, long long n) {
    a = mod_reduce(a, n);
    long long r0 = n, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1)
        throw domain_error(std::to_string(a) + " is not a unit mod " + std::to_string(n));
    return mod_reduce(t0, n);
}

} // namespace pqs

#endif
