#include "pqsurf/curvecover.hpp"

#include <algorithm>
#include <string>

#include "pqsurf/modular.hpp"

namespace pqs {

CoverSpec::CoverSpec(long long n, std::vector<long long> monodromy)
    : n_(n), monodromy_(std::move(monodromy)) {
    if (n_ < 2) throw validation_error("cover order must be >= 2");
    if (monodromy_.empty()) throw validation_error("cover needs at least one branch point");
    long long sum = 0;
    for (auto& m : monodromy_) {
        m = mod_reduce(m, n_);
        if (!is_unit_mod(m, n_))
            throw validation_error("monodromy " + std::to_string(m) +
                                   " is not a unit mod " + std::to_string(n_));
        sum += m;
    }
    if (mod_reduce(sum, n_) != 0)
        throw validation_error("monodromies must sum to 0 mod the cover order");
}

long long genus(const CoverSpec& c) {
    long long two_g_minus_2 = -2 * c.order() + c.branch_count() * (c.order() - 1);
    long long t = two_g_minus_2 + 2;
    if (t % 2 != 0) throw inconsistency_error("Riemann-Hurwitz total came out odd");
    return t / 2;
}

std::vector<long long> rotation_numbers(const CoverSpec& c) {
    std::vector<long long> r;
    r.reserve(c.monodromy().size());
    for (long long m : c.monodromy()) r.push_back(mod_inverse(m, c.order()));
    return r;
}

namespace {

long long ceil_div(long long a, long long b) { // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

// Numerator count for twist depth s: degree budget at infinity plus one,
// minus the forced vanishing orders at the branch points.
long long cap(const CoverSpec& c, long long k, long long s) {
    long long n = c.order();
    long long total = 0;
    for (long long m : c.monodromy()) total += m;
    long long value = s * (total / n) - 2 * k + 1;
    for (long long m : c.monodromy()) {
        long long excess = s * m - k * (n - 1);
        if (excess > 0) value -= ceil_div(excess, n);
    }
    return value;
}

} // namespace

long long eigendim(const CoverSpec& c, long long k, long long a) {
    if (k < 0) throw domain_error("negative differential weight");
    long long n = c.order();
    a = mod_reduce(a, n);
    long long bound = k * (n - 1) + n;
    long long best = cap(c, k, a);
    long long s_top = a;
    for (long long s = a + n; s <= bound; s += n) {
        best = std::max(best, cap(c, k, s));
        s_top = s;
    }
    // Past the window every vanishing ceiling is active and the count is
    // stable; guard the cutoff.
    if (cap(c, k, s_top + n) > best)
        throw inconsistency_error("eigenspace count still growing past the search window");
    return std::max(0LL, best);
}

EigenDimTable eigendims(const CoverSpec& c, long long k) {
    EigenDimTable t;
    t.n = c.order();
    t.k = k;
    t.dims.reserve(t.n);
    for (long long a = 0; a < t.n; ++a) t.dims.push_back(eigendim(c, k, a));
    return t;
}

std::vector<long long> restrict_to_subgroup(const EigenDimTable& t, long long d) {
    if (d < 1 || t.n % d != 0)
        throw domain_error("subgroup order must divide the cover order");
    std::vector<long long> out(d, 0);
    for (long long a = 0; a < t.n; ++a) out[a % d] += t.dims[a];
    return out;
}

long long quotient_genus(const CoverSpec& c, long long d) {
    return restrict_to_subgroup(eigendims(c, 1), d)[0];
}

} // namespace pqs
