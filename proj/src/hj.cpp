#include "pqsurf/hj.hpp"

#include <numeric>
#include <string>

#include "pqsurf/modular.hpp"

namespace pqs {

SingularityType::SingularityType(long long n, long long q) : n_(n), q_(q) {
    if (n_ < 2) throw domain_error("singularity order must be >= 2");
    if (q_ <= 0 || q_ >= n_)
        throw domain_error("singularity weight must lie strictly between 0 and the order");
    if (std::gcd(n_, q_) != 1)
        throw domain_error("singularity weight must be coprime to the order");
}

long long SingularityType::dual_q() const { return mod_inverse(q_, n_); }

bool SingularityType::isomorphic_to(const SingularityType& other) const {
    return n_ == other.n_ && (q_ == other.q_ || q_ == other.dual_q());
}

std::optional<long long> SingularityType::a_series_index() const {
    if (!is_rdp()) return std::nullopt;
    return n_ - 1;
}

std::vector<long long> hj_expand(long long n, long long q) {
    SingularityType check(n, q); // validates the pair
    std::vector<long long> b;
    while (q > 0) {
        long long bi = (n + q - 1) / q; // ceil(n/q)
        b.push_back(bi);
        long long next = bi * q - n;
        n = q;
        q = next;
    }
    return b;
}

std::pair<long long, long long> hj_evaluate(const std::vector<long long>& b) {
    if (b.empty()) throw domain_error("empty continued fraction");
    Fraction value = 0;
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
        if (*it < 2) throw domain_error("continued fraction entries must be >= 2");
        Fraction base = *it;
        value = (value == Fraction(0)) ? base : base - Fraction(1) / value;
    }
    return {value.num(), value.den()};
}

HJResolution hj_resolve(const SingularityType& t) {
    HJResolution r;
    r.b = hj_expand(t.n(), t.q());
    long long chain_excess = 0;
    for (long long bi : r.b) chain_excess += bi - 2;
    r.h = Fraction(2) - Fraction(2 + t.q() + t.dual_q(), t.n()) - Fraction(chain_excess);
    r.e = Fraction(static_cast<long long>(r.b.size()) + 1) - Fraction(1, t.n());
    r.B = Fraction(2) * r.e - r.h;

    auto [n_back, q_back] = hj_evaluate(r.b);
    if (n_back != t.n() || q_back != t.q())
        throw inconsistency_error("continued fraction failed to evaluate back to " +
                                  std::to_string(t.n()) + "/" + std::to_string(t.q()));
    return r;
}

SingularityType normalize_sing(long long n, long long a, long long b) {
    if (!is_unit_mod(a, n) || !is_unit_mod(b, n))
        throw domain_error("both rotation weights must be units mod the order");
    long long q = mod_reduce(b * mod_inverse(a, n), n);
    return {n, q};
}

} // namespace pqs
