#ifndef PQSURF_POLY_HPP
#define PQSURF_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "pqsurf/fraction.hpp"

namespace pqs {

/// Indeterminate ordering: fibre coordinates (names starting with 'w')
/// precede parameter symbols, alphabetical within each group. The choice
/// is arbitrary but fixed, so every rendered report is reproducible.
struct VarOrder {
    bool operator()(const std::string& a, const std::string& b) const {
        bool aw = !a.empty() && a[0] == 'w';
        bool bw = !b.empty() && b[0] == 'w';
        if (aw != bw) return aw;
        return a < b;
    }
};

/// Monomial as a sparse exponent map; only positive exponents are stored.
using Monomial = std::map<std::string, int, VarOrder>;

/// Graded lexicographic, descending: higher total degree first, ties by
/// the ordering above (a positive exponent on an earlier variable wins).
struct MonomialOrderDesc {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

/// Multivariate polynomial with exact rational coefficients. Variables
/// live in one global namespace; arithmetic between polynomials in
/// different variables just works.
class Poly {
public:
    using TermMap = std::map<Monomial, Fraction, MonomialOrderDesc>;

    Poly() = default;
    static Poly constant(const Fraction& c);
    static Poly variable(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::vector<std::string> variables() const;
    long long degree() const; ///< -1 for the zero polynomial

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly pow(long long e) const;

    Poly derivative(const std::string& var) const;

    /// Evaluates at a rational point. The point must assign every
    /// variable of the polynomial (extra assignments are fine).
    Fraction evaluate(const std::map<std::string, Fraction>& point) const;

    /// Same polynomial with the leading coefficient made positive; used
    /// to pick one representative of {p, -p}.
    Poly sign_normalized() const;

    /// Canonical rendering, terms in descending graded-lex order, e.g.
    /// "w1^2 - h3*w2" or "-2/3*w1 + 1".
    std::string str() const;

    bool operator==(const Poly&) const = default;

private:
    TermMap terms_;
    void add_term(const Monomial& m, const Fraction& c);
};

using PolyMatrix = std::vector<std::vector<Poly>>;

/// All 2x2 minors of a rectangular matrix, sign-normalized and
/// deduplicated, in first-occurrence order (rows then columns, both
/// lexicographic).
std::vector<Poly> minors2(const PolyMatrix& m);

/// Exact linear-span equality over the rationals: every polynomial of
/// each set is a linear combination of the other set.
bool span_equal(const std::vector<Poly>& a, const std::vector<Poly>& b);

/// Rank of the Jacobian of the system at a rational point, which must be
/// a common zero (off_variety_error otherwise). Columns follow the
/// variable ordering over the union of all variables involved.
long long jacobian_rank_at(const std::vector<Poly>& system,
                           const std::map<std::string, Fraction>& point);

} // namespace pqs

#endif
