#include "pqsurf/poly.hpp"

#include <algorithm>

namespace pqs {

namespace {

long long monomial_degree(const Monomial& m) {
    long long d = 0;
    for (const auto& [_, e] : m) d += e;
    return d;
}

} // namespace

bool MonomialOrderDesc::operator()(const Monomial& x, const Monomial& y) const {
    long long dx = monomial_degree(x), dy = monomial_degree(y);
    if (dx != dy) return dx > dy;
    auto ix = x.begin();
    auto iy = y.begin();
    VarOrder before;
    while (ix != x.end() && iy != y.end()) {
        if (before(ix->first, iy->first)) return true;  // x alone has the earlier variable
        if (before(iy->first, ix->first)) return false;
        if (ix->second != iy->second) return ix->second > iy->second;
        ++ix;
        ++iy;
    }
    return ix != x.end(); // remaining variables of x are earlier than nothing
}

Poly Poly::constant(const Fraction& c) {
    Poly p;
    if (c != Fraction(0)) p.terms_[Monomial{}] = c;
    return p;
}

Poly Poly::variable(const std::string& name) {
    if (name.empty()) throw domain_error("variable needs a name");
    Poly p;
    Monomial m;
    m[name] = 1;
    p.terms_[m] = Fraction(1);
    return p;
}

std::vector<std::string> Poly::variables() const {
    std::map<std::string, int, VarOrder> seen;
    for (const auto& [m, _] : terms_)
        for (const auto& [v, e] : m) seen[v] = 1;
    std::vector<std::string> out;
    out.reserve(seen.size());
    for (const auto& [v, _] : seen) out.push_back(v);
    return out;
}

long long Poly::degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.begin()->first); // leading term has max degree
}

void Poly::add_term(const Monomial& m, const Fraction& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != Fraction(0)) terms_[m] = c;
        return;
    }
    it->second += c;
    if (it->second == Fraction(0)) terms_.erase(it);
}

Poly Poly::operator-() const {
    Poly p;
    for (const auto& [m, c] : terms_) p.terms_[m] = -c;
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly p = a;
    for (const auto& [m, c] : b.terms_) p.add_term(m, c);
    return p;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            p.add_term(m, ca * cb);
        }
    return p;
}

Poly Poly::pow(long long e) const {
    if (e < 0) throw domain_error("negative polynomial power");
    Poly result = Poly::constant(1);
    for (long long i = 0; i < e; ++i) result *= *this;
    return result;
}

Poly Poly::derivative(const std::string& var) const {
    Poly p;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        if (it == m.end()) continue;
        Monomial dm = m;
        if (it->second == 1)
            dm.erase(var);
        else
            dm[var] -= 1;
        p.add_term(dm, c * Fraction(it->second));
    }
    return p;
}

Fraction Poly::evaluate(const std::map<std::string, Fraction>& point) const {
    Fraction total = 0;
    for (const auto& [m, c] : terms_) {
        Fraction term = c;
        for (const auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end())
                throw domain_error("evaluation point misses variable " + v);
            for (int i = 0; i < e; ++i) term *= it->second;
        }
        total += term;
    }
    return total;
}

Poly Poly::sign_normalized() const {
    if (terms_.empty()) return *this;
    if (terms_.begin()->second < Fraction(0)) return -*this;
    return *this;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Fraction abs = c < Fraction(0) ? -c : c;
        if (first) {
            if (c < Fraction(0)) out += "-";
            first = false;
        } else {
            out += c < Fraction(0) ? " - " : " + ";
        }
        // Terms are ordered fibre-variables-first, but inside a monomial
        // plain alphabetical order reads better: h3*w2, not w2*h3.
        std::map<std::string, int> alphabetical(m.begin(), m.end());
        std::string mono;
        for (const auto& [v, e] : alphabetical) {
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += abs.str();
        } else {
            if (abs != Fraction(1)) out += abs.str() + "*";
            out += mono;
        }
    }
    return out;
}

std::vector<Poly> minors2(const PolyMatrix& m) {
    std::size_t rows = m.size();
    if (rows < 2) throw domain_error("need at least two rows for 2x2 minors");
    std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw domain_error("ragged matrix");
    if (cols < 2) throw domain_error("need at least two columns for 2x2 minors");

    std::vector<Poly> out;
    for (std::size_t r1 = 0; r1 < rows; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < rows; ++r2)
            for (std::size_t c1 = 0; c1 < cols; ++c1)
                for (std::size_t c2 = c1 + 1; c2 < cols; ++c2) {
                    Poly det = (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]).sign_normalized();
                    if (std::find(out.begin(), out.end(), det) == out.end())
                        out.push_back(det);
                }
    return out;
}

namespace {

// Row-reduced basis over Q with remainder reduction.
class SpanBasis {
public:
    void insert(std::vector<Fraction> v) {
        reduce(v);
        auto pivot = first_nonzero(v);
        if (pivot == v.size()) return;
        Fraction lead = v[pivot];
        for (auto& x : v) x /= lead;
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
    }

    bool contains(std::vector<Fraction> v) const {
        reduce(v);
        return first_nonzero(v) == v.size();
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<std::vector<Fraction>> rows_;
    std::vector<std::size_t> pivots_;

    static std::size_t first_nonzero(const std::vector<Fraction>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != Fraction(0)) return i;
        return v.size();
    }

    void reduce(std::vector<Fraction>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Fraction factor = v[pivots_[r]];
            if (factor == Fraction(0)) continue;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= factor * rows_[r][i];
        }
    }
};

std::vector<Fraction> coefficient_vector(const Poly& p, const std::vector<Monomial>& basis) {
    std::vector<Fraction> v(basis.size(), Fraction(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = p.terms().find(basis[i]);
        if (it != p.terms().end()) v[i] = it->second;
    }
    return v;
}

std::vector<Monomial> monomial_basis(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::map<Monomial, int, MonomialOrderDesc> seen;
    for (const auto& p : a)
        for (const auto& [m, _] : p.terms()) seen[m] = 1;
    for (const auto& p : b)
        for (const auto& [m, _] : p.terms()) seen[m] = 1;
    std::vector<Monomial> out;
    out.reserve(seen.size());
    for (const auto& [m, _] : seen) out.push_back(m);
    return out;
}

bool spans(const std::vector<Poly>& generators, const std::vector<Poly>& targets,
           const std::vector<Monomial>& basis) {
    SpanBasis span;
    for (const auto& g : generators) span.insert(coefficient_vector(g, basis));
    for (const auto& t : targets)
        if (!span.contains(coefficient_vector(t, basis))) return false;
    return true;
}

} // namespace

bool span_equal(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    auto basis = monomial_basis(a, b);
    return spans(a, b, basis) && spans(b, a, basis);
}

long long jacobian_rank_at(const std::vector<Poly>& system,
                           const std::map<std::string, Fraction>& point) {
    std::map<std::string, int, VarOrder> vars;
    for (const auto& p : system)
        for (const auto& v : p.variables()) vars[v] = 1;

    SpanBasis span;
    for (const auto& p : system) {
        if (p.evaluate(point) != Fraction(0))
            throw off_variety_error("point is not a zero of " + p.str());
        std::vector<Fraction> gradient;
        gradient.reserve(vars.size());
        for (const auto& [v, _] : vars) gradient.push_back(p.derivative(v).evaluate(point));
        span.insert(std::move(gradient));
    }
    return static_cast<long long>(span.rank());
}

} // namespace pqs
