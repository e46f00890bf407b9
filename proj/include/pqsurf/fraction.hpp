#ifndef PQSURF_FRACTION_HPP
#define PQSURF_FRACTION_HPP

#include <compare>
#include <cstdlib>
#include <numeric>
#include <string>

#include "pqsurf/errors.hpp"

namespace pqs {

/// Exact rational number. Always stored reduced with a positive
/// denominator, so operator== is plain member comparison. Everything in
/// this library is exact; no floating point anywhere.
class Fraction {
public:
    Fraction() = default;
    Fraction(long long value) : num_(value) {} // NOLINT: implicit on purpose
    Fraction(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw domain_error("fraction with zero denominator");
        reduce();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    long long as_integer() const {
        if (!is_integer()) throw integrality_error("expected integer, got " + str());
        return num_;
    }

    Fraction operator-() const { return raw(-num_, den_); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.num_ == 0) throw domain_error("division by zero fraction");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

    bool operator==(const Fraction&) const = default;
    std::strong_ordering operator<=>(const Fraction& o) const {
        return num_ * o.den_ <=> o.num_ * den_; // denominators are positive
    }

    /// "p" when integral, otherwise "p/q".
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    /// Parses "p" or "p/q" with optional leading sign. Throws validation_error.
    static Fraction parse(const std::string& text);

private:
    long long num_ = 0;
    long long den_ = 1;

    static Fraction raw(long long n, long long d) {
        Fraction f;
        f.num_ = n;
        f.den_ = d;
        return f;
    }

    void reduce() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(std::llabs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }
};

inline Fraction Fraction::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            long long v = std::stoll(text, &used);
            if (used != text.size()) throw validation_error("bad rational: " + text);
            return {v};
        }
        long long n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw validation_error("bad rational: " + text);
        long long d = std::stoll(text.substr(slash + 1), &used);
        if (used != text.size() - slash - 1) throw validation_error("bad rational: " + text);
        return {n, d};
    } catch (const std::invalid_argument&) {
        throw validation_error("bad rational: " + text);
    } catch (const std::out_of_range&) {
        throw validation_error("rational out of range: " + text);
    }
}

} // namespace pqs

#endif
