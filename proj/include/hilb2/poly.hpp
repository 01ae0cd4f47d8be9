#pragma once

#include <map>
#include <optional>
#include <string>

#include "hilb2/staircase.hpp"
#include "hilb2/tpoly.hpp"

namespace hilb2 {

/// The two lexicographic monomial orders on k[x,y]: Lex has x > y, Xel
/// has x < y.
enum class MonoOrder { Lex, Xel };

/// True when a > b in the given order.
bool mono_greater(const Exponent& a, const Exponent& b, MonoOrder ord);

inline bool mono_divides(const Exponent& d, const Exponent& m) {
    return d.first <= m.first && d.second <= m.second;
}
inline Exponent mono_mul(const Exponent& a, const Exponent& b) {
    return {a.first + b.first, a.second + b.second};
}
inline Exponent mono_lcm(const Exponent& a, const Exponent& b) {
    return {std::max(a.first, b.first), std::max(a.second, b.second)};
}
inline Exponent mono_div(const Exponent& a, const Exponent& b) {
    return {a.first - b.first, a.second - b.second};
}

/// Sparse bivariate polynomial over the exact rationals.
class Poly2 {
public:
    Poly2() = default;

    static Poly2 monomial(const Exponent& e, const Rational& c = 1);

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    Rational coeff(const Exponent& e) const;

    /// Leading exponent with respect to ord; requires a nonzero polynomial.
    Exponent leading_exponent(MonoOrder ord) const;
    Rational leading_coeff(MonoOrder ord) const { return coeff(leading_exponent(ord)); }

    void add_term(const Exponent& e, const Rational& c);

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    Poly2 scaled(const Rational& c) const;
    Poly2 shifted(const Exponent& e) const; // multiply by x^e1 y^e2

    friend bool operator==(const Poly2&, const Poly2&) = default;

    std::string str() const;

private:
    std::map<Exponent, Rational> terms_;
};

/// Sparse bivariate polynomial with coefficients in Q[t]; used for the
/// symbolic side of edge-ideal computations.
class Poly2T {
public:
    Poly2T() = default;

    static Poly2T monomial(const Exponent& e, const TPoly& c = TPoly(Rational(1)));

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, TPoly>& terms() const { return terms_; }

    void add_term(const Exponent& e, const TPoly& c);

    Poly2T& operator+=(const Poly2T& o);
    Poly2T& operator-=(const Poly2T& o);
    friend Poly2T operator+(Poly2T a, const Poly2T& b) { return a += b; }
    friend Poly2T operator-(Poly2T a, const Poly2T& b) { return a -= b; }
    friend Poly2T operator*(const Poly2T& a, const Poly2T& b);

    /// Specializes t to a rational value.
    Poly2 at(const Rational& t) const;

    friend bool operator==(const Poly2T&, const Poly2T&) = default;

    std::string str() const;

private:
    std::map<Exponent, TPoly> terms_;
};

} // namespace hilb2
