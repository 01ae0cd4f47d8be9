#pragma once

#include <string>
#include <vector>

#include "hilb2/rational.hpp"

namespace hilb2 {

/// Dense univariate polynomial in t over the exact rationals.  The
/// coefficient vector never carries a zero leading entry.
class TPoly {
public:
    TPoly() = default;
    TPoly(const Rational& c) { if (c != 0) coeffs_ = {c}; }
    explicit TPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// c * t^k.
    static TPoly term(const Rational& c, unsigned k);
    static TPoly variable() { return term(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return (int)coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    TPoly operator-() const;
    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);

    /// Quotient of an exact division; throws inexact_division on a
    /// nonzero remainder.
    TPoly divexact(const TPoly& d) const;

    Rational eval(const Rational& t) const;

    friend bool operator==(const TPoly&, const TPoly&) = default;

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

} // namespace hilb2
