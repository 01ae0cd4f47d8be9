#include "hilb2/tpoly.hpp"

#include <sstream>

namespace hilb2 {

TPoly TPoly::term(const Rational& c, unsigned k) {
    if (c == 0) return {};
    TPoly p;
    p.coeffs_.assign(k + 1, Rational(0));
    p.coeffs_[k] = c;
    return p;
}

TPoly TPoly::operator-() const {
    TPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return TPoly(std::move(out));
}

TPoly TPoly::divexact(const TPoly& d) const {
    if (d.is_zero()) throw inexact_division("division by the zero polynomial");
    if (is_zero()) return {};
    if (degree() < d.degree()) throw inexact_division("inexact polynomial division");
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quo(coeffs_.size() - d.coeffs_.size() + 1, Rational(0));
    const Rational& lead = d.coeffs_.back();
    for (size_t k = quo.size(); k-- > 0;) {
        Rational c = rem[k + d.coeffs_.size() - 1] / lead;
        quo[k] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < d.coeffs_.size(); ++j)
            rem[k + j] -= c * d.coeffs_[j];
    }
    for (const Rational& c : rem)
        if (c != 0) throw inexact_division("inexact polynomial division");
    return TPoly(std::move(quo));
}

Rational TPoly::eval(const Rational& t) const {
    Rational acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
}

std::string TPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (k == 0 || a != 1) {
            os << a.get_str();
            if (k > 0) os << "*";
        }
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

} // namespace hilb2
