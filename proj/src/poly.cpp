#include "hilb2/poly.hpp"

#include <sstream>

namespace hilb2 {

bool mono_greater(const Exponent& a, const Exponent& b, MonoOrder ord) {
    if (ord == MonoOrder::Lex) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    }
    if (a.second != b.second) return a.second > b.second;
    return a.first > b.first;
}

Poly2 Poly2::monomial(const Exponent& e, const Rational& c) {
    Poly2 p;
    p.add_term(e, c);
    return p;
}

Rational Poly2::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Exponent Poly2::leading_exponent(MonoOrder ord) const {
    if (terms_.empty()) throw precondition_violated("leading term of zero polynomial");
    Exponent best = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        if (mono_greater(e, best, ord)) best = e;
    return best;
}

void Poly2::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly2 Poly2::operator-() const {
    Poly2 p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            p.add_term(mono_mul(ea, eb), ca * cb);
    return p;
}

Poly2 Poly2::scaled(const Rational& c) const {
    Poly2 p;
    if (c == 0) return p;
    for (const auto& [e, coeff] : terms_) p.terms_.emplace(e, coeff * c);
    return p;
}

Poly2 Poly2::shifted(const Exponent& e) const {
    Poly2 p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(mono_mul(m, e), c);
    return p;
}

std::string Poly2::str() const {
    if (terms_.empty()) return "0";
    // Print in descending Lex order.
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        bool trivial_mono = (e.first == 0 && e.second == 0);
        if (a != 1 || trivial_mono) {
            os << a.get_str();
            if (!trivial_mono) os << "*";
        }
        if (!trivial_mono) os << monomial_str(e.first, e.second);
        first = false;
    }
    return os.str();
}

Poly2T Poly2T::monomial(const Exponent& e, const TPoly& c) {
    Poly2T p;
    p.add_term(e, c);
    return p;
}

void Poly2T::add_term(const Exponent& e, const TPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly2T& Poly2T::operator+=(const Poly2T& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly2T& Poly2T::operator-=(const Poly2T& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly2T operator*(const Poly2T& a, const Poly2T& b) {
    Poly2T p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            p.add_term(mono_mul(ea, eb), ca * cb);
    return p;
}

Poly2 Poly2T::at(const Rational& t) const {
    Poly2 p;
    for (const auto& [e, c] : terms_) p.add_term(e, c.eval(t));
    return p;
}

std::string Poly2T::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        std::string cs = c.str();
        bool needs_parens = cs.find(' ') != std::string::npos;
        bool trivial_mono = (e.first == 0 && e.second == 0);
        if (trivial_mono) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else {
            if (cs == "1") {
            } else if (cs == "-1") {
                os << "-";
            } else {
                os << (needs_parens ? "(" + cs + ")" : cs) << "*";
            }
            os << monomial_str(e.first, e.second);
        }
        first = false;
    }
    return os.str();
}

} // namespace hilb2
