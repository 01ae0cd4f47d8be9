#include "hilb2/groebner.hpp"

#include <algorithm>

namespace hilb2 {

Poly2 normal_form(Poly2 f, const std::vector<Poly2>& basis, MonoOrder ord) {
    Poly2 remainder;
    while (!f.is_zero()) {
        Exponent lead = f.leading_exponent(ord);
        const Poly2* divisor = nullptr;
        for (const Poly2& g : basis) {
            if (!g.is_zero() && mono_divides(g.leading_exponent(ord), lead)) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            Exponent shift = mono_div(lead, divisor->leading_exponent(ord));
            Rational c = f.coeff(lead) / divisor->leading_coeff(ord);
            f -= divisor->shifted(shift).scaled(c);
        } else {
            Rational c = f.coeff(lead);
            remainder.add_term(lead, c);
            f.add_term(lead, -c);
        }
    }
    return remainder;
}

Poly2 spoly(const Poly2& f, const Poly2& g, MonoOrder ord) {
    Exponent lf = f.leading_exponent(ord), lg = g.leading_exponent(ord);
    Exponent lcm = mono_lcm(lf, lg);
    Poly2 a = f.shifted(mono_div(lcm, lf)).scaled(1 / f.leading_coeff(ord));
    Poly2 b = g.shifted(mono_div(lcm, lg)).scaled(1 / g.leading_coeff(ord));
    return a - b;
}

std::vector<Poly2> buchberger(std::vector<Poly2> gens, MonoOrder ord) {
    std::vector<Poly2> basis;
    for (Poly2& f : gens)
        if (!f.is_zero()) basis.push_back(f.scaled(1 / f.leading_coeff(ord)));

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        Exponent li = basis[i].leading_exponent(ord), lj = basis[j].leading_exponent(ord);
        if (mono_lcm(li, lj) == mono_mul(li, lj)) continue; // coprime criterion
        Poly2 h = normal_form(spoly(basis[i], basis[j], ord), basis, ord);
        if (h.is_zero()) continue;
        h = h.scaled(1 / h.leading_coeff(ord));
        for (size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
        basis.push_back(std::move(h));
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<Poly2> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        Exponent li = basis[i].leading_exponent(ord);
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            Exponent lj = basis[j].leading_exponent(ord);
            if (lj == li) redundant = j < i;
            else redundant = mono_divides(lj, li);
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Interreduce tails.
    std::vector<Poly2> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly2> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(normal_form(minimal[i], others, ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly2& a, const Poly2& b) {
        return mono_greater(a.leading_exponent(ord), b.leading_exponent(ord), ord);
    });
    return reduced;
}

bool is_groebner_basis(const std::vector<Poly2>& gens, MonoOrder ord) {
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!normal_form(spoly(gens[i], gens[j], ord), gens, ord).is_zero())
                return false;
    return true;
}

MonomialIdeal initial_ideal_of_basis(const std::vector<Poly2>& gb, MonoOrder ord) {
    std::vector<Exponent> leads;
    for (const Poly2& g : gb)
        if (!g.is_zero()) leads.push_back(g.leading_exponent(ord));
    return MonomialIdeal::from_generators(std::move(leads));
}

} // namespace hilb2
