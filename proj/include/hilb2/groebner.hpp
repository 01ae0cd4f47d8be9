#pragma once

#include <vector>

#include "hilb2/poly.hpp"

namespace hilb2 {

/// Fully reduced normal form of f modulo basis under ord.
Poly2 normal_form(Poly2 f, const std::vector<Poly2>& basis, MonoOrder ord);

Poly2 spoly(const Poly2& f, const Poly2& g, MonoOrder ord);

/// Buchberger's algorithm; returns the reduced Groebner basis (minimal,
/// interreduced, monic), sorted by leading exponent.
std::vector<Poly2> buchberger(std::vector<Poly2> gens, MonoOrder ord);

/// True when every S-pair of gens reduces to zero modulo gens.
bool is_groebner_basis(const std::vector<Poly2>& gens, MonoOrder ord);

/// Leading-term ideal of a Groebner basis.
MonomialIdeal initial_ideal_of_basis(const std::vector<Poly2>& gb, MonoOrder ord);

} // namespace hilb2
