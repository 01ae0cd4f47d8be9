#pragma once

#include <vector>

#include "hilb2/arrows.hpp"
#include "hilb2/groebner.hpp"

namespace hilb2 {

/// The one-parameter binomial deformation of M attached to a positive
/// significant arrow alpha = (k, ell+p_k, m+q_k): generated by
/// x^{p_i}y^{q_i} for i < k and x^{p_i}y^{q_i} - t x^{ell+p_i}y^{m+q_i}
/// for i >= k.  The defining generators are a minimal xel Groebner basis
/// for every t.
struct EdgeIdeal {
    MonomialIdeal base;
    Arrow alpha;
    unsigned k;
    unsigned ell;  // > 0
    long m;        // < 0
    Rational t;
    std::vector<Poly2T> symbolic_gens;
    std::vector<Poly2> gens; // specialized at t
};

/// Builds I_alpha(t); validates the arrow against M and the grading,
/// throwing not_positive_significant.
EdgeIdeal edge_ideal(const MonomialIdeal& M, const Grading& g, const Arrow& alpha,
                     const Rational& t);

/// The largest index sigma < k with ell + p_{k-1} >= p_sigma and
/// m + q_k >= q_sigma; exists for every positive significant arrow.
unsigned sigma_index(const MonomialIdeal& M, const Arrow& alpha);

/// One term c * e_{basis_index} of a syzygy row, with c in Q[t][x,y].
struct SyzygyTerm {
    unsigned basis_index;
    Poly2T coeff;
};
using SyzygyRow = std::vector<SyzygyTerm>;

/// The n generating syzygy rows of I_alpha(t): row i is
/// y^{q_i-q_{i-1}} e_{i-1} - x^{p_{i-1}-p_i} e_i
/// - delta_{i,k} t x^{ell+p_{k-1}-p_sigma} y^{m+q_k-q_sigma} e_sigma.
std::vector<SyzygyRow> syzygies(const EdgeIdeal& E);

/// Applies a syzygy row to the symbolic generators; zero for genuine
/// syzygies.
Poly2T syzygy_residual(const EdgeIdeal& E, const SyzygyRow& row);

/// Initial ideal of I_alpha(t) under ord, via Buchberger on the
/// specialized generators.  Under Xel this always returns the base M.
MonomialIdeal initial_ideal(const EdgeIdeal& E, MonoOrder ord);

/// Normal form of the monomial x^u y^v modulo the xel Groebner basis of
/// I_alpha(t), tracked structurally: the result is either zero or
/// t^lambda times a standard monomial of M.
struct MonomialNF {
    bool zero;
    unsigned lambda;
    Exponent mono;
};
MonomialNF edge_monomial_nf(const EdgeIdeal& E, unsigned u, unsigned v);

} // namespace hilb2
