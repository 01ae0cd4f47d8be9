#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hilb2/edge.hpp"
#include "hilb2/matrix.hpp"
#include "hilb2/poset.hpp"

namespace hilb2 {

/// One linear term coeff(t) * c_var of a tangent equation.
struct TangentTerm {
    size_t var;
    TPoly coeff;
};

/// The equation F(i,u,v) of the tangent system, as a sparse row over
/// the arrow variables with coefficients in Q[t].
struct TangentEquation {
    unsigned i, u, v;
    std::vector<TangentTerm> terms;
    bool is_zero() const { return terms.empty(); }
};

/// The homogeneous linear system cutting out the tangent space to the
/// Hilbert scheme at I_alpha(t) (or at M itself when alpha is absent)
/// inside A^r, with one coordinate per arrow of M.
struct TangentSystem {
    MonomialIdeal base;
    Grading grading;
    std::optional<Arrow> alpha;
    unsigned sigma = 0; // meaningful only when alpha is present
    std::vector<Arrow> variables;
    std::vector<TangentEquation> equations;
    std::map<std::tuple<unsigned, unsigned, unsigned>, size_t> variable_index;
    std::map<std::tuple<unsigned, unsigned, unsigned>, size_t> equation_index;

    size_t r() const { return variables.size(); }
    const TangentEquation& equation(unsigned i, unsigned u, unsigned v) const;
};

/// The largest b such that the monomials x^{u-mu*ell} y^{v-mu*m} for
/// 0 <= mu <= b all reduce to the standard monomial x^u y^v modulo the
/// xel Groebner basis of the edge ideal.
unsigned b_value(const EdgeIdeal& E, unsigned u, unsigned v);

/// Builds the full system of n * colength(M) equations F(i,u,v).
TangentSystem build_system(const MonomialIdeal& M, const Grading& g,
                           const std::optional<Arrow>& alpha);

/// The subsystem G of equations with u >= p_{i-1} or v >= q_i - q_{i-1};
/// it cuts out the same subspace as the full system.
TangentSystem reduced_system(const TangentSystem& T);

/// Expands the linear relation among the F(i,u,v) attached to a
/// standard monomial x^u y^v with u < p_{i-1} and v < q_i - q_{i-1};
/// genuine relations combine to the zero row.  Throws
/// precondition_violated outside that range.
TangentEquation relation_residual(const TangentSystem& T, unsigned i, unsigned u, unsigned v);

/// Dimension r - rank of the system specialized at a rational t.
unsigned long tangent_dimension(const TangentSystem& T, const Rational& t);

/// Dimension r - rank over Q(t), computed by fraction-free elimination
/// on the polynomial coefficients, never by specializing an echelon form.
unsigned long tangent_dimension_symbolic(const TangentSystem& T);

/// Independent route to the same number: builds the Hom constraints
/// directly from the syzygy rows (Taylor syzygies when alpha is absent),
/// reducing every syzygy-image monomial with the Groebner engine, and
/// returns the kernel dimension.  Makes no use of the closed-form
/// equations, of b_value, or of sigma.
unsigned long oracle_dimension(const MonomialIdeal& M, const Grading& g,
                               const std::optional<Arrow>& alpha, const Rational& t);

/// True when variable a precedes b in a fixed monomial order compatible
/// with the conditions C0-C3 used to read off initial variables.
bool variable_order_greater(const TangentSystem& T, size_t a, size_t b);

/// Initial variable of a nonzero equation under that order.
size_t initial_variable(const TangentSystem& T, const TangentEquation& eq);

} // namespace hilb2
