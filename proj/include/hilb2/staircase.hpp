#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilb2/grading.hpp"

namespace hilb2 {

/// Exponent pair (u,v) of a monomial x^u y^v.
using Exponent = std::pair<unsigned, unsigned>;

/// A nonzero monomial ideal in k[x,y], stored by its minimal generators
/// x^{p_i} y^{q_i} in the canonical order p_0 > ... > p_n >= 0,
/// 0 <= q_0 < ... < q_n.  The unit ideal is gens == {(0,0)}.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// Minimalizes and sorts an arbitrary nonempty generating set.
    static MonomialIdeal from_generators(std::vector<Exponent> gens);

    /// The finite-colength ideal whose standard monomials form the Young
    /// diagram with the given weakly decreasing row lengths (row s has
    /// parts[s] cells at y-exponent s).  The empty partition gives <1>.
    static MonomialIdeal from_partition(const std::vector<unsigned>& parts);

    const std::vector<Exponent>& gens() const { return gens_; }
    size_t num_gens() const { return gens_.size(); }
    /// Largest generator index n.
    size_t top_index() const { return gens_.size() - 1; }
    unsigned p(size_t i) const { return gens_[i].first; }
    unsigned q(size_t i) const { return gens_[i].second; }

    bool is_unit() const { return gens_.size() == 1 && gens_[0] == Exponent{0, 0}; }
    bool finite_colength() const { return gens_.back().first == 0 && gens_.front().second == 0; }

    /// Number of standard monomials; throws infinite_colength.
    unsigned long colength() const;

    bool contains(unsigned u, unsigned v) const;
    /// contains() on signed exponents: false outside the first quadrant.
    bool contains_signed(long long u, long long v) const;

    /// All standard monomials, ordered by y-exponent then x-exponent.
    std::vector<Exponent> standard_monomials() const;

    /// Row lengths of the standard-monomial Young diagram; inverse of
    /// from_partition.
    std::vector<unsigned> partition() const;

    /// Generator list as text, e.g. "<x^4, x^2*y, y^2>".
    std::string str() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
    friend std::strong_ordering operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.gens_ <=> b.gens_;
    }

private:
    std::vector<Exponent> gens_;
};

/// Finitely supported Hilbert function A -> N, keyed by canonical
/// degree order.
struct HilbertFunction {
    std::map<DegreeValue, unsigned long> entries;

    unsigned long total() const;
    friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// The factor X in Hilb = X x Hilb' attached to a principal ideal:
/// either P^m or A^m.
struct FactorSpace {
    enum Kind { Projective, Affine } kind;
    unsigned long m;
    friend bool operator==(const FactorSpace&, const FactorSpace&) = default;
};

/// Monomial text form "x^u*y^v" ("1" for (0,0)).
std::string monomial_str(unsigned u, unsigned v);

/// Groups the standard monomials of M by degree; throws
/// infinite_colength when M is not finite-colength.
HilbertFunction hilbert_function(const MonomialIdeal& M, const Grading& g);

/// Minimal generators of the colon ideal (M : x^a y^b).
MonomialIdeal colon_monomial(const MonomialIdeal& M, unsigned a, unsigned b);

/// Factors M = x^a y^b * Q with Q of codimension != 1 (finite colength
/// or the unit ideal); the gcd is (p_n, q_0).
struct GcdFactorization {
    Exponent gcd;
    MonomialIdeal quotient;
};
GcdFactorization factor_gcd(const MonomialIdeal& M);

/// Classifies the Hilbert-scheme factor of the principal ideal
/// <x^a y^b>: P^m for positive gradings, A^m when the degree-zero
/// submonoid is monogenic.  Throws unsupported_grading when that
/// submonoid needs two generators.
FactorSpace classify_principal_factor(unsigned a, unsigned b, const Grading& g);

} // namespace hilb2
