#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hilb2/errors.hpp"

namespace hilb2 {

/// An element of the grading group A = Z^r (+) Z/m_1 (+) ... (+) Z/m_s.
/// Torsion entries are kept reduced into [0, m_j).  Values order and
/// compare by the canonical serialization: free vector first, then the
/// torsion vector.
struct DegreeValue {
    std::vector<long long> free;
    std::vector<long> torsion;

    friend bool operator==(const DegreeValue&, const DegreeValue&) = default;
    friend std::strong_ordering operator<=>(const DegreeValue& a, const DegreeValue& b) {
        if (auto c = a.free <=> b.free; c != 0) return c;
        return a.torsion <=> b.torsion;
    }

    std::string str() const;
};

/// A grading of k[x,y] by a finitely generated abelian group, given by
/// the group's invariants and the degrees of the two variables.  Free
/// parts may be negative; nonpositive gradings are fully supported.
struct Grading {
    unsigned free_rank = 0;
    std::vector<long> torsion_moduli; // each >= 2
    DegreeValue deg_x;
    DegreeValue deg_y;

    /// Validates shapes and torsion ranges; throws parse_error.
    void validate() const;

    DegreeValue zero() const { return {std::vector<long long>(free_rank, 0), std::vector<long>(torsion_moduli.size(), 0)}; }
};

/// Degree of x^u y^v; a monoid homomorphism N^2 -> A.
DegreeValue degree_of(unsigned long u, unsigned long v, const Grading& g);

/// Structure of the submonoid of N^2 of exponents with degree zero.
struct DegreeZeroClass {
    enum Kind { Trivial, Monogenic, NotMonogenic } kind;
    /// The minimal nonzero degree-zero exponent; meaningful only when
    /// kind == Monogenic.
    std::pair<unsigned long, unsigned long> generator{0, 0};
};

/// Classifies the degree-zero submonoid: Trivial when only (0,0) has
/// degree zero, Monogenic(v) when the submonoid is exactly N*v, and
/// NotMonogenic otherwise.
DegreeZeroClass degree_zero_generator(const Grading& g);

/// All (u,v) in N^2 with degree_of(u,v) == d.  Only valid for positive
/// gradings (degree_zero_generator == Trivial), where every degree has
/// finitely many monomials; throws unsupported_grading otherwise.
std::vector<std::pair<unsigned long, unsigned long>>
monomials_of_degree(const DegreeValue& d, const Grading& g);

} // namespace hilb2
