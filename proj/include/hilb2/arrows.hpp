#pragma once

#include <string>
#include <vector>

#include "hilb2/staircase.hpp"

namespace hilb2 {

enum class ArrowClass {
    PositiveSignificant,
    NonnegSignificantNotPositive,
    NonposSignificant,
    Insignificant,
    UtterlyInsignificant,
};

std::string arrow_class_str(ArrowClass c);

/// An arrow (i,u,v): generator index i paired with a standard monomial
/// head x^u y^v of the same A-degree as x^{p_i} y^{q_i}.  Arrows order
/// lexicographically by (i,u,v).
struct Arrow {
    unsigned i;
    unsigned u, v;
    ArrowClass cls;

    bool significant() const {
        return cls == ArrowClass::PositiveSignificant ||
               cls == ArrowClass::NonnegSignificantNotPositive ||
               cls == ArrowClass::NonposSignificant;
    }
    bool nonneg_significant() const {
        return cls == ArrowClass::PositiveSignificant ||
               cls == ArrowClass::NonnegSignificantNotPositive;
    }

    friend bool operator==(const Arrow& a, const Arrow& b) {
        return a.i == b.i && a.u == b.u && a.v == b.v;
    }
    friend std::strong_ordering operator<=>(const Arrow& a, const Arrow& b) {
        if (auto c = a.i <=> b.i; c != 0) return c;
        if (auto c = a.u <=> b.u; c != 0) return c;
        return a.v <=> b.v;
    }
};

/// Enumerates and classifies every arrow of M, in canonical (i,u,v)
/// order.  Throws infinite_colength.
std::vector<Arrow> all_arrows(const MonomialIdeal& M, const Grading& g);

/// T_+(M): the positive significant arrows.
std::vector<Arrow> positive_significant(const MonomialIdeal& M, const Grading& g);

/// Filters a classified arrow list.
std::vector<Arrow> significant_arrows(const std::vector<Arrow>& arrows);

/// True when (i,u,v) is a positive significant arrow of M.
bool is_positive_significant(const MonomialIdeal& M, const Grading& g,
                             unsigned i, unsigned u, unsigned v);

} // namespace hilb2
