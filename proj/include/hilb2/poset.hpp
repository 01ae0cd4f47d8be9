#pragma once

#include <vector>

#include "hilb2/arrows.hpp"
#include "hilb2/edge.hpp"

namespace hilb2 {

/// All integer partitions of n as weakly decreasing part lists.
std::vector<std::vector<unsigned>> integer_partitions(unsigned n);

/// All monomial ideals with multigraded Hilbert function h, found by
/// enumerating partitions of |h| and filtering; sorted canonically.
/// Empty when h is not the Hilbert function of any monomial ideal.
std::vector<MonomialIdeal> enumerate_ideals(const HilbertFunction& h, const Grading& g);

/// The staircase order: M' >= M when, within every degree class, the
/// count of standard monomials of M' that are lex-below any fixed
/// monomial dominates the count for M.  It suffices to test at the
/// standard monomials of M: both counting functions are step functions
/// on each degree class, and the dominating inequality can first fail
/// only where the count for M jumps.  Throws hilbert_mismatch when the
/// two ideals have different Hilbert functions.
bool order_geq(const MonomialIdeal& Mprime, const MonomialIdeal& M, const Grading& g);

/// The poset P_h of all monomial ideals with Hilbert function h.
struct PosetP_h {
    Grading grading;
    HilbertFunction h;
    std::vector<MonomialIdeal> elements;
    /// geq[a][b] holds when elements[a] >= elements[b].
    std::vector<std::vector<bool>> geq;
    /// Cover pairs (lower index, upper index).
    std::vector<std::pair<size_t, size_t>> hasse_edges;

    size_t index_of(const MonomialIdeal& M) const;
};

/// Builds the poset and validates antisymmetry, transitivity and the
/// uniqueness of the maximal element.
PosetP_h build_poset(const HilbertFunction& h, const Grading& g);

/// Transitive reduction of the order relation as cover pairs
/// (lower index, upper index).
std::vector<std::pair<size_t, size_t>> hasse(const PosetP_h& P);

/// The unique monomial ideal L_h with T_+(L_h) empty.  With
/// cross_validate set, additionally builds the poset and checks that
/// L_h is its unique maximal element.  Throws not_a_hilbert_function.
MonomialIdeal lex_most(const HilbertFunction& h, const Grading& g,
                       bool cross_validate = false);

/// One Groebner degeneration step along a positive significant arrow.
struct ChainStep {
    MonomialIdeal from;
    Arrow alpha;
    MonomialIdeal to;
};

/// Walks from M up to the lex-most ideal: while T_+(M) is nonempty,
/// degenerates along the canonical (lexicographically smallest) arrow.
/// Every step strictly increases the staircase order.
std::vector<ChainStep> chain_to_lexmost(const MonomialIdeal& M, const Grading& g);

} // namespace hilb2
