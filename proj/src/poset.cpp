#include "hilb2/poset.hpp"

#include <algorithm>
#include <map>

namespace hilb2 {

namespace {

void partitions_rec(unsigned n, unsigned cap, std::vector<unsigned>& cur,
                    std::vector<std::vector<unsigned>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned first = std::min(n, cap); first >= 1; --first) {
        cur.push_back(first);
        partitions_rec(n - first, first, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<unsigned>> integer_partitions(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<MonomialIdeal> enumerate_ideals(const HilbertFunction& h, const Grading& g) {
    std::vector<MonomialIdeal> out;
    for (const auto& parts : integer_partitions((unsigned)h.total())) {
        MonomialIdeal M = MonomialIdeal::from_partition(parts);
        if (hilbert_function(M, g) == h) out.push_back(M);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool order_geq(const MonomialIdeal& Mprime, const MonomialIdeal& M, const Grading& g) {
    if (!(hilbert_function(Mprime, g) == hilbert_function(M, g)))
        throw hilbert_mismatch("order_geq needs ideals with equal Hilbert functions");

    std::map<DegreeValue, std::vector<Exponent>> cells_m, cells_mp;
    for (const auto& [u, v] : M.standard_monomials())
        cells_m[degree_of(u, v, g)].push_back({u, v});
    for (const auto& [u, v] : Mprime.standard_monomials())
        cells_mp[degree_of(u, v, g)].push_back({u, v});

    auto count_leq = [](const std::vector<Exponent>& cells, const Exponent& w) {
        size_t n = 0;
        for (const Exponent& c : cells)
            if (!mono_greater(c, w, MonoOrder::Lex)) ++n;
        return n;
    };

    for (const auto& [deg, cells] : cells_m) {
        const auto& cells_p = cells_mp[deg];
        for (const Exponent& w : cells)
            if (count_leq(cells_p, w) < count_leq(cells, w)) return false;
    }
    return true;
}

size_t PosetP_h::index_of(const MonomialIdeal& M) const {
    auto it = std::find(elements.begin(), elements.end(), M);
    if (it == elements.end()) throw precondition_violated("ideal is not a poset element");
    return (size_t)(it - elements.begin());
}

PosetP_h build_poset(const HilbertFunction& h, const Grading& g) {
    PosetP_h P;
    P.grading = g;
    P.h = h;
    P.elements = enumerate_ideals(h, g);
    const size_t n = P.elements.size();
    P.geq.assign(n, std::vector<bool>(n, false));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            P.geq[a][b] = order_geq(P.elements[a], P.elements[b], g);

    for (size_t a = 0; a < n; ++a) {
        if (!P.geq[a][a]) throw error("staircase order is not reflexive");
        for (size_t b = 0; b < n; ++b) {
            if (a != b && P.geq[a][b] && P.geq[b][a])
                throw error("staircase order is not antisymmetric");
            for (size_t c = 0; c < n; ++c)
                if (P.geq[a][b] && P.geq[b][c] && !P.geq[a][c])
                    throw error("staircase order is not transitive");
        }
    }

    size_t maximal = 0;
    for (size_t a = 0; a < n; ++a) {
        bool is_max = true;
        for (size_t b = 0; b < n; ++b)
            if (b != a && P.geq[b][a]) is_max = false;
        maximal += is_max;
    }
    if (n > 0 && maximal != 1) throw error("poset does not have a unique maximal element");

    P.hasse_edges = hasse(P);
    return P;
}

std::vector<std::pair<size_t, size_t>> hasse(const PosetP_h& P) {
    std::vector<std::pair<size_t, size_t>> edges;
    const size_t n = P.elements.size();
    for (size_t upper = 0; upper < n; ++upper) {
        for (size_t lower = 0; lower < n; ++lower) {
            if (upper == lower || !P.geq[upper][lower]) continue;
            bool cover = true;
            for (size_t mid = 0; mid < n && cover; ++mid) {
                if (mid == upper || mid == lower) continue;
                if (P.geq[upper][mid] && P.geq[mid][lower]) cover = false;
            }
            if (cover) edges.emplace_back(lower, upper);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

MonomialIdeal lex_most(const HilbertFunction& h, const Grading& g, bool cross_validate) {
    auto elements = enumerate_ideals(h, g);
    if (elements.empty())
        throw not_a_hilbert_function("no monomial ideal has the requested Hilbert function");

    std::vector<MonomialIdeal> no_positive;
    for (const MonomialIdeal& M : elements)
        if (positive_significant(M, g).empty()) no_positive.push_back(M);
    if (no_positive.size() != 1)
        throw error("expected exactly one ideal without positive significant arrows, found " +
                    std::to_string(no_positive.size()));

    if (cross_validate) {
        PosetP_h P = build_poset(h, g);
        size_t idx = P.index_of(no_positive.front());
        for (size_t b = 0; b < P.elements.size(); ++b)
            if (!P.geq[idx][b])
                throw error("T+-empty ideal is not the poset maximum");
    }
    return no_positive.front();
}

std::vector<ChainStep> chain_to_lexmost(const MonomialIdeal& M, const Grading& g) {
    if (!M.finite_colength()) throw infinite_colength("chain_to_lexmost needs finite colength");
    std::vector<ChainStep> steps;
    MonomialIdeal current = M;
    const size_t step_bound = integer_partitions((unsigned)M.colength()).size();
    while (true) {
        auto tp = positive_significant(current, g);
        if (tp.empty()) break;
        const Arrow alpha = tp.front(); // canonical: lex-smallest (i,u,v)
        EdgeIdeal E = edge_ideal(current, g, alpha, 1);
        MonomialIdeal next = initial_ideal(E, MonoOrder::Lex);
        if (next == current || !order_geq(next, current, g))
            throw error("Groebner degeneration failed to increase the staircase order");
        steps.push_back({current, alpha, next});
        current = next;
        if (steps.size() > step_bound)
            throw error("chain exceeded the poset size bound");
    }
    return steps;
}

} // namespace hilb2
