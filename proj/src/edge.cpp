#include "hilb2/edge.hpp"

namespace hilb2 {

EdgeIdeal edge_ideal(const MonomialIdeal& M, const Grading& g, const Arrow& alpha,
                     const Rational& t) {
    if (!is_positive_significant(M, g, alpha.i, alpha.u, alpha.v))
        throw not_positive_significant("arrow (" + std::to_string(alpha.i) + "," +
                                       std::to_string(alpha.u) + "," + std::to_string(alpha.v) +
                                       ") is not positive significant for " + M.str());
    EdgeIdeal E;
    E.base = M;
    E.alpha = alpha;
    E.k = alpha.i;
    E.ell = alpha.u - M.p(alpha.i);
    E.m = (long)alpha.v - (long)M.q(alpha.i);
    E.t = t;
    for (unsigned i = 0; i < M.num_gens(); ++i) {
        Poly2T f = Poly2T::monomial({M.p(i), M.q(i)});
        if (i >= E.k)
            f.add_term({M.p(i) + E.ell, (unsigned)((long)M.q(i) + E.m)}, -TPoly::variable());
        E.symbolic_gens.push_back(f);
        E.gens.push_back(f.at(t));
    }
    return E;
}

unsigned sigma_index(const MonomialIdeal& M, const Arrow& alpha) {
    const unsigned k = alpha.i;
    if (k == 0) throw precondition_violated("sigma_index needs a positive arrow with k >= 1");
    const long ell = (long)alpha.u - (long)M.p(k);
    const long m = (long)alpha.v - (long)M.q(k);
    for (unsigned s = k; s-- > 0;) {
        if (ell + (long)M.p(k - 1) >= (long)M.p(s) && m + (long)M.q(k) >= (long)M.q(s))
            return s;
    }
    throw precondition_violated("no admissible sigma; arrow is not positive significant");
}

std::vector<SyzygyRow> syzygies(const EdgeIdeal& E) {
    const MonomialIdeal& M = E.base;
    const unsigned sigma = sigma_index(M, E.alpha);
    std::vector<SyzygyRow> rows;
    for (unsigned i = 1; i < M.num_gens(); ++i) {
        SyzygyRow row;
        row.push_back({i - 1, Poly2T::monomial({0, M.q(i) - M.q(i - 1)})});
        row.push_back({i, Poly2T::monomial({M.p(i - 1) - M.p(i), 0}, -TPoly(Rational(1)))});
        if (i == E.k) {
            unsigned a = (unsigned)((long)E.ell + (long)M.p(E.k - 1) - (long)M.p(sigma));
            unsigned b = (unsigned)(E.m + (long)M.q(E.k) - (long)M.q(sigma));
            row.push_back({sigma, Poly2T::monomial({a, b}, -TPoly::variable())});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Poly2T syzygy_residual(const EdgeIdeal& E, const SyzygyRow& row) {
    Poly2T acc;
    for (const SyzygyTerm& term : row)
        acc += term.coeff * E.symbolic_gens.at(term.basis_index);
    return acc;
}

MonomialIdeal initial_ideal(const EdgeIdeal& E, MonoOrder ord) {
    auto gb = buchberger(E.gens, ord);
    MonomialIdeal in = initial_ideal_of_basis(gb, ord);
    if (ord == MonoOrder::Xel && !(in == E.base))
        throw error("edge-ideal generators failed to be an xel Groebner basis");
    return in;
}

MonomialNF edge_monomial_nf(const EdgeIdeal& E, unsigned u, unsigned v) {
    const MonomialIdeal& M = E.base;
    long cu = u, cv = v;
    unsigned lambda = 0;
    while (M.contains_signed(cu, cv)) {
        // A multiple of a pure monomial generator lies in the ideal.
        for (unsigned i = 0; i < E.k; ++i)
            if ((long)M.p(i) <= cu && (long)M.q(i) <= cv) return {true, 0, {0, 0}};
        cu += E.ell;
        cv += E.m;
        ++lambda;
    }
    return {false, lambda, {(unsigned)cu, (unsigned)cv}};
}

} // namespace hilb2
