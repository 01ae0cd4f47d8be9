#include "hilb2/tangent.hpp"

#include <algorithm>

#include "hilb2/groebner.hpp"

namespace hilb2 {

namespace {

using Key = std::tuple<unsigned, unsigned, unsigned>;

std::vector<TangentTerm> flatten(std::map<size_t, TPoly>&& acc) {
    std::vector<TangentTerm> terms;
    for (auto& [var, coeff] : acc)
        if (!coeff.is_zero()) terms.push_back({var, std::move(coeff)});
    return terms;
}

} // namespace

const TangentEquation& TangentSystem::equation(unsigned i, unsigned u, unsigned v) const {
    auto it = equation_index.find(Key{i, u, v});
    if (it == equation_index.end())
        throw precondition_violated("no tangent equation with that label");
    return equations[it->second];
}

unsigned b_value(const EdgeIdeal& E, unsigned u, unsigned v) {
    if (E.base.contains(u, v))
        throw precondition_violated("b_value is defined at standard monomials only");
    unsigned b = 0;
    for (unsigned kappa = 1;; ++kappa) {
        long cu = (long)u - (long)(kappa * E.ell);
        long cv = (long)v - (long)kappa * E.m;
        if (cu < 0 || !E.base.contains_signed(cu, cv)) break;
        // A multiple of a pure monomial generator dies instead of
        // reducing down the chain.
        bool dies = false;
        for (unsigned i = 0; i < E.k && !dies; ++i)
            dies = (long)E.base.p(i) <= cu && (long)E.base.q(i) <= cv;
        if (dies) break;
        b = kappa;
    }
    return b;
}

TangentSystem build_system(const MonomialIdeal& M, const Grading& g,
                           const std::optional<Arrow>& alpha) {
    TangentSystem T;
    T.base = M;
    T.grading = g;
    T.alpha = alpha;
    T.variables = all_arrows(M, g);
    for (size_t idx = 0; idx < T.variables.size(); ++idx) {
        const Arrow& a = T.variables[idx];
        T.variable_index[Key{a.i, a.u, a.v}] = idx;
    }

    std::optional<EdgeIdeal> E;
    long ell = 0, m = 0;
    unsigned k = 0, sigma = 0;
    if (alpha) {
        E = edge_ideal(M, g, *alpha, 1);
        ell = E->ell;
        m = E->m;
        k = E->k;
        sigma = sigma_index(M, *alpha);
        T.sigma = sigma;
    }

    auto var_at = [&](unsigned j, long r, long s) -> std::optional<size_t> {
        if (r < 0 || s < 0) return std::nullopt;
        auto it = T.variable_index.find(Key{j, (unsigned)r, (unsigned)s});
        if (it == T.variable_index.end()) return std::nullopt;
        return it->second;
    };

    for (unsigned i = 1; i < M.num_gens(); ++i) {
        const long p_prev = M.p(i - 1), q_prev = M.q(i - 1);
        const long p_i = M.p(i), q_i = M.q(i);
        for (const auto& [u, v] : M.standard_monomials()) {
            std::map<size_t, TPoly> acc;
            const unsigned b = alpha ? b_value(*E, u, v) : 0;
            for (unsigned mu = 0; mu <= b; ++mu) {
                if (auto var = var_at(i - 1, (long)u - (long)mu * ell,
                                      (long)v + q_prev - q_i - (long)mu * m))
                    acc[*var] += TPoly::term(1, mu);
                if (auto var = var_at(i, (long)u - p_prev + p_i - (long)mu * ell,
                                      (long)v - (long)mu * m))
                    acc[*var] -= TPoly::term(1, mu);
                if (alpha && i == k) {
                    long r = (long)u - (long)M.p(k - 1) + (long)M.p(sigma) - (long)(mu + 1) * ell;
                    long s = (long)v - (long)M.q(k) + (long)M.q(sigma) - (long)(mu + 1) * m;
                    if (auto var = var_at(sigma, r, s))
                        acc[*var] -= TPoly::term(1, mu + 1);
                }
            }
            TangentEquation eq{i, u, v, flatten(std::move(acc))};
            T.equation_index[Key{i, u, v}] = T.equations.size();
            T.equations.push_back(std::move(eq));
        }
    }
    return T;
}

TangentSystem reduced_system(const TangentSystem& T) {
    TangentSystem G = T;
    G.equations.clear();
    G.equation_index.clear();
    const MonomialIdeal& M = T.base;
    for (const TangentEquation& eq : T.equations) {
        if (eq.u >= M.p(eq.i - 1) || (long)eq.v >= (long)M.q(eq.i) - (long)M.q(eq.i - 1)) {
            G.equation_index[Key{eq.i, eq.u, eq.v}] = G.equations.size();
            G.equations.push_back(eq);
        }
    }
    return G;
}

TangentEquation relation_residual(const TangentSystem& T, unsigned i, unsigned u, unsigned v) {
    if (!T.alpha)
        throw precondition_violated("relation_residual needs an edge-ideal system");
    const MonomialIdeal& M = T.base;
    if (i < 1 || i >= M.num_gens())
        throw precondition_violated("relation index out of range");
    if (M.contains(u, v) || u >= M.p(i - 1) ||
        (long)v >= (long)M.q(i) - (long)M.q(i - 1))
        throw precondition_violated("relation head out of range");

    const long ell = (long)T.alpha->u - (long)M.p(T.alpha->i);
    const long m = (long)T.alpha->v - (long)M.q(T.alpha->i);
    const unsigned sigma = T.sigma;
    const unsigned n = (unsigned)M.top_index();

    std::map<size_t, TPoly> acc;
    auto add_equation = [&](unsigned j, long r, long s, const TPoly& scale) {
        if (r < 0 || s < 0 || M.contains_signed(r, s)) return; // F(j,r,s) = 0
        for (const TangentTerm& term : T.equation(j, (unsigned)r, (unsigned)s).terms)
            acc[term.var] += scale * term.coeff;
    };

    for (unsigned j = i; j <= sigma; ++j)
        add_equation(j, (long)u - (long)M.p(i - 1) + (long)M.p(j - 1),
                     (long)v - (long)M.q(i) + (long)M.q(j), TPoly(Rational(1)));

    for (unsigned lambda = 0;; ++lambda) {
        bool any_in_range = false;
        for (unsigned j = sigma + 1; j <= n; ++j) {
            long r = (long)u - (long)M.p(i - 1) + (long)M.p(j - 1) - (long)lambda * ell;
            long s = (long)v - (long)M.q(i) + (long)M.q(j) - (long)lambda * m;
            if (r >= 0) any_in_range = true;
            add_equation(j, r, s, TPoly::term(1, lambda));
        }
        if (!any_in_range) break;
    }
    return {i, u, v, flatten(std::move(acc))};
}

namespace {

std::vector<std::vector<TPoly>> dense_rows(const TangentSystem& T) {
    std::vector<std::vector<TPoly>> rows;
    for (const TangentEquation& eq : T.equations) {
        if (eq.is_zero()) continue;
        std::vector<TPoly> row(T.r());
        for (const TangentTerm& term : eq.terms) row[term.var] = term.coeff;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

unsigned long tangent_dimension(const TangentSystem& T, const Rational& t) {
    std::vector<std::vector<Rational>> rows;
    for (const TangentEquation& eq : T.equations) {
        if (eq.is_zero()) continue;
        std::vector<Rational> row(T.r(), Rational(0));
        bool nonzero = false;
        for (const TangentTerm& term : eq.terms) {
            row[term.var] = term.coeff.eval(t);
            nonzero = nonzero || row[term.var] != 0;
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    return T.r() - bareiss_rank(std::move(rows));
}

unsigned long tangent_dimension_symbolic(const TangentSystem& T) {
    return T.r() - bareiss_rank(dense_rows(T));
}

unsigned long oracle_dimension(const MonomialIdeal& M, const Grading& g,
                               const std::optional<Arrow>& alpha, const Rational& t) {
    const std::vector<Arrow> vars = all_arrows(M, g);
    std::map<Key, size_t> var_index;
    for (size_t idx = 0; idx < vars.size(); ++idx)
        var_index[Key{vars[idx].i, vars[idx].u, vars[idx].v}] = idx;

    // Syzygy rows and the basis to reduce against.
    std::vector<std::vector<std::pair<unsigned, Poly2>>> rows;
    std::vector<Poly2> basis;
    if (alpha) {
        EdgeIdeal E = edge_ideal(M, g, *alpha, t);
        basis = E.gens;
        for (const SyzygyRow& row : syzygies(E)) {
            std::vector<std::pair<unsigned, Poly2>> r;
            for (const SyzygyTerm& term : row) r.emplace_back(term.basis_index, term.coeff.at(t));
            rows.push_back(std::move(r));
        }
    } else {
        for (unsigned i = 0; i < M.num_gens(); ++i)
            basis.push_back(Poly2::monomial({M.p(i), M.q(i)}));
        for (unsigned i = 1; i < M.num_gens(); ++i) {
            std::vector<std::pair<unsigned, Poly2>> r;
            r.emplace_back(i - 1, Poly2::monomial({0, M.q(i) - M.q(i - 1)}));
            r.emplace_back(i, Poly2::monomial({M.p(i - 1) - M.p(i), 0}, -1));
            rows.push_back(std::move(r));
        }
    }

    // For each syzygy row, push phi through it and reduce to normal form;
    // the coefficient of every standard monomial must vanish.
    std::map<Exponent, size_t> cell_index;
    for (const Exponent& cell : M.standard_monomials())
        cell_index.emplace(cell, cell_index.size());

    std::vector<std::vector<Rational>> matrix;
    for (const auto& row : rows) {
        std::vector<std::vector<Rational>> constraint(
            cell_index.size(), std::vector<Rational>(vars.size(), Rational(0)));
        for (const auto& [gen_idx, row_coeff] : row) {
            for (size_t vi = 0; vi < vars.size(); ++vi) {
                if (vars[vi].i != gen_idx) continue;
                Poly2 image = row_coeff * Poly2::monomial({vars[vi].u, vars[vi].v});
                Poly2 nf = normal_form(image, basis, MonoOrder::Xel);
                for (const auto& [mono, c] : nf.terms())
                    constraint[cell_index.at(mono)][vi] += c;
            }
        }
        for (auto& r : constraint) {
            bool nonzero = false;
            for (const Rational& c : r) nonzero = nonzero || c != 0;
            if (nonzero) matrix.push_back(std::move(r));
        }
    }
    return vars.size() - bareiss_rank(std::move(matrix));
}

bool variable_order_greater(const TangentSystem& T, size_t a, size_t b) {
    const Arrow& A = T.variables[a];
    const Arrow& B = T.variables[b];
    // C0: larger u - p_i wins.  Within a tied class, C1 orders
    // nonnegative variables by larger index, C2/C3 order nonpositive and
    // utterly insignificant variables by smaller index.
    long da = (long)A.u - (long)T.base.p(A.i);
    long db = (long)B.u - (long)T.base.p(B.i);
    if (da != db) return da > db;
    long ka = da >= 0 ? (long)A.i : -(long)A.i;
    long kb = db >= 0 ? (long)B.i : -(long)B.i;
    if (ka != kb) return ka > kb;
    return A.v > B.v;
}

size_t initial_variable(const TangentSystem& T, const TangentEquation& eq) {
    if (eq.is_zero()) throw precondition_violated("initial variable of a zero equation");
    size_t best = eq.terms.front().var;
    for (const TangentTerm& term : eq.terms)
        if (variable_order_greater(T, term.var, best)) best = term.var;
    return best;
}

} // namespace hilb2
