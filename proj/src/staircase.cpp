#include "hilb2/staircase.hpp"

#include <algorithm>
#include <sstream>

namespace hilb2 {

MonomialIdeal MonomialIdeal::from_generators(std::vector<Exponent> gens) {
    if (gens.empty())
        throw precondition_violated("a monomial ideal needs at least one generator");
    // Drop non-minimal generators.
    std::vector<Exponent> minimal;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens) {
            if (h == g) continue;
            if (h.first <= g.first && h.second <= g.second) {
                // Equal pairs are deduplicated by keeping the first copy.
                if (h.first == g.first && h.second == g.second) {
                    redundant = &h < &g;
                } else {
                    redundant = true;
                }
                if (redundant) break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const Exponent& a, const Exponent& b) { return a.first > b.first; });
    for (size_t i = 0; i + 1 < minimal.size(); ++i)
        if (minimal[i].second >= minimal[i + 1].second)
            throw precondition_violated("generator set is not an antichain");
    MonomialIdeal M;
    M.gens_ = std::move(minimal);
    return M;
}

MonomialIdeal MonomialIdeal::from_partition(const std::vector<unsigned>& parts) {
    for (size_t s = 0; s < parts.size(); ++s) {
        if (parts[s] == 0)
            throw precondition_violated("partition parts must be positive");
        if (s > 0 && parts[s] > parts[s - 1])
            throw precondition_violated("partition parts must be weakly decreasing");
    }
    std::vector<Exponent> gens;
    if (!parts.empty()) gens.emplace_back(parts[0], 0);
    for (size_t s = 1; s < parts.size(); ++s)
        if (parts[s] < parts[s - 1]) gens.emplace_back(parts[s], (unsigned)s);
    gens.emplace_back(0, (unsigned)parts.size());
    MonomialIdeal M;
    M.gens_ = std::move(gens);
    return M;
}

unsigned long MonomialIdeal::colength() const {
    if (!finite_colength()) throw infinite_colength("ideal has infinite colength");
    unsigned long total = 0;
    for (unsigned part : partition()) total += part;
    return total;
}

bool MonomialIdeal::contains(unsigned u, unsigned v) const {
    for (const auto& [p, q] : gens_)
        if (p <= u && q <= v) return true;
    return false;
}

bool MonomialIdeal::contains_signed(long long u, long long v) const {
    if (u < 0 || v < 0) return false;
    return contains((unsigned)u, (unsigned)v);
}

std::vector<Exponent> MonomialIdeal::standard_monomials() const {
    std::vector<Exponent> cells;
    for (unsigned v = 0; const unsigned part : partition()) {
        for (unsigned u = 0; u < part; ++u) cells.emplace_back(u, v);
        ++v;
    }
    return cells;
}

std::vector<unsigned> MonomialIdeal::partition() const {
    if (!finite_colength()) throw infinite_colength("ideal has infinite colength");
    std::vector<unsigned> parts;
    // Row v of the staircase complement has length min{p_i : q_i <= v}.
    size_t i = 0;
    for (unsigned v = 0; v < gens_.back().second; ++v) {
        while (i + 1 < gens_.size() && gens_[i + 1].second <= v) ++i;
        parts.push_back(gens_[i].first);
    }
    return parts;
}

std::string monomial_str(unsigned u, unsigned v) {
    if (u == 0 && v == 0) return "1";
    std::ostringstream os;
    if (u > 0) {
        os << "x";
        if (u > 1) os << "^" << u;
    }
    if (v > 0) {
        if (u > 0) os << "*";
        os << "y";
        if (v > 1) os << "^" << v;
    }
    return os.str();
}

std::string MonomialIdeal::str() const {
    std::ostringstream os;
    os << "<";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << monomial_str(gens_[i].first, gens_[i].second);
    }
    os << ">";
    return os.str();
}

unsigned long HilbertFunction::total() const {
    unsigned long t = 0;
    for (const auto& [deg, count] : entries) t += count;
    return t;
}

HilbertFunction hilbert_function(const MonomialIdeal& M, const Grading& g) {
    HilbertFunction h;
    for (const auto& [u, v] : M.standard_monomials())
        ++h.entries[degree_of(u, v, g)];
    return h;
}

MonomialIdeal colon_monomial(const MonomialIdeal& M, unsigned a, unsigned b) {
    std::vector<Exponent> gens;
    for (const auto& [p, q] : M.gens())
        gens.emplace_back(p > a ? p - a : 0, q > b ? q - b : 0);
    return MonomialIdeal::from_generators(std::move(gens));
}

GcdFactorization factor_gcd(const MonomialIdeal& M) {
    Exponent gcd{M.gens().back().first, M.gens().front().second};
    return {gcd, colon_monomial(M, gcd.first, gcd.second)};
}

FactorSpace classify_principal_factor(unsigned a, unsigned b, const Grading& g) {
    if (a == 0 && b == 0) return {FactorSpace::Affine, 0};
    DegreeZeroClass dz = degree_zero_generator(g);
    switch (dz.kind) {
    case DegreeZeroClass::Trivial: {
        auto monos = monomials_of_degree(degree_of(a, b, g), g);
        return {FactorSpace::Projective, monos.size() - 1};
    }
    case DegreeZeroClass::Monogenic: {
        auto [v1, v2] = dz.generator;
        unsigned long m = (unsigned long)-1;
        if (v1 > 0) m = std::min(m, (unsigned long)a / v1);
        if (v2 > 0) m = std::min(m, (unsigned long)b / v2);
        return {FactorSpace::Affine, m};
    }
    default:
        throw unsupported_grading(
            "degree-zero submonoid is not monogenic; no principal-factor classification");
    }
}

} // namespace hilb2
