#include "hilb2/arrows.hpp"

#include <algorithm>
#include <cassert>

namespace hilb2 {

std::string arrow_class_str(ArrowClass c) {
    switch (c) {
    case ArrowClass::PositiveSignificant: return "positive-significant";
    case ArrowClass::NonnegSignificantNotPositive: return "nonnegative-significant";
    case ArrowClass::NonposSignificant: return "nonpositive-significant";
    case ArrowClass::Insignificant: return "insignificant";
    case ArrowClass::UtterlyInsignificant: return "utterly-insignificant";
    }
    return "?";
}

namespace {

ArrowClass classify(const MonomialIdeal& M, unsigned i, unsigned u, unsigned v) {
    const unsigned p = M.p(i), q = M.q(i);
    const size_t n = M.top_index();
    assert(!(u >= p && v >= q) || (u == p && v == q));
    if (u >= p) {
        // Nonnegative arrow (the head is standard, so v < q).
        bool sig = i > 0 && M.contains(u + M.p(i - 1) - p, v);
        if (!sig) return ArrowClass::Insignificant;
        return u > p ? ArrowClass::PositiveSignificant
                     : ArrowClass::NonnegSignificantNotPositive;
    }
    if (v >= q) {
        bool sig = i < n && M.contains(u, v - q + M.q(i + 1));
        return sig ? ArrowClass::NonposSignificant : ArrowClass::Insignificant;
    }
    return ArrowClass::UtterlyInsignificant;
}

} // namespace

std::vector<Arrow> all_arrows(const MonomialIdeal& M, const Grading& g) {
    const auto cells = M.standard_monomials();
    std::vector<DegreeValue> cell_degrees;
    cell_degrees.reserve(cells.size());
    for (const auto& [u, v] : cells) cell_degrees.push_back(degree_of(u, v, g));

    std::vector<Arrow> arrows;
    for (unsigned i = 0; i < M.num_gens(); ++i) {
        const DegreeValue gen_degree = degree_of(M.p(i), M.q(i), g);
        for (size_t c = 0; c < cells.size(); ++c) {
            if (cell_degrees[c] != gen_degree) continue;
            const auto [u, v] = cells[c];
            arrows.push_back({i, u, v, classify(M, i, u, v)});
        }
    }
    std::sort(arrows.begin(), arrows.end());
    return arrows;
}

std::vector<Arrow> significant_arrows(const std::vector<Arrow>& arrows) {
    std::vector<Arrow> out;
    for (const Arrow& a : arrows)
        if (a.significant()) out.push_back(a);
    return out;
}

std::vector<Arrow> positive_significant(const MonomialIdeal& M, const Grading& g) {
    std::vector<Arrow> out;
    for (const Arrow& a : all_arrows(M, g))
        if (a.cls == ArrowClass::PositiveSignificant) out.push_back(a);
    return out;
}

bool is_positive_significant(const MonomialIdeal& M, const Grading& g,
                             unsigned i, unsigned u, unsigned v) {
    if (i >= M.num_gens()) return false;
    if (M.contains(u, v)) return false;
    if (u <= M.p(i)) return false;
    if (degree_of(u, v, g) != degree_of(M.p(i), M.q(i), g)) return false;
    return classify(M, i, u, v) == ArrowClass::PositiveSignificant;
}

} // namespace hilb2
