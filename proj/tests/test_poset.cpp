#include <doctest.h>

#include <random>
#include <set>

#include "hilb2/poset.hpp"

using namespace hilb2;

namespace {

Grading z_std() {
    Grading g;
    g.free_rank = 1;
    g.deg_x = {{1}, {}};
    g.deg_y = {{1}, {}};
    return g;
}

Grading zmod3_std() {
    Grading g;
    g.torsion_moduli = {3};
    g.deg_x = {{}, {1}};
    g.deg_y = {{}, {1}};
    return g;
}

HilbertFunction h_of_values(const Grading& g, const std::vector<unsigned long>& values) {
    HilbertFunction h;
    for (size_t a = 0; a < values.size(); ++a) {
        if (values[a] == 0) continue;
        DegreeValue d = g.zero();
        if (g.free_rank > 0) d.free[0] = (long long)a;
        else if (!g.torsion_moduli.empty()) d.torsion[0] = (long)a % g.torsion_moduli[0];
        h.entries[d] = values[a];
    }
    return h;
}

// Transitive reduction computed independently of hasse(): drop every
// relation implied by a two-step path.
std::set<std::pair<size_t, size_t>> reduction_by_paths(const PosetP_h& P) {
    std::set<std::pair<size_t, size_t>> edges;
    size_t n = P.elements.size();
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
            if (a == b || !P.geq[a][b]) continue;
            bool implied = false;
            for (size_t c = 0; c < n; ++c)
                if (c != a && c != b && P.geq[a][c] && P.geq[c][b]) implied = true;
            if (!implied) edges.insert({b, a});
        }
    }
    return edges;
}

} // namespace

TEST_CASE("partition enumeration") {
    CHECK(integer_partitions(0).size() == 1);
    CHECK(integer_partitions(4).size() == 5);
    CHECK(integer_partitions(7).size() == 15);
}

TEST_CASE("enumerate_ideals on the worked posets") {
    // Six ideals of colength 6 with h = (1,2,2,1) under the standard grading.
    auto ideals = enumerate_ideals(h_of_values(z_std(), {1, 2, 2, 1}), z_std());
    CHECK(ideals.size() == 6);

    // A = 0, colength 3.
    HilbertFunction h3;
    h3.entries[Grading{}.zero()] = 3;
    auto all3 = enumerate_ideals(h3, Grading{});
    REQUIRE(all3.size() == 3);
    std::set<MonomialIdeal> expected3{
        MonomialIdeal::from_generators({{3, 0}, {0, 1}}),
        MonomialIdeal::from_generators({{2, 0}, {1, 1}, {0, 2}}),
        MonomialIdeal::from_generators({{1, 0}, {0, 3}})};
    CHECK(std::set<MonomialIdeal>(all3.begin(), all3.end()) == expected3);

    // Z/3 example: exactly the pair from the paper.
    auto pair = enumerate_ideals(h_of_values(zmod3_std(), {2, 3, 1}), zmod3_std());
    REQUIRE(pair.size() == 2);
    std::set<MonomialIdeal> expected_pair{
        MonomialIdeal::from_generators({{5, 0}, {1, 1}, {0, 2}}),
        MonomialIdeal::from_generators({{2, 0}, {1, 1}, {0, 5}})};
    CHECK(std::set<MonomialIdeal>(pair.begin(), pair.end()) == expected_pair);
}

TEST_CASE("order_geq on the chain examples") {
    MonomialIdeal M = MonomialIdeal::from_generators({{3, 0}, {0, 1}});
    MonomialIdeal Mp = MonomialIdeal::from_generators({{2, 0}, {1, 1}, {0, 2}});
    MonomialIdeal Mpp = MonomialIdeal::from_generators({{1, 0}, {0, 3}});
    Grading g0;

    CHECK(order_geq(M, M, g0));
    CHECK(order_geq(Mpp, M, g0));
    CHECK_FALSE(order_geq(M, Mpp, g0));
    CHECK(order_geq(Mpp, Mp, g0));
    CHECK(order_geq(Mp, M, g0));

    MonomialIdeal a = MonomialIdeal::from_generators({{5, 0}, {1, 1}, {0, 2}});
    MonomialIdeal b = MonomialIdeal::from_generators({{2, 0}, {1, 1}, {0, 5}});
    CHECK(order_geq(b, a, zmod3_std()));
    CHECK_FALSE(order_geq(a, b, zmod3_std()));

    CHECK_THROWS_AS(order_geq(M, MonomialIdeal::from_partition({4}), g0), hilbert_mismatch);
}

TEST_CASE("the A = 0 poset is dominance order on conjugate partitions") {
    // Spot check: [2,2] vs [3,1] at colength 4, conjugates [2,2] vs [2,1,1].
    Grading g0;
    MonomialIdeal a = MonomialIdeal::from_partition({2, 2});
    MonomialIdeal b = MonomialIdeal::from_partition({3, 1});
    CHECK(order_geq(a, b, g0));
    CHECK_FALSE(order_geq(b, a, g0));
}

TEST_CASE("poset construction and Hasse diagram for e:poset") {
    PosetP_h P = build_poset(h_of_values(z_std(), {1, 2, 2, 1}), z_std());
    REQUIRE(P.elements.size() == 6);

    auto edges = std::set<std::pair<size_t, size_t>>(P.hasse_edges.begin(), P.hasse_edges.end());
    CHECK(edges == reduction_by_paths(P));
    CHECK(edges.size() == 8);

    // Shape: unique top covering two elements, unique bottom covered by
    // two, and two incomparable middle pairs.
    std::vector<size_t> out_deg(6, 0), in_deg(6, 0);
    for (auto [lo, up] : edges) {
        ++out_deg[lo];
        ++in_deg[up];
    }
    size_t tops = 0, bottoms = 0;
    for (size_t i = 0; i < 6; ++i) {
        tops += out_deg[i] == 0;
        bottoms += in_deg[i] == 0;
    }
    CHECK(tops == 1);
    CHECK(bottoms == 1);

    size_t incomparable_pairs = 0;
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = i + 1; j < 6; ++j)
            if (!P.geq[i][j] && !P.geq[j][i]) ++incomparable_pairs;
    CHECK(incomparable_pairs == 2);
}

TEST_CASE("chain posets have chain Hasse diagrams") {
    HilbertFunction h3;
    h3.entries[Grading{}.zero()] = 3;
    PosetP_h chain3 = build_poset(h3, Grading{});
    CHECK(chain3.hasse_edges.size() == 2);

    HilbertFunction h1;
    h1.entries[Grading{}.zero()] = 1;
    PosetP_h single = build_poset(h1, Grading{});
    CHECK(single.hasse_edges.empty());
}

TEST_CASE("lex_most") {
    MonomialIdeal L = lex_most(h_of_values(zmod3_std(), {2, 3, 1}), zmod3_std(), true);
    CHECK(L == MonomialIdeal::from_generators({{2, 0}, {1, 1}, {0, 5}}));
    // Not a lex-segment ideal: deg(x) = deg(y^7), y^7 in L, x not in L,
    // and x is lex-greater than y^7.
    CHECK(L.contains(0, 7));
    CHECK_FALSE(L.contains(1, 0));
    CHECK(degree_of(1, 0, zmod3_std()) == degree_of(0, 7, zmod3_std()));
    CHECK(mono_greater({1, 0}, {0, 7}, MonoOrder::Lex));

    HilbertFunction h3;
    h3.entries[Grading{}.zero()] = 3;
    CHECK(lex_most(h3, Grading{}, true) == MonomialIdeal::from_generators({{1, 0}, {0, 3}}));

    HilbertFunction h1;
    h1.entries[Grading{}.zero()] = 1;
    CHECK(lex_most(h1, Grading{}, true) == MonomialIdeal::from_partition({1}));

    HilbertFunction bad;
    bad.entries[DegreeValue{{5}, {}}] = 2;
    CHECK_THROWS_AS(lex_most(bad, z_std()), not_a_hilbert_function);
}

TEST_CASE("chain_to_lexmost") {
    Grading g0;
    MonomialIdeal M = MonomialIdeal::from_partition({4, 2});
    auto steps = chain_to_lexmost(M, g0);
    REQUIRE(!steps.empty());
    CHECK(steps[0].alpha == Arrow{1, 3, 0, ArrowClass::PositiveSignificant});
    CHECK(steps[0].to == MonomialIdeal::from_generators({{3, 0}, {1, 1}, {0, 4}}));
    HilbertFunction h = hilbert_function(M, g0);
    CHECK(steps.back().to == lex_most(h, g0));

    // Already at the maximum: empty chain.
    CHECK(chain_to_lexmost(steps.back().to, g0).empty());

    // e:nonlex: a single step.
    MonomialIdeal Mnl = MonomialIdeal::from_generators({{5, 0}, {1, 1}, {0, 2}});
    auto steps_nl = chain_to_lexmost(Mnl, zmod3_std());
    REQUIRE(steps_nl.size() == 1);
    CHECK(steps_nl[0].to == MonomialIdeal::from_generators({{2, 0}, {1, 1}, {0, 5}}));
}

TEST_CASE("chains increase strictly and stay within poset bounds") {
    std::mt19937_64 rng(77);
    Grading g0;
    for (unsigned n = 1; n <= 7; ++n) {
        auto parts_list = integer_partitions(n);
        for (const auto& parts : parts_list) {
            MonomialIdeal M = MonomialIdeal::from_partition(parts);
            auto steps = chain_to_lexmost(M, g0);
            CHECK(steps.size() < parts_list.size());
            for (const auto& step : steps) {
                CHECK(order_geq(step.to, step.from, g0));
                CHECK(step.to != step.from);
            }
        }
    }
}
