#include <doctest.h>

#include <random>

#include "hilb2/grading.hpp"

using namespace hilb2;

namespace {

Grading z_grading(long dx, long dy) {
    Grading g;
    g.free_rank = 1;
    g.deg_x = {{dx}, {}};
    g.deg_y = {{dy}, {}};
    return g;
}

Grading zmod_grading(long m, long dx, long dy) {
    Grading g;
    g.free_rank = 0;
    g.torsion_moduli = {m};
    g.deg_x = {{}, {dx % m}};
    g.deg_y = {{}, {dy % m}};
    return g;
}

Grading trivial_grading() {
    return Grading{};
}

bool degree_is_zero(unsigned long u, unsigned long v, const Grading& g) {
    return degree_of(u, v, g) == g.zero();
}

// Brute-force oracle: scan the box [0,B]^2 for degree-zero exponents and
// classify the submonoid directly.
DegreeZeroClass degree_zero_by_enumeration(const Grading& g, unsigned long B) {
    std::vector<std::pair<unsigned long, unsigned long>> zero;
    for (unsigned long u = 0; u <= B; ++u)
        for (unsigned long v = 0; v <= B; ++v)
            if ((u || v) && degree_is_zero(u, v, g)) zero.emplace_back(u, v);
    if (zero.empty()) return {DegreeZeroClass::Trivial};
    auto [v1, v2] = zero.front(); // scan order makes this the minimal element
    for (auto [u, v] : zero) {
        bool multiple = false;
        for (unsigned long k = 1; k <= B && !multiple; ++k)
            multiple = (k * v1 == u && k * v2 == v);
        if (!multiple) return {DegreeZeroClass::NotMonogenic};
    }
    return {DegreeZeroClass::Monogenic, {v1, v2}};
}

} // namespace

TEST_CASE("degree_of basic examples") {
    Grading g0 = trivial_grading();
    CHECK(degree_of(0, 0, g0) == g0.zero());

    Grading g = z_grading(1, -1);
    CHECK(degree_of(2, 3, g).free[0] == -1);

    Grading gz3 = zmod_grading(3, 1, 1);
    CHECK(degree_of(7, 0, gz3).torsion[0] == 1);
    CHECK(degree_of(1, 0, gz3) == degree_of(7, 0, gz3)); // deg(x) = deg(y^7)
}

TEST_CASE("degree_of is additive") {
    std::mt19937_64 rng(2026);
    std::vector<Grading> gradings = {
        z_grading(1, 1), z_grading(1, -1), z_grading(-2, 3),
        zmod_grading(3, 1, 1), zmod_grading(4, 2, 3), trivial_grading()};
    Grading mixed;
    mixed.free_rank = 2;
    mixed.torsion_moduli = {2};
    mixed.deg_x = {{1, -1}, {1}};
    mixed.deg_y = {{0, 2}, {1}};
    gradings.push_back(mixed);

    for (const Grading& g : gradings) {
        for (int trial = 0; trial < 50; ++trial) {
            unsigned long u = rng() % 20, v = rng() % 20;
            unsigned long u2 = rng() % 20, v2 = rng() % 20;
            DegreeValue lhs = degree_of(u + u2, v + v2, g);
            DegreeValue a = degree_of(u, v, g), b = degree_of(u2, v2, g);
            DegreeValue sum = g.zero();
            for (size_t i = 0; i < sum.free.size(); ++i) sum.free[i] = a.free[i] + b.free[i];
            for (size_t j = 0; j < sum.torsion.size(); ++j)
                sum.torsion[j] = (a.torsion[j] + b.torsion[j]) % g.torsion_moduli[j];
            CHECK(lhs == sum);
        }
        CHECK(degree_of(0, 0, g) == g.zero());
    }
}

TEST_CASE("degree_zero_generator on the named cases") {
    CHECK(degree_zero_generator(z_grading(1, 1)).kind == DegreeZeroClass::Trivial);

    auto dz = degree_zero_generator(z_grading(1, -1));
    REQUIRE(dz.kind == DegreeZeroClass::Monogenic);
    CHECK(dz.generator == std::pair<unsigned long, unsigned long>{1, 1});

    CHECK(degree_zero_generator(trivial_grading()).kind == DegreeZeroClass::NotMonogenic);
}

TEST_CASE("degree_zero_generator agrees with box enumeration") {
    std::vector<Grading> gradings = {
        z_grading(1, 1),  z_grading(1, -1), z_grading(2, -3), z_grading(-1, -1),
        z_grading(0, 1),  z_grading(1, 0),  zmod_grading(3, 1, 1),
        zmod_grading(4, 2, 1), zmod_grading(5, 0, 2), trivial_grading()};
    Grading mixed;
    mixed.free_rank = 1;
    mixed.torsion_moduli = {2};
    mixed.deg_x = {{1}, {1}};
    mixed.deg_y = {{-1}, {0}};
    gradings.push_back(mixed);
    Grading rank2;
    rank2.free_rank = 2;
    rank2.deg_x = {{1, 0}, {}};
    rank2.deg_y = {{0, 1}, {}};
    gradings.push_back(rank2);

    for (const Grading& g : gradings) {
        auto fast = degree_zero_generator(g);
        auto slow = degree_zero_by_enumeration(g, 24);
        CHECK(fast.kind == slow.kind);
        if (fast.kind == DegreeZeroClass::Monogenic) {
            CHECK(fast.generator == slow.generator);
            auto [v1, v2] = fast.generator;
            CHECK(degree_is_zero(v1, v2, g));
            // No smaller nonzero exponent has degree zero.
            for (unsigned long u = 0; u <= v1 + v2; ++u)
                for (unsigned long v = 0; u + v > 0 && u + v < v1 + v2; ++v)
                    CHECK_FALSE(degree_is_zero(u, v, g));
        }
    }
}

TEST_CASE("Monogenic generator for a torsion-refined kernel") {
    // deg(x) = (1;1), deg(y) = (-1;0) over Z (+) Z/2: the free kernel is
    // spanned by (1,1) but the torsion congruence doubles it.
    Grading g;
    g.free_rank = 1;
    g.torsion_moduli = {2};
    g.deg_x = {{1}, {1}};
    g.deg_y = {{-1}, {0}};
    auto dz = degree_zero_generator(g);
    REQUIRE(dz.kind == DegreeZeroClass::Monogenic);
    CHECK(dz.generator == std::pair<unsigned long, unsigned long>{2, 2});
}

TEST_CASE("monomials_of_degree enumerates a positive grading exactly") {
    Grading g = z_grading(1, 1);
    auto monos = monomials_of_degree(degree_of(1, 1, g), g);
    REQUIRE(monos.size() == 3); // x^2, xy, y^2
    CHECK(monomials_of_degree(degree_of(0, 0, g), g).size() == 1);

    Grading g2;
    g2.free_rank = 2;
    g2.deg_x = {{1, 0}, {}};
    g2.deg_y = {{0, 1}, {}};
    auto unique = monomials_of_degree(degree_of(3, 4, g2), g2);
    REQUIRE(unique.size() == 1);
    CHECK(unique[0] == std::pair<unsigned long, unsigned long>{3, 4});

    CHECK_THROWS_AS(monomials_of_degree(g.zero(), z_grading(1, -1)), unsupported_grading);
}

TEST_CASE("DegreeValue canonical ordering") {
    DegreeValue a{{0, 1}, {0}}, b{{1, 0}, {0}}, c{{0, 1}, {1}};
    CHECK(a < b);
    CHECK(a < c);
    CHECK(a == a);
    CHECK(a.str() == "(0,1;0)");
}
