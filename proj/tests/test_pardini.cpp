#include <doctest.h>

#include <random>

#include "pqsurf/modular.hpp"
#include "pqsurf/pardini.hpp"

using namespace pqs;

namespace {

BuildingData diagonal_branch() { return solve_building_data(4, {{1, {4, 4}}}); }
BuildingData split_branch() {
    return solve_building_data(4, {{1, {4, 0}}, {3, {0, 4}}});
}
BuildingData mixed_branch() {
    return solve_building_data(4, {{1, {2, 2}}, {3, {2, 2}}});
}

Poly var(const char* name) { return Poly::variable(name); }

std::vector<Poly> relation_polys(const std::vector<CoverRelation>& rels) {
    std::vector<Poly> out;
    for (const auto& r : rels) out.push_back(r.relation);
    return out;
}

} // namespace

TEST_SUITE("pardini") {

TEST_CASE("section and Euler counts on the quadric") {
    CHECK(h0(BiDegree{4, 4}) == 25);
    CHECK(h0(BiDegree{0, 0}) == 1);
    CHECK(h0(BiDegree{3, -3}) == 0);
    CHECK(h0(BiDegree{-1, 5}) == 0);
    CHECK(chi(BiDegree{0, 0}) == 1);
    CHECK(chi(BiDegree{-1, -1}) == 0);
    CHECK(chi(BiDegree{-2, -2}) == 1);
    CHECK(chi(BiDegree{-3, 1}) == -4); // chi can go negative where h0 cannot
}

TEST_CASE("eigensheaf classes of the pinned covers") {
    BuildingData d = diagonal_branch();
    CHECK(d.L.at(1) == BiDegree{1, 1});
    CHECK(d.L.at(2) == BiDegree{2, 2});
    CHECK(d.L.at(3) == BiDegree{3, 3});

    BuildingData s = split_branch();
    CHECK(s.L.at(1) == BiDegree{1, 3});
    CHECK(s.L.at(2) == BiDegree{2, 2});
    CHECK(s.L.at(3) == BiDegree{3, 1});

    BuildingData m = mixed_branch();
    CHECK(m.L.at(1) == BiDegree{2, 2});
    CHECK(m.L.at(2) == BiDegree{2, 2});
    CHECK(m.L.at(3) == BiDegree{2, 2});
}

TEST_CASE("building data validation") {
    CHECK_THROWS_AS(solve_building_data(4, {{1, {1, 0}}}), integrality_error);
    CHECK_THROWS_AS(solve_building_data(4, {{2, {2, 2}}}), domain_error);
    CHECK_THROWS_AS(solve_building_data(4, {{0, {4, 4}}}), domain_error);
    CHECK_THROWS_AS(solve_building_data(4, {{1, {-1, 4}}}), domain_error);
    CHECK_THROWS_AS(solve_building_data(1, {}), domain_error);
    CHECK(solve_building_data(4, {{5, {4, 4}}}).components.count(1) == 1);
}

TEST_CASE("carry table for the order-four cover") {
    // Pairs (a,b) with a <= b, reading order: the two branch characters
    // produce complementary carry patterns.
    std::string row1, row3;
    for (long long a = 0; a < 4; ++a)
        for (long long b = a; b < 4; ++b) {
            row1 += std::to_string(epsilon(4, 1, a, b));
            row3 += std::to_string(epsilon(4, 3, a, b));
        }
    CHECK(row1 == "0000001111");
    CHECK(row3 == "0000111100");
    CHECK_THROWS_AS(epsilon(4, 2, 1, 1), domain_error);
}

TEST_CASE("carry is a symmetric cocycle") {
    for (long long n = 2; n <= 9; ++n)
        for (long long m = 1; m < n; ++m) {
            if (!is_unit_mod(m, n)) continue;
            for (long long a = 0; a < n; ++a)
                for (long long b = 0; b < n; ++b) {
                    CHECK(epsilon(n, m, a, b) == epsilon(n, m, b, a));
                    long long e = epsilon(n, m, a, b);
                    CHECK((e == 0 || e == 1));
                    for (long long c = 0; c < n; ++c) {
                        INFO("n=", n, " m=", m, " a=", a, " b=", b, " c=", c);
                        CHECK(epsilon(n, m, a, b) + epsilon(n, m, a + b, c) ==
                              epsilon(n, m, b, c) + epsilon(n, m, a, b + c));
                    }
                }
        }
}

TEST_CASE("cover relations hold for the pinned data and fail when corrupted") {
    CHECK(verify_cover_relations(diagonal_branch()));
    CHECK(verify_cover_relations(split_branch()));
    CHECK(verify_cover_relations(mixed_branch()));

    BuildingData broken = split_branch();
    broken.L[2] = broken.L[2] + BiDegree{1, 0};
    CHECK_FALSE(verify_cover_relations(broken));
}

TEST_CASE("cover relations hold for random multiples") {
    // Components that are n times an effective class always solve
    // integrally, whatever the character pattern.
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 60; ++iter) {
        long long n = 2 + static_cast<long long>(rng() % 11);
        std::map<long long, BiDegree> comps;
        for (long long m = 1; m < n; ++m) {
            if (!is_unit_mod(m, n) || rng() % 2) continue;
            comps[m] = BiDegree{n * static_cast<long long>(rng() % 3),
                                n * static_cast<long long>(rng() % 3)};
        }
        if (comps.empty()) comps[1] = BiDegree{n, n};
        BuildingData bd = solve_building_data(n, comps);
        INFO("n=", n);
        CHECK(verify_cover_relations(bd));
    }
}

TEST_CASE("natural deformation space of the diagonal cover") {
    NatDefReport rep = natdef_dim(diagonal_branch());
    REQUIRE(rep.terms.size() == 3); // characters 0, 1, 2; never 3 = -1 mod 4
    CHECK(rep.terms[0].chi == 0);
    CHECK(rep.terms[0].dim == 25);
    CHECK(rep.terms[1].chi == 1);
    CHECK(rep.terms[1].dim == 16);
    CHECK(rep.terms[2].chi == 2);
    CHECK(rep.terms[2].dim == 9);
    CHECK(rep.total == 50);
}

TEST_CASE("natural deformation space of the split cover") {
    NatDefReport rep = natdef_dim(split_branch());
    REQUIRE(rep.terms.size() == 6);
    long long total = 0;
    for (const auto& t : rep.terms) {
        CHECK(t.chi != mod_reduce(-t.m, 4));
        // Only the plain sections survive; every twisted class has a
        // negative component.
        CHECK(t.dim == (t.chi == 0 ? 5 : 0));
        total += t.dim;
    }
    CHECK(rep.total == 10);
    CHECK(rep.total == total);
}

TEST_CASE("natural deformation space of the mixed cover") {
    NatDefReport rep = natdef_dim(mixed_branch());
    REQUIRE(rep.terms.size() == 6);
    long long total = 0;
    for (const auto& t : rep.terms) {
        CHECK(t.dim == (t.chi == 0 ? 9 : 1));
        total += t.dim;
    }
    CHECK(rep.total == 22);
    CHECK(rep.total == total);
}

TEST_CASE("canonical eigenpieces") {
    CHECK(canonical_eigenpieces(diagonal_branch()) ==
          std::vector<long long>{0, 0, 1, 4});
    CHECK(canonical_eigenpieces(split_branch()) ==
          std::vector<long long>{0, 0, 1, 0});
    CHECK(canonical_eigenpieces(mixed_branch()) ==
          std::vector<long long>{0, 1, 1, 1});
}

TEST_CASE("algebra of a plain double cover") {
    BuildingData bd = solve_building_data(2, {{1, {2, 2}}});
    auto rels = generate_relations(bd, pure_cover_symbols(bd));
    REQUIRE(rels.size() == 1);
    CHECK(rels[0].display == "w1^2 = g1");
    CHECK(rels[0].relation == var("w1") * var("w1") - var("g1"));
}

TEST_CASE("algebra of the undeformed diagonal cover") {
    auto rels = generate_relations(diagonal_branch(),
                                   pure_cover_symbols(diagonal_branch()));
    Poly g1 = var("g1"), w1 = var("w1"), w2 = var("w2"), w3 = var("w3");
    std::vector<Poly> expected{w1 * w1 - w2,      w1 * w2 - w3,
                               w1 * w3 - g1,      w2 * w2 - g1,
                               w2 * w3 - g1 * w1, w3 * w3 - g1 * w2};
    CHECK(relation_polys(rels) == expected);
    CHECK(rels[0].display == "w1^2 = w2");
    CHECK(rels[4].display == "w2*w3 = g1*w1");
}

TEST_CASE("algebra of the deformed split cover") {
    DeformationMap def{{{1, 0}, "h1"}, {{3, 0}, "h3"}};
    auto rels = generate_relations(split_branch(), def);
    Poly h1 = var("h1"), h3 = var("h3");
    Poly w1 = var("w1"), w2 = var("w2"), w3 = var("w3");
    std::vector<Poly> expected{w1 * w1 - h3 * w2, w1 * w2 - h3 * w3,
                               w1 * w3 - h1 * h3, w2 * w2 - h1 * h3,
                               w2 * w3 - h1 * w1, w3 * w3 - h1 * w2};
    CHECK(relation_polys(rels) == expected);
    CHECK(rels[0].display == "w1^2 = h3*w2");
    CHECK(rels[2].display == "w1*w3 = h1*h3");
}

TEST_CASE("algebra of the deformed mixed cover") {
    DeformationMap def{{{1, 0}, "g1"}, {{1, 1}, "c1"}, {{1, 2}, "c2"},
                       {{3, 0}, "g3"}, {{3, 2}, "d2"}, {{3, 3}, "d3"}};
    auto rels = generate_relations(mixed_branch(), def);
    Poly t1 = var("g1") + var("c1") * var("w1") + var("c2") * var("w2");
    Poly t3 = var("g3") + var("d2") * var("w2") + var("d3") * var("w3");
    Poly w1 = var("w1"), w2 = var("w2"), w3 = var("w3");
    std::vector<Poly> expected{
        w1 * w1 - t3 * w2, w1 * w2 - t3 * w3, w1 * w3 - t1 * t3,
        w2 * w2 - t1 * t3, w2 * w3 - t1 * w1, w3 * w3 - t1 * w2};
    CHECK(relation_polys(rels) == expected);
    CHECK(rels[0].display == "w1^2 = (g3 + d2*w2 + d3*w3)*w2");
}

TEST_CASE("deformation maps are checked for admissibility") {
    BuildingData bd = split_branch();
    CHECK_THROWS_AS(generate_relations(bd, {{{2, 0}, "x"}}), domain_error);
    CHECK_THROWS_AS(
        generate_relations(bd, {{{1, 3}, "x"}, {{3, 0}, "h3"}}),
        domain_error); // character 3 = -1 is never admissible on m = 1
    CHECK_THROWS_AS(generate_relations(bd, {{{1, 0}, ""}, {{3, 0}, "h3"}}),
                    domain_error);
    CHECK_THROWS_AS(generate_relations(bd, {{{1, 0}, "h1"}}),
                    domain_error); // second component left without a section
}

TEST_CASE("bidouble covers of the quadric") {
    BidoubleInvariants a = bidouble_invariants({2, 2}, {2, 2}, {2, 2});
    CHECK(a.K2 == 8);
    CHECK(a.chi == 4);
    CHECK(a.p_g == 3);
    CHECK(a.q == 0);

    BidoubleInvariants b = bidouble_invariants({4, 4}, {2, 2}, {2, 2});
    CHECK(b.K2 == 32);
    CHECK(b.chi == 10);
    CHECK(b.p_g == 9);
    CHECK(b.q == 0);

    // Empty branch divisors: the degree and Euler formulas still make
    // sense, the section counts collapse to zero.
    BidoubleInvariants c = bidouble_invariants({0, 0}, {0, 0}, {0, 0});
    CHECK(c.K2 == 32);
    CHECK(c.chi == 4);
    CHECK(c.p_g == 0);
    CHECK(c.q == -3);

    CHECK_THROWS_AS(bidouble_invariants({1, 1}, {2, 2}, {2, 2}),
                    integrality_error);
}

} // TEST_SUITE
