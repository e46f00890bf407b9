#include <doctest.h>

#include <random>

#include "pqsurf/smoothing.hpp"

using namespace pqs;

namespace {

Poly var(const char* name) { return Poly::variable(name); }

std::vector<Poly> split_relations() {
    Poly h1 = var("h1"), h3 = var("h3");
    Poly w1 = var("w1"), w2 = var("w2"), w3 = var("w3");
    return {w1 * w1 - h3 * w2, w1 * w2 - h3 * w3, w1 * w3 - h1 * h3,
            w2 * w2 - h1 * h3, w2 * w3 - h1 * w1, w3 * w3 - h1 * w2};
}

std::map<std::string, Fraction> point5(long long h1, long long h3, long long w1,
                                       long long w2, long long w3) {
    return {{"h1", Fraction(h1)},
            {"h3", Fraction(h3)},
            {"w1", Fraction(w1)},
            {"w2", Fraction(w2)},
            {"w3", Fraction(w3)}};
}

Poly random_quadratic(std::mt19937& rng) {
    const char* names[] = {"w1", "w2", "w3", "h1", "h3"};
    Poly p;
    for (int t = 0; t < 3; ++t) {
        long long c = static_cast<long long>(rng() % 7) - 3;
        p += Poly::constant(c) * var(names[rng() % 5]) * var(names[rng() % 5]);
    }
    return p;
}

} // namespace

TEST_SUITE("polyring") {

TEST_CASE("polynomial arithmetic") {
    Poly w1 = var("w1"), w2 = var("w2");
    CHECK((w1 * w1).derivative("w1") == Poly::constant(2) * w1);
    CHECK((w1 + w2) * (w1 - w2) == w1 * w1 - w2 * w2);
    CHECK((w1 * w1 - w2).evaluate({{"w1", Fraction(1)}, {"w2", Fraction(1)}}) ==
          Fraction(0));
    CHECK_THROWS_AS((w1 + w2).evaluate({{"w1", Fraction(1)}}), domain_error);
    CHECK(w1.pow(3) == w1 * w1 * w1);
    CHECK(w1.pow(0) == Poly::constant(1));
    CHECK_THROWS_AS(w1.pow(-1), domain_error);
    CHECK_THROWS_AS(Poly::variable(""), domain_error);
}

TEST_CASE("degrees and rendering") {
    Poly w1 = var("w1"), w2 = var("w2"), h3 = var("h3");
    CHECK(Poly().degree() == -1);
    CHECK(Poly().str() == "0");
    CHECK(Poly::constant(5).degree() == 0);
    CHECK((w1 * w1 + w2).degree() == 2);
    CHECK((w1 * w1 - h3 * w2).str() == "w1^2 - h3*w2");
    CHECK((Poly::constant(Fraction(-2, 3)) * w1 + Poly::constant(1)).str() ==
          "-2/3*w1 + 1");
    CHECK((h3 * w2 - w1 * w1).sign_normalized() == w1 * w1 - h3 * w2);
    CHECK(Poly().sign_normalized() == Poly());
}

TEST_CASE("minors of the symmetric matrix") {
    auto minors = minors2(determinantal_matrix());
    Poly h1 = var("h1"), h3 = var("h3");
    Poly w1 = var("w1"), w2 = var("w2"), w3 = var("w3");
    std::vector<Poly> expected{w1 * w1 - h3 * w2, w1 * w2 - h3 * w3,
                               w1 * w3 - w2 * w2, w2 * w2 - h1 * h3,
                               h1 * w1 - w2 * w3, h1 * w2 - w3 * w3};
    CHECK(minors == expected);
}

TEST_CASE("minors of small matrices") {
    Poly one = Poly::constant(1), zero;
    CHECK(minors2({{one, zero}, {zero, one}}) == std::vector<Poly>{one});
    CHECK_THROWS_AS(minors2({{one, zero}}), domain_error);
    CHECK_THROWS_AS(minors2({{one}, {zero}}), domain_error);
    CHECK_THROWS_AS(minors2({{one, zero}, {zero}}), domain_error);
}

TEST_CASE("two presentations of the same ideal degree piece") {
    // 2 x 4 matrix whose minors again span the quadratic part of the
    // split-branch ideal.
    PolyMatrix two_rows{{var("w2"), var("w3"), var("w1"), var("h1")},
                        {var("w1"), var("w2"), var("h3"), var("w3")}};
    auto a = minors2(two_rows);
    CHECK(a.size() == 6);
    CHECK(span_equal(a, split_relations()));
    CHECK(span_equal(minors2(determinantal_matrix()), split_relations()));
}

TEST_CASE("span comparison") {
    Poly w1 = var("w1"), w2 = var("w2");
    std::vector<Poly> a{w1 * w1, w2};
    CHECK(span_equal(a, a));
    CHECK(span_equal(a, {w2, w1 * w1 + Poly::constant(2) * w2}));
    CHECK_FALSE(span_equal({w1 * w1}, {w2 * w2}));
    CHECK_FALSE(span_equal({w1}, {w1, w2}));
    CHECK(span_equal({}, {}));
}

TEST_CASE("span equality survives unimodular mixing") {
    std::mt19937 rng(2029);
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<Poly> base;
        for (int i = 0; i < 4; ++i) base.push_back(random_quadratic(rng));
        // Triangular mixing with unit diagonal is always invertible.
        std::vector<Poly> mixed;
        for (std::size_t i = 0; i < base.size(); ++i) {
            Poly p = base[i];
            if (i + 1 < base.size())
                p += Poly::constant(static_cast<long long>(rng() % 3)) *
                     base[i + 1];
            mixed.push_back(p);
        }
        CHECK(span_equal(base, base));
        CHECK(span_equal(base, mixed));
        CHECK(span_equal(mixed, base));
    }
}

TEST_CASE("jacobian ranks of the flat and deformed systems") {
    auto flat = minors2(smoothing_matrix(Fraction(0)));
    auto moved = minors2(smoothing_matrix(Fraction(1)));
    auto origin = point5(0, 0, 0, 0, 0);
    CHECK(jacobian_rank_at(flat, origin) == 0);
    CHECK(jacobian_rank_at(moved, origin) == 3);

    Poly linear = var("w1") + Poly::constant(2) * var("w2") -
                  Poly::constant(3) * var("w3");
    CHECK(jacobian_rank_at({linear}, point5(0, 0, 1, 1, 1)) == 1);

    CHECK_THROWS_AS(jacobian_rank_at(moved, point5(0, 0, 1, 0, 0)),
                    off_variety_error);
}

TEST_CASE("rank is a property of the span, not the presentation") {
    auto minors = minors2(determinantal_matrix());
    auto relations = split_relations();
    REQUIRE(span_equal(minors, relations));
    for (auto pt : {point5(1, 1, 1, 1, 1), point5(1, 1, -1, 1, -1),
                    point5(16, 1, 2, 4, 8)}) {
        long long r = jacobian_rank_at(minors, pt);
        CHECK(r == 3); // smooth points of the two-dimensional cone
        CHECK(r == jacobian_rank_at(relations, pt));
    }
}

TEST_CASE("mixed partial derivatives commute") {
    std::mt19937 rng(606);
    for (int iter = 0; iter < 30; ++iter) {
        Poly p = random_quadratic(rng) * random_quadratic(rng);
        CHECK(p.derivative("w1").derivative("h3") ==
              p.derivative("h3").derivative("w1"));
        CHECK(p.derivative("w2").derivative("w3") ==
              p.derivative("w3").derivative("w2"));
    }
}

TEST_CASE("the origin stays on every deformed fibre") {
    for (auto s : {Fraction(1), Fraction(1, 2), Fraction(-2), Fraction(7, 3)}) {
        auto minors = minors2(smoothing_matrix(s));
        auto origin = point5(0, 0, 0, 0, 0);
        for (const auto& p : minors) CHECK(p.evaluate(origin) == Fraction(0));
    }
}

TEST_CASE("smoothing certificate") {
    BuildingData bd = solve_building_data(4, {{1, {4, 0}}, {3, {0, 4}}});

    for (auto s : {Fraction(1), Fraction(1, 2), Fraction(-2)}) {
        SmoothingReport rep = smoothing_certificate(bd, s);
        INFO("s=", s.str());
        CHECK(rep.s == s);
        CHECK(rep.relations.size() == 6);
        CHECK(rep.origin_on_variety);
        CHECK(rep.rank_at_s == 3);
        CHECK(rep.rank_at_zero == 0);
        CHECK(rep.pass);
    }

    SmoothingReport flat = smoothing_certificate(bd, Fraction(0));
    CHECK(flat.origin_on_variety);
    CHECK(flat.rank_at_s == 0);
    CHECK_FALSE(flat.pass);

    BuildingData wrong = solve_building_data(4, {{1, {4, 4}}});
    CHECK_THROWS_AS(smoothing_certificate(wrong, Fraction(1)), domain_error);
}

} // TEST_SUITE
