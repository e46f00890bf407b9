#include <doctest.h>

#include <random>

#include "pqsurf/modular.hpp"
#include "pqsurf/pqsurface.hpp"

using namespace pqs;

namespace {

CoverSpec random_cover(std::mt19937& rng, long long n, int max_branch) {
    for (;;) {
        int b = 2 + static_cast<int>(rng() % (max_branch - 1));
        std::vector<long long> m;
        long long sum = 0;
        for (int j = 0; j + 1 < b; ++j) {
            long long u;
            do {
                u = 1 + static_cast<long long>(rng() % (n - 1));
            } while (!is_unit_mod(u, n));
            m.push_back(u);
            sum += u;
        }
        long long last = mod_reduce(-sum, n);
        if (last == 0 || !is_unit_mod(last, n)) continue;
        m.push_back(last);
        return CoverSpec(n, m);
    }
}

PQSpec quartic(long long twist, long long d,
               std::vector<long long> m2 = {1, 1, 1, 1}) {
    return PQSpec(CoverSpec(4, {1, 1, 1, 1}), CoverSpec(4, std::move(m2)),
                  twist, d);
}

} // namespace

TEST_SUITE("pqsurface") {

TEST_CASE("spec validation") {
    CoverSpec c4(4, {1, 1, 1, 1});
    CoverSpec c2(2, {1, 1, 1, 1, 1, 1});
    CHECK_THROWS_AS(PQSpec(c4, c2, 1, 2), validation_error);  // mixed orders
    CHECK_THROWS_AS(PQSpec(c4, c4, 2, 4), validation_error);  // twist not a unit
    CHECK_THROWS_AS(PQSpec(c4, c4, 1, 3), validation_error);  // 3 does not divide 4
    CHECK_THROWS_AS(PQSpec(c4, c4, 1, 0), validation_error);
    CHECK(PQSpec(c4, c4, 7, 4).twist == 3); // stored reduced
}

TEST_CASE("paired sum over the trivial subgroup is the product of totals") {
    EigenDimTable t1 = eigendims(CoverSpec(4, {1, 1, 1, 1}), 1); // dims (0,0,1,2)
    EigenDimTable t2 = eigendims(CoverSpec(4, {1, 1, 3, 3}), 1); // dims (0,1,1,1)
    CHECK(paired_sum(t1, t1, 1, 1) == 9);
    CHECK(paired_sum(t1, t2, 1, 3) == 9);
    CHECK(paired_sum(t2, t2, 1, 1) == 9);
    CHECK_THROWS_AS(paired_sum(t1, t1, 3, 1), domain_error); // 3 does not divide 4
    CHECK_THROWS_AS(
        paired_sum(t1, eigendims(CoverSpec(2, {1, 1}), 1), 1, 1),
        domain_error); // different deck groups
}

TEST_CASE("singular sets of the pinned quotients") {
    auto count = [](const SingularSet& s, long long n, long long q) {
        auto it = s.find(SingularityType(n, q));
        return it == s.end() ? 0LL : it->second;
    };

    SingularSet s1 = singularities(quartic(3, 4));
    CHECK(s1.size() == 1);
    CHECK(count(s1, 4, 3) == 16);

    SingularSet s2 = singularities(quartic(1, 4));
    CHECK(s2.size() == 1);
    CHECK(count(s2, 4, 1) == 16);

    SingularSet s3 = singularities(quartic(1, 4, {1, 1, 3, 3}));
    CHECK(s3.size() == 2);
    CHECK(count(s3, 4, 1) == 8);
    CHECK(count(s3, 4, 3) == 8);

    SingularSet sy = singularities(quartic(3, 2));
    CHECK(sy.size() == 1);
    CHECK(count(sy, 2, 1) == 16);

    CHECK(singularities(quartic(1, 1)).empty()); // plain product is smooth
}

TEST_CASE("invariants of the nodal-quotient surface") {
    SurfaceInvariants inv = invariants(quartic(3, 4));
    CHECK(inv.K2 == 8);
    CHECK(inv.e == 64);
    CHECK(inv.q == 0);
    CHECK(inv.p_g == 5);
    CHECK(inv.chi == 6);
    CHECK(inv.rdp_only);
    REQUIRE(inv.h0_2K.has_value());
    CHECK(*inv.h0_2K == 14);
    CHECK(inv.minimal_certified);
}

TEST_CASE("invariants of the untwisted quotient") {
    SurfaceInvariants inv = invariants(quartic(1, 4));
    CHECK(inv.K2 == -8);
    CHECK(inv.e == 32);
    CHECK(inv.q == 0);
    CHECK(inv.p_g == 1);
    CHECK(inv.chi == 2);
    CHECK_FALSE(inv.rdp_only); // 1/4 (1,1) points are not canonical
    CHECK_FALSE(inv.h0_2K.has_value());
}

TEST_CASE("invariants of the mixed-branch quotient") {
    SurfaceInvariants inv = invariants(quartic(1, 4, {1, 1, 3, 3}));
    CHECK(inv.K2 == 0);
    CHECK(inv.e == 48);
    CHECK(inv.q == 0);
    CHECK(inv.p_g == 3);
    CHECK(inv.chi == 4);
    CHECK_FALSE(inv.rdp_only);
}

TEST_CASE("invariants of the halved quotient") {
    SurfaceInvariants inv = invariants(quartic(3, 2));
    CHECK(inv.K2 == 16);
    CHECK(inv.e == 32);
    CHECK(inv.q == 2);
    CHECK(inv.p_g == 5);
    CHECK(inv.chi == 4);
    CHECK(inv.rdp_only); // nodes only
    REQUIRE(inv.h0_2K.has_value());
    CHECK(*inv.h0_2K == 20);
    CHECK(inv.minimal_certified);
}

TEST_CASE("exceptional loci of the pinned quotients") {
    ExceptionalData d1 = exceptional_data(quartic(3, 4));
    CHECK(d1.components == 48);
    REQUIRE(d1.tau_total.has_value());
    CHECK(*d1.tau_total == 48);

    ExceptionalData d2 = exceptional_data(quartic(1, 4));
    CHECK(d2.components == 16);
    CHECK_FALSE(d2.tau_total.has_value());

    ExceptionalData d3 = exceptional_data(quartic(1, 4, {1, 1, 3, 3}));
    CHECK(d3.components == 32);
    CHECK_FALSE(d3.tau_total.has_value());

    ExceptionalData dy = exceptional_data(quartic(3, 2));
    CHECK(dy.components == 16);
    REQUIRE(dy.tau_total.has_value());
    CHECK(*dy.tau_total == 16);
}

TEST_CASE("canonical class of the full quotient on the quadric") {
    auto [k1, k2] = canonical_cover_class(quartic(3, 4));
    CHECK(k1 == Fraction(1));
    CHECK(k2 == Fraction(1));

    PQSpec halves(CoverSpec(2, {1, 1}), CoverSpec(2, {1, 1}), 1, 2);
    auto [h1, h2] = canonical_cover_class(halves);
    CHECK(h1 == Fraction(-1));
    CHECK(h2 == Fraction(-1));

    CHECK_THROWS_AS(canonical_cover_class(quartic(3, 2)), domain_error);
}

TEST_CASE("canonical degree after smoothing some quarter points") {
    // Untwisted quotient: every smoothed 1/4 (1,1) point raises K^2 by one.
    for (long long k = 0; k <= 16; ++k) {
        SingularSet chosen{{SingularityType(4, 1), k}};
        CHECK(partial_smoothing_K2(quartic(1, 4), chosen) == -8 + k);
    }
    // Mixed-branch quotient: only eight of its points are smoothable.
    for (long long k = 2; k <= 8; ++k) {
        SingularSet chosen{{SingularityType(4, 1), k}};
        CHECK(partial_smoothing_K2(quartic(1, 4, {1, 1, 3, 3}), chosen) == k);
    }
}

TEST_CASE("partial smoothing rejects bad selections") {
    SingularSet too_many{{SingularityType(4, 1), 17}};
    CHECK_THROWS_AS(partial_smoothing_K2(quartic(1, 4), too_many), domain_error);

    SingularSet wrong_type{{SingularityType(4, 3), 1}};
    CHECK_THROWS_AS(partial_smoothing_K2(quartic(3, 4), wrong_type), domain_error);

    SingularSet node{{SingularityType(2, 1), 1}};
    CHECK_THROWS_AS(partial_smoothing_K2(quartic(3, 2), node), domain_error);

    SingularSet absent{{SingularityType(4, 1), 1}};
    CHECK_THROWS_AS(partial_smoothing_K2(quartic(3, 4), absent), domain_error);
}

TEST_CASE("chi, K^2 and e balance on random quotients") {
    std::mt19937 rng(424242);
    const long long orders[] = {2, 3, 4, 6};
    for (int iter = 0; iter < 50; ++iter) {
        long long n = orders[rng() % 4];
        CoverSpec c1 = random_cover(rng, n, 6);
        CoverSpec c2 = random_cover(rng, n, 6);
        long long twist;
        do {
            twist = 1 + static_cast<long long>(rng() % n);
        } while (!is_unit_mod(twist, n));
        std::vector<long long> divisors;
        for (long long d = 1; d <= n; ++d)
            if (n % d == 0) divisors.push_back(d);
        long long d = divisors[rng() % divisors.size()];

        PQSpec s(c1, c2, twist, d);
        SurfaceInvariants inv = invariants(s); // throws if the balance fails
        INFO("n=", n, " twist=", twist, " d=", d);
        CHECK(12 * inv.chi == inv.K2 + inv.e);
        CHECK(inv.chi == 1 - inv.q + inv.p_g);
    }
}

TEST_CASE("swapping the factors inverts the twist") {
    std::mt19937 rng(777);
    const long long orders[] = {2, 3, 4, 5, 6};
    for (int iter = 0; iter < 40; ++iter) {
        long long n = orders[rng() % 5];
        CoverSpec c1 = random_cover(rng, n, 5);
        CoverSpec c2 = random_cover(rng, n, 5);
        long long twist;
        do {
            twist = 1 + static_cast<long long>(rng() % n);
        } while (!is_unit_mod(twist, n));
        std::vector<long long> divisors;
        for (long long d = 1; d <= n; ++d)
            if (n % d == 0) divisors.push_back(d);
        long long d = divisors[rng() % divisors.size()];

        SurfaceInvariants a = invariants(PQSpec(c1, c2, twist, d));
        SurfaceInvariants b = invariants(PQSpec(c2, c1, mod_inverse(twist, n), d));
        INFO("n=", n, " twist=", twist, " d=", d);
        CHECK(a.K2 == b.K2);
        CHECK(a.e == b.e);
        CHECK(a.q == b.q);
        CHECK(a.p_g == b.p_g);
        CHECK(a.chi == b.chi);

        // Swapping the factors swaps the local coordinates at each fixed
        // point, so each germ 1/d(1,q) shows up as its dual 1/d(1,q').
        auto up_to_dual = [](const SingularSet& set) {
            std::map<std::pair<long long, long long>, long long> out;
            for (const auto& [t, count] : set)
                out[{t.n(), std::min(t.q(), t.dual_q())}] += count;
            return out;
        };
        CHECK(up_to_dual(singularities(PQSpec(c1, c2, twist, d))) ==
              up_to_dual(singularities(PQSpec(c2, c1, mod_inverse(twist, n), d))));
    }
}

} // TEST_SUITE
