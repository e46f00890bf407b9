#include "pqsurf/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "pqsurf/curvecover.hpp"
#include "pqsurf/hj.hpp"
#include "pqsurf/modular.hpp"
#include "pqsurf/pardini.hpp"
#include "pqsurf/pqsurface.hpp"
#include "pqsurf/scenario.hpp"
#include "pqsurf/smoothing.hpp"
#include "pqsurf/tangentcoh.hpp"

namespace pqs {
namespace {

struct Check {
    std::string id;
    std::string block;
    std::string expected;
    std::function<std::string()> compute;
};

std::string join_ll(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

std::string singular_set_string(const Scenario& sc) {
    auto sings = singularities(sc.spec());
    std::ostringstream os;
    bool first = true;
    for (const auto& [type, count] : sings) {
        if (!first) os << " + ";
        first = false;
        os << count << " x 1/" << type.n() << "(1," << type.q() << ")";
    }
    if (first) os << "none";
    return os.str();
}

std::string invariant_string(const Scenario& sc) {
    auto inv = invariants(sc.spec());
    std::ostringstream os;
    os << "K2=" << inv.K2 << " e=" << inv.e << " q=" << inv.q
       << " pg=" << inv.p_g << " chi=" << inv.chi;
    if (inv.rdp_only) {
        os << " h0_2K=" << *inv.h0_2K
           << " minimal=" << (inv.minimal_certified ? "yes" : "no");
    }
    return os.str();
}

std::string building_data_string(const Scenario& sc) {
    auto bd = *sc.building_data();
    std::ostringstream os;
    for (long long a = 1; a < bd.n; ++a) {
        if (a > 1) os << " ";
        os << "L" << a << "=" << bd.L.at(a).str();
    }
    return os.str();
}

/// Flattened carry table over unordered character pairs (a <= b,
/// including the trivial character) for the component rows m = 1, 3.
std::string epsilon_rows_string(long long n) {
    std::ostringstream os;
    bool first = true;
    for (long long m : {1LL, 3LL}) {
        if (!first) os << " ";
        first = false;
        os << "m" << m << ":";
        for (long long a = 0; a < n; ++a)
            for (long long b = a; b < n; ++b) os << epsilon(n, m, a, b);
    }
    return os.str();
}

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

std::string eigendim_sum_property() {
    std::mt19937 rng(20240817);
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        long long n = 2 + static_cast<long long>(rng() % 11);
        CoverSpec cover = random_cover(rng, n, 6);
        long long g = genus(cover);

        auto table0 = eigendims(cover, 0);
        if (table0.dims[0] != 1) return "invariant functions missing constant";
        for (long long a = 1; a < n; ++a)
            if (table0.dims[static_cast<std::size_t>(a)] != 0)
                return "nonzero function eigenspace off the trivial character";

        auto table1 = eigendims(cover, 1);
        if (table1.dims[0] != 0)
            return "invariant 1-forms should vanish on a rational quotient";
        long long sum1 = 0;
        for (long long d : table1.dims) sum1 += d;
        if (sum1 != g) {
            std::ostringstream os;
            os << "1-form eigendims sum " << sum1 << " != genus " << g;
            return os.str();
        }

        if (g >= 2) {
            auto table2 = eigendims(cover, 2);
            long long sum2 = 0;
            for (long long d : table2.dims) sum2 += d;
            if (sum2 != 3 * g - 3) {
                std::ostringstream os;
                os << "quadratic eigendims sum " << sum2 << " != " << 3 * g - 3;
                return os.str();
            }
        }
    }
    std::ostringstream os;
    os << "ok (" << trials << " covers)";
    return os.str();
}

std::string hj_roundtrip_property() {
    for (long long n = 2; n <= 200; ++n) {
        for (long long q = 1; q < n; ++q) {
            if (!is_unit_mod(q, n)) continue;
            auto [nn, qq] = hj_evaluate(hj_expand(n, q));
            if (nn != n || qq != q) {
                std::ostringstream os;
                os << "roundtrip failed at 1/" << n << "(1," << q << ")";
                return os.str();
            }
        }
    }
    return "ok (n <= 200)";
}

std::string noether_property() {
    std::mt19937 rng(5150);
    const int trials = 200;
    const std::vector<long long> orders{2, 3, 4, 6};
    for (int t = 0; t < trials; ++t) {
        long long n = orders[rng() % orders.size()];
        CoverSpec c1 = random_cover(rng, n, 6);
        CoverSpec c2 = random_cover(rng, n, 6);
        std::vector<long long> divisors;
        for (long long d = 1; d <= n; ++d)
            if (n % d == 0) divisors.push_back(d);
        long long d = divisors[rng() % divisors.size()];
        long long twist;
        do {
            twist = 1 + static_cast<long long>(rng() % n);
        } while (!is_unit_mod(twist, n));
        try {
            PQSpec spec(c1, c2, twist, d);
            invariants(spec); // throws if 12*chi != K2 + e
        } catch (const inconsistency_error& ex) {
            return std::string("inconsistent surface: ") + ex.what();
        } catch (const integrality_error& ex) {
            return std::string("non-integral invariant: ") + ex.what();
        }
    }
    std::ostringstream os;
    os << "ok (" << trials << " surfaces)";
    return os.str();
}

std::string relations_match(const std::string& name,
                            const std::vector<Poly>& expected) {
    Scenario sc = builtin_scenario(name);
    auto bd = *sc.building_data();
    auto syms = natural_deformation_symbols(sc, bd);
    auto rels = generate_relations(bd, syms);
    if (rels.size() != expected.size()) {
        std::ostringstream os;
        os << "got " << rels.size() << " relations, want " << expected.size();
        return os.str();
    }
    for (std::size_t i = 0; i < rels.size(); ++i) {
        if (!(rels[i].relation == expected[i])) {
            std::ostringstream os;
            os << "mismatch at (" << rels[i].a << "," << rels[i].b
               << "): " << rels[i].relation.str();
            return os.str();
        }
    }
    return "verbatim";
}

std::vector<Poly> split_branch_relations() {
    Poly w1 = Poly::variable("w1");
    Poly w2 = Poly::variable("w2");
    Poly w3 = Poly::variable("w3");
    Poly h1 = Poly::variable("h1");
    Poly h3 = Poly::variable("h3");
    return {w1 * w1 - h3 * w2, w1 * w2 - h3 * w3, w1 * w3 - h1 * h3,
            w2 * w2 - h1 * h3, w2 * w3 - h1 * w1, w3 * w3 - h1 * w2};
}

std::vector<Poly> mixed_branch_relations() {
    Poly w1 = Poly::variable("w1");
    Poly w2 = Poly::variable("w2");
    Poly w3 = Poly::variable("w3");
    Poly t1 = Poly::variable("g1") + Poly::variable("c1") * w1 +
              Poly::variable("c2") * w2;
    Poly t3 = Poly::variable("g3") + Poly::variable("d2") * w2 +
              Poly::variable("d3") * w3;
    return {w1 * w1 - t3 * w2, w1 * w2 - t3 * w3, w1 * w3 - t1 * t3,
            w2 * w2 - t1 * t3, w2 * w3 - t1 * w1, w3 * w3 - t1 * w2};
}

std::string partial_smoothing_string(const std::string& name,
                                     const std::vector<long long>& counts) {
    Scenario sc = builtin_scenario(name);
    PQSpec spec = sc.spec();
    SingularityType basic(4, 1);
    std::ostringstream os;
    bool first = true;
    for (long long count : counts) {
        if (!first) os << ",";
        first = false;
        SingularSet smoothed;
        if (count > 0) smoothed[basic] = count;
        os << partial_smoothing_K2(spec, smoothed);
    }
    return os.str();
}

std::vector<Check> make_checks() {
    std::vector<Check> checks;
    auto add = [&](std::string id, std::string block, std::string expected,
                   std::function<std::string()> fn) {
        checks.push_back({std::move(id), std::move(block), std::move(expected),
                          std::move(fn)});
    };

    // --- Continued fractions and singularity invariants ---
    add("hj-string-2-1", "hj", "[2]",
        [] { return join_ll(hj_expand(2, 1)); });
    add("hj-string-4-3", "hj", "[2,2,2]",
        [] { return join_ll(hj_expand(4, 3)); });
    add("hj-string-4-1", "hj", "[4]",
        [] { return join_ll(hj_expand(4, 1)); });
    add("hj-invariants-2-1", "hj", "h=0 e=3/2 B=3", [] {
        auto r = hj_resolve(SingularityType(2, 1));
        return "h=" + r.h.str() + " e=" + r.e.str() + " B=" + r.B.str();
    });
    add("hj-invariants-4-3", "hj", "h=0 e=15/4 B=15/2", [] {
        auto r = hj_resolve(SingularityType(4, 3));
        return "h=" + r.h.str() + " e=" + r.e.str() + " B=" + r.B.str();
    });
    add("hj-invariants-4-1", "hj", "h=-1 e=7/4 B=9/2", [] {
        auto r = hj_resolve(SingularityType(4, 1));
        return "h=" + r.h.str() + " e=" + r.e.str() + " B=" + r.B.str();
    });
    add("hj-roundtrip", "hj", "ok (n <= 200)", hj_roundtrip_property);

    // --- Covers of the line and their eigenspace tables ---
    add("genus-split-branch", "genus", "3", [] {
        Scenario sc = builtin_scenario("example1");
        return std::to_string(genus(CoverSpec(sc.n, sc.monodromy1)));
    });
    add("genus-mixed-branch", "genus", "3", [] {
        Scenario sc = builtin_scenario("example3");
        return std::to_string(genus(CoverSpec(sc.n, sc.monodromy2)));
    });
    add("eigendims-1-forms", "genus", "[0,0,1,2]", [] {
        return join_ll(eigendims(CoverSpec(4, {1, 1, 1, 1}), 1).dims);
    });
    add("eigendims-quadratic", "genus", "[1,2,3,0]", [] {
        return join_ll(eigendims(CoverSpec(4, {1, 1, 1, 1}), 2).dims);
    });
    add("eigendim-sums", "genus", "ok (200 covers)", eigendim_sum_property);

    // --- Numerical invariants of the four built-in surfaces ---
    add("invariants-example1", "invariants",
        "K2=8 e=64 q=0 pg=5 chi=6 h0_2K=14 minimal=yes",
        [] { return invariant_string(builtin_scenario("example1")); });
    add("invariants-example2", "invariants", "K2=-8 e=32 q=0 pg=1 chi=2",
        [] { return invariant_string(builtin_scenario("example2")); });
    add("invariants-example3", "invariants", "K2=0 e=48 q=0 pg=3 chi=4",
        [] { return invariant_string(builtin_scenario("example3")); });
    add("invariants-Y", "invariants",
        "K2=16 e=32 q=2 pg=5 chi=4 h0_2K=20 minimal=yes",
        [] { return invariant_string(builtin_scenario("Y")); });
    add("noether-identity", "invariants", "ok (200 surfaces)",
        noether_property);

    // --- Singular sets ---
    add("singular-set-example1", "singularities", "16 x 1/4(1,3)",
        [] { return singular_set_string(builtin_scenario("example1")); });
    add("singular-set-example2", "singularities", "16 x 1/4(1,1)",
        [] { return singular_set_string(builtin_scenario("example2")); });
    add("singular-set-example3", "singularities",
        "8 x 1/4(1,1) + 8 x 1/4(1,3)",
        [] { return singular_set_string(builtin_scenario("example3")); });
    add("singular-set-Y", "singularities", "16 x 1/2(1,1)",
        [] { return singular_set_string(builtin_scenario("Y")); });

    // --- Tangent sheaf cohomology and resolution ledgers ---
    add("h2-theta-example1", "tangent", "6", [] {
        return std::to_string(h2_theta(builtin_scenario("example1").spec()));
    });
    add("h2-theta-example2", "tangent", "14", [] {
        return std::to_string(h2_theta(builtin_scenario("example2").spec()));
    });
    add("h2-theta-Y", "tangent", "16", [] {
        return std::to_string(h2_theta(builtin_scenario("Y").spec()));
    });
    add("h2-theta-example3-obstructed", "tangent", "positive", [] {
        long long h2 = h2_theta(builtin_scenario("example3").spec());
        return h2 > 0 ? "positive" : std::to_string(h2);
    });
    add("ledger-example1", "tangent", "h1S=50 h2S=6 h1X=2", [] {
        auto led = resolution_ledger(builtin_scenario("example1").spec());
        std::ostringstream os;
        os << "h1S=" << led.h1S << " h2S=" << led.h2S << " h1X=" << led.h1X;
        return os.str();
    });
    add("ledger-Y", "tangent", "h1S=24 h2S=16 h1X=8", [] {
        auto led = resolution_ledger(builtin_scenario("Y").spec());
        std::ostringstream os;
        os << "h1S=" << led.h1S << " h2S=" << led.h2S << " h1X=" << led.h1X;
        return os.str();
    });
    add("esdef-example1", "tangent", "2", [] {
        return std::to_string(esdef_dim(builtin_scenario("example1").spec()));
    });
    add("esdef-Y", "tangent", "8", [] {
        return std::to_string(esdef_dim(builtin_scenario("Y").spec()));
    });

    // --- Obstruction map ranks and deformation space dimensions ---
    add("obstruction-Y", "obstruction", "rank=6 ker=10 coker=10 ext1=18",
        [] {
            Scenario sc = builtin_scenario("Y");
            auto r = ob_rank_and_ext1(build_ob_model(sc));
            std::ostringstream os;
            os << "rank=" << r.ob_rank << " ker=" << r.ker_ob
               << " coker=" << r.coker_ob << " ext1=" << r.ext1;
            return os.str();
        });
    add("obstruction-example1", "obstruction", "surjective ext1=44", [] {
        Scenario sc = builtin_scenario("example1");
        auto r = ob_rank_and_ext1(build_ob_model(sc));
        std::ostringstream os;
        os << (r.surjective ? "surjective" : "not surjective")
           << " ext1=" << r.ext1;
        return os.str();
    });
    add("ci-def-dim-2-4", "obstruction", "44",
        [] { return std::to_string(ci_def_dim(4, {2, 4})); });
    add("ext1-matches-ci-family", "obstruction", "equal", [] {
        Scenario sc = builtin_scenario("example1");
        auto r = ob_rank_and_ext1(build_ob_model(sc));
        long long family = ci_def_dim(4, {2, 4});
        if (r.ext1 == family) return std::string("equal");
        std::ostringstream os;
        os << "differ: " << r.ext1 << " vs " << family;
        return os.str();
    });
    add("ext1-matches-halved-family", "obstruction", "equal", [] {
        Scenario sc = builtin_scenario("Y");
        auto r = ob_rank_and_ext1(build_ob_model(sc));
        long long family = family_dims().def_Y_expected;
        if (r.ext1 == family) return std::string("equal");
        std::ostringstream os;
        os << "differ: " << r.ext1 << " vs " << family;
        return os.str();
    });
    add("family-dims", "obstruction",
        "polarization_h0=16 def_Y=18 todorov=9 todorov_total=12", [] {
            auto f = family_dims();
            std::ostringstream os;
            os << "polarization_h0=" << f.polarization_h0
               << " def_Y=" << f.def_Y_expected
               << " todorov=" << f.todorov_invariant
               << " todorov_total=" << f.todorov_total;
            return os.str();
        });
    add("independence-Y", "obstruction", "strict", [] {
        Scenario sc = builtin_scenario("Y");
        auto led = resolution_ledger(sc.spec());
        auto r = ob_rank_and_ext1(build_ob_model(sc));
        return independence_check(led.h1S, r.ext1) ? "strict" : "overlap";
    });
    add("independence-example1", "obstruction", "strict", [] {
        Scenario sc = builtin_scenario("example1");
        auto led = resolution_ledger(sc.spec());
        auto r = ob_rank_and_ext1(build_ob_model(sc));
        return independence_check(led.h1S, r.ext1) ? "strict" : "overlap";
    });

    // --- Abelian cover building data ---
    add("building-data-example1", "pardini", "L1=(1,1) L2=(2,2) L3=(3,3)",
        [] { return building_data_string(builtin_scenario("example1")); });
    add("building-data-example2", "pardini", "L1=(1,3) L2=(2,2) L3=(3,1)",
        [] { return building_data_string(builtin_scenario("example2")); });
    add("building-data-example3", "pardini", "L1=(2,2) L2=(2,2) L3=(2,2)",
        [] { return building_data_string(builtin_scenario("example3")); });
    add("epsilon-rows", "pardini", "m1:0000001111 m3:0000111100",
        [] { return epsilon_rows_string(4); });
    add("cover-relations-hold", "pardini",
        "example1=yes example2=yes example3=yes", [] {
            std::ostringstream os;
            bool first = true;
            for (const char* name : {"example1", "example2", "example3"}) {
                if (!first) os << " ";
                first = false;
                Scenario sc = builtin_scenario(name);
                bool ok = verify_cover_relations(*sc.building_data());
                os << name << "=" << (ok ? "yes" : "no");
            }
            return os.str();
        });
    add("natdef-totals", "pardini", "example1=50 example2=10 example3=22",
        [] {
            std::ostringstream os;
            bool first = true;
            for (const char* name : {"example1", "example2", "example3"}) {
                if (!first) os << " ";
                first = false;
                Scenario sc = builtin_scenario(name);
                auto rep = natdef_dim(*sc.building_data());
                os << name << "=" << rep.total;
            }
            return os.str();
        });
    add("canonical-eigenpieces-example1", "pardini", "[0,0,1,4] sum=5 pg=5",
        [] {
            Scenario sc = builtin_scenario("example1");
            auto pieces = canonical_eigenpieces(*sc.building_data());
            long long sum = 0;
            for (long long p : pieces) sum += p;
            std::ostringstream os;
            os << join_ll(pieces) << " sum=" << sum
               << " pg=" << invariants(sc.spec()).p_g;
            return os.str();
        });
    add("bidouble-2-2", "pardini", "K2=8 chi=4 pg=3 q=0", [] {
        auto inv = bidouble_invariants({2, 2}, {2, 2}, {2, 2});
        std::ostringstream os;
        os << "K2=" << inv.K2 << " chi=" << inv.chi << " pg=" << inv.p_g
           << " q=" << inv.q;
        return os.str();
    });

    // --- Deformed cover relations and the smoothing certificate ---
    add("relations-split-branch", "relations", "verbatim",
        [] { return relations_match("example2", split_branch_relations()); });
    add("relations-mixed-branch", "relations", "verbatim",
        [] { return relations_match("example3", mixed_branch_relations()); });
    add("determinantal-span", "relations", "span-equal", [] {
        auto minors = minors2(determinantal_matrix());
        auto expected = split_branch_relations();
        return span_equal(minors, expected) ? "span-equal" : "span-differs";
    });
    add("smoothing-certificate", "relations",
        "s=1:pass s=1/2:pass s=-2:pass s=0:rank0", [] {
            auto bd = *builtin_scenario("example2").building_data();
            std::ostringstream os;
            for (Fraction s : {Fraction(1), Fraction(1, 2), Fraction(-2)}) {
                auto rep = smoothing_certificate(bd, s);
                os << "s=" << s.str() << ":" << (rep.pass ? "pass" : "fail")
                   << " ";
            }
            auto degenerate = smoothing_certificate(bd, Fraction(0));
            os << "s=0:"
               << (!degenerate.pass && degenerate.rank_at_zero == 0
                       ? "rank0"
                       : "unexpected");
            return os.str();
        });
    add("partial-smoothing-example2", "relations", "8,7,6,5,4,3,2",
        [] {
            // keep k of the sixteen basic points for k = 0..6
            return partial_smoothing_string(
                "example2", {16, 15, 14, 13, 12, 11, 10});
        });
    add("partial-smoothing-example3", "relations", "2,3,4,5,6,7,8",
        [] {
            // smooth k of the eight basic points for k = 2..8
            return partial_smoothing_string("example3", {2, 3, 4, 5, 6, 7, 8});
        });

    return checks;
}

} // namespace

std::vector<CheckResult> run_paper_checks(const std::string& filter) {
    std::vector<CheckResult> out;
    for (const auto& check : make_checks()) {
        if (!filter.empty() &&
            check.id.find(filter) == std::string::npos &&
            check.block.find(filter) == std::string::npos)
            continue;
        CheckResult r;
        r.id = check.id;
        r.block = check.block;
        r.expected = check.expected;
        try {
            r.computed = check.compute();
        } catch (const std::exception& ex) {
            r.computed = std::string("error: ") + ex.what();
        }
        r.pass = (r.computed == r.expected);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace pqs
