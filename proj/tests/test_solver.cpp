#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "tanglecalc/solver.hpp"

using namespace tanglecalc;

namespace {
constexpr auto kMa = EquivalenceMode::mirror_agnostic;

ProcessiveSystem hin_system() {
    ProcessiveSystem sys;
    sys.products = {TwoBridgeLink(1, 1), TwoBridgeLink(3, 1), TwoBridgeLink(7, 3),
                    CrossingConstraint{7}};
    sys.mode = kMa;
    return sys;
}

bool has_solution(const ProcessiveResult& r, const RationalTangle& o, const RationalTangle& rec) {
    return std::any_of(r.solutions.begin(), r.solutions.end(), [&](const ProcessiveSolution& s) {
        return s.outside == o && s.recombinant == rec;
    });
}

}  // namespace

TEST_CASE("the Hin processive system has exactly the mirror pair of solutions") {
    ProcessiveResult r = solve_processive(hin_system());
    REQUIRE(r.solutions.size() == 2);
    CHECK(has_solution(r, RationalTangle(1, 2), RationalTangle::integral(-2)));
    CHECK(has_solution(r, RationalTangle(-1, 2), RationalTangle::integral(2)));
    for (const auto& s : r.solutions) CHECK(s.parental == RationalTangle::integral(0));

    // Deterministic ordering: positive numerator first.
    CHECK(r.solutions[0].outside == RationalTangle(1, 2));

    bool integral_rule = false;
    for (const auto& note : r.provenance)
        if (note.rule == "integral-recombinant") integral_rule = true;
    CHECK(integral_rule);
}

TEST_CASE("solutions replay onto every product") {
    ProcessiveSystem sys = hin_system();
    ProcessiveResult r = solve_processive(sys);
    for (const auto& s : r.solutions) {
        for (std::size_t i = 0; i < sys.products.size(); ++i) {
            TwoBridgeLink closed = closure_sum(
                s.outside,
                RationalTangle::integral(static_cast<Int>(i) * s.recombinant.fraction.num));
            if (const auto* k = std::get_if<TwoBridgeLink>(&sys.products[i]))
                REQUIRE(equivalent(closed, *k, sys.mode));
            else
                REQUIRE(crossing_number(closed) ==
                        std::get<CrossingConstraint>(sys.products[i]).crossings);
        }
    }
}

TEST_CASE("the two candidates discarded by hand are rejected with the right verdicts") {
    ProcessiveResult r = solve_processive(hin_system());

    // O = T(-1/4), R = T(1): the third-round product is the 6-crossing class
    // b(11,3) ~ b(11,4), inconsistent with the 7-crossing constraint.
    bool stevedore = false;
    for (const auto& rej : r.rejections) {
        if (rej.outside == RationalTangle(-1, 4) && rej.recombinant == RationalTangle::integral(1)) {
            stevedore = true;
            CHECK(rej.round == 3);
            CHECK(equivalent(rej.computed, TwoBridgeLink(11, 3), kMa));
            CHECK(equivalent(rej.computed, TwoBridgeLink(11, 4), kMa));
            CHECK(rej.reason.find("crossing number 6") != std::string::npos);
        }
    }
    CHECK(stevedore);

    // O = T(-1), R = T(4): the second round closes onto b(7,8) ~ b(7,1).
    bool torus7 = false;
    for (const auto& rej : r.rejections) {
        if (rej.outside == RationalTangle::integral(-1) &&
            rej.recombinant == RationalTangle::integral(4)) {
            torus7 = true;
            CHECK(rej.round == 2);
            CHECK(equivalent(rej.computed, TwoBridgeLink(7, 1), kMa));
            CHECK(equivalent(rej.computed, schubert_normalize(7, 8, kMa), kMa));
        }
    }
    CHECK(torus7);
}

TEST_CASE("the first-parameter equations have exactly four abstract solutions") {
    // |u + k| = 3 and |u + 2k| = 7, solved by exhaustive scan. With the
    // round-0 equation |u| = 1 only the (+-1, -+4) pairs survive.
    std::set<std::pair<Int, Int>> uk;
    for (Int u = -50; u <= 50; ++u)
        for (Int k = -50; k <= 50; ++k) {
            Int a = u + k, b = u + 2 * k;
            if ((a < 0 ? -a : a) == 3 && (b < 0 ? -b : b) == 7) uk.insert({u, k});
        }
    CHECK(uk == std::set<std::pair<Int, Int>>{{1, -4}, {-1, 4}, {13, -10}, {-13, 10}});
}

TEST_CASE("prefiltered and exhaustive searches agree within bounds <= 12") {
    std::vector<std::vector<ProcessiveProduct>> systems = {
        {TwoBridgeLink(1, 1), TwoBridgeLink(3, 1), TwoBridgeLink(7, 3), CrossingConstraint{7}},
        {TwoBridgeLink(1, 1), TwoBridgeLink(5, 2), TwoBridgeLink(11, 3)},
        {TwoBridgeLink(1, 1), TwoBridgeLink(2, 1), TwoBridgeLink(5, 1)},
    };
    for (const auto& products : systems) {
        ProcessiveSystem sys;
        sys.products = products;
        sys.mode = kMa;
        sys.bounds = {12, 12, 12};
        ProcessiveResult fast = solve_processive(sys, true);
        ProcessiveResult full = solve_processive(sys, false);
        REQUIRE(fast.solutions == full.solutions);
    }
}

TEST_CASE("a second processive system resolves to its generating pair") {
    // Built from O = T(-1/3), R = T(2): closures b(5,2), b(11,3).
    ProcessiveSystem sys;
    sys.products = {TwoBridgeLink(1, 1), TwoBridgeLink(5, 2), TwoBridgeLink(11, 3)};
    sys.mode = kMa;
    ProcessiveResult r = solve_processive(sys);
    REQUIRE(r.solutions.size() == 2);
    CHECK(has_solution(r, RationalTangle(-1, 3), RationalTangle::integral(2)));
    CHECK(has_solution(r, RationalTangle(1, 3), RationalTangle::integral(-2)));
}

TEST_CASE("the standard-sites chain unknot, trefoil, figure-eight, 5_2") {
    // A single positive half-twist per round: products b(1,1), b(3,1),
    // b(5,2), b(7,3). Which mirror representative carries which sign is a
    // convention; the solutions form the expected pair.
    ProcessiveSystem sys;
    sys.products = {TwoBridgeLink(1, 1), TwoBridgeLink(3, 1), TwoBridgeLink(5, 2),
                    TwoBridgeLink(7, 3)};
    sys.mode = kMa;
    ProcessiveResult r = solve_processive(sys);
    REQUIRE(r.solutions.size() == 2);
    CHECK(has_solution(r, RationalTangle(1, 2), RationalTangle::integral(1)));
    CHECK(has_solution(r, RationalTangle(-1, 2), RationalTangle::integral(-1)));
}

TEST_CASE("systems with link products resolve too") {
    // Built from O = T(1), R = T(1): closures b(2,1) (Hopf link), b(3,1).
    ProcessiveSystem sys;
    sys.products = {TwoBridgeLink(1, 1), TwoBridgeLink(2, 1), TwoBridgeLink(3, 1)};
    sys.mode = kMa;
    sys.bounds = {16, 16, 16};
    ProcessiveResult r = solve_processive(sys);
    REQUIRE(r.solutions.size() == 2);
    CHECK(has_solution(r, RationalTangle::integral(1), RationalTangle::integral(1)));
    CHECK(has_solution(r, RationalTangle::integral(-1), RationalTangle::integral(-1)));
}

TEST_CASE("solutions come in mirror pairs under mirror-agnostic products") {
    for (const auto& products : std::vector<std::vector<ProcessiveProduct>>{
             {TwoBridgeLink(1, 1), TwoBridgeLink(3, 1), TwoBridgeLink(7, 3)},
             {TwoBridgeLink(1, 1), TwoBridgeLink(5, 2), TwoBridgeLink(11, 3)}}) {
        ProcessiveSystem sys;
        sys.products = products;
        sys.mode = kMa;
        sys.bounds = {16, 16, 16};
        ProcessiveResult r = solve_processive(sys);
        for (const auto& s : r.solutions) {
            CAPTURE(s.outside.str(), s.recombinant.str());
            REQUIRE(has_solution(r, mirror(s.outside), mirror(s.recombinant)));
        }
    }
}

TEST_CASE("system validation") {
    ProcessiveSystem sys;
    CHECK_THROWS_AS(solve_processive(sys), std::invalid_argument);
    sys.products = {TwoBridgeLink(1, 1), TwoBridgeLink(3, 1)};
    CHECK_THROWS_AS(solve_processive(sys), std::invalid_argument);
    sys.products = {TwoBridgeLink(3, 1), TwoBridgeLink(3, 1), TwoBridgeLink(7, 3)};
    CHECK_THROWS_AS(solve_processive(sys), std::invalid_argument);
}

TEST_CASE("predict_product") {
    CHECK(equivalent(predict_product(RationalTangle(-1, 2), RationalTangle::integral(2), 3, kMa),
                     TwoBridgeLink(11, 5), kMa));
    CHECK(equivalent(predict_product(RationalTangle(-1, 2), RationalTangle::integral(2), 1, kMa),
                     TwoBridgeLink(3, 1), kMa));
    CHECK(predict_product(RationalTangle(7, 5), RationalTangle::integral(0), 1, kMa) ==
          closure_rational(RationalTangle(7, 5), kMa));
    CHECK_THROWS_AS(predict_product(RationalTangle(1, 2), RationalTangle(1, 2), 2, kMa),
                    std::invalid_argument);
}

TEST_CASE("chirality filter") {
    ProcessiveSystem sys = hin_system();
    ProcessiveResult r = solve_processive(sys);

    auto left = chirality_filter(r.solutions, sys, {1, Handedness::left});
    REQUIRE(left.size() == 1);
    CHECK(left[0].outside == RationalTangle(-1, 2));
    CHECK(left[0].recombinant == RationalTangle::integral(2));

    auto right = chirality_filter(r.solutions, sys, {1, Handedness::right});
    REQUIRE(right.size() == 1);
    CHECK(right[0].outside == RationalTangle(1, 2));

    CHECK(chirality_filter({}, sys, {1, Handedness::left}).empty());
    CHECK_THROWS_AS(chirality_filter(r.solutions, sys, {9, Handedness::left}),
                    std::invalid_argument);
    // Round 2 closes onto a class with no configured handedness.
    CHECK_THROWS_AS(chirality_filter(r.solutions, sys, {2, Handedness::left}),
                    std::invalid_argument);
}

TEST_CASE("the Hin distributive system") {
    DistributiveSystem sys{TwoBridgeLink(3, 1),
                           CompositeKnot({TwoBridgeLink(3, 1), TwoBridgeLink(3, 1)}),
                           RationalTangle(0, 1),
                           RationalTangle::integral(2),
                           kMa,
                           {}};
    SolutionSet out = solve_distributive(sys);

    CHECK(out.rational.empty());
    CHECK(out.rational_verdict.rule == "rational-excluded");

    CHECK(out.prime.empty());
    CHECK(out.prime_verdict.rule == "prime-excluded-distance");
    CHECK(out.prime_verdict.note.find("d(P,R) = 2") != std::string::npos);

    REQUIRE(out.locally_knotted.size() == 4);
    std::set<std::string> cores;
    for (const auto& s : out.locally_knotted) {
        cores.insert(s.core.str());
        CHECK(equivalent(s.insert, TwoBridgeLink(3, 1), kMa));
        // Soundness: the core satisfies both reduced equations.
        CHECK(equivalent(closure_sum(s.core, sys.parental), TwoBridgeLink(1, 1), kMa));
        CHECK(equivalent(closure_sum(s.core, sys.recombinant), TwoBridgeLink(3, 1), kMa));
    }
    CHECK(cores == std::set<std::string>{"T(1)", "T(-1/2)"});

    // Each core appears with both placements.
    for (const auto& core : {RationalTangle::integral(1), RationalTangle(-1, 2)})
        for (auto placement : {ArcPlacement::first_strand, ArcPlacement::second_strand}) {
            bool found = false;
            for (const auto& s : out.locally_knotted)
                if (s.core == core && s.placement == placement) found = true;
            CAPTURE(core.str(), placement_str(placement));
            REQUIRE(found);
        }

    bool core_rational_rule = false;
    for (const auto& n : out.notes)
        if (n.rule == "core-rational") core_rational_rule = true;
    CHECK(core_rational_rule);
}

TEST_CASE("distributive system with no matching factor") {
    DistributiveSystem sys{TwoBridgeLink(5, 1),
                           CompositeKnot({TwoBridgeLink(3, 1), TwoBridgeLink(3, 1)}),
                           RationalTangle(0, 1),
                           RationalTangle::integral(2),
                           kMa,
                           {}};
    SolutionSet out = solve_distributive(sys);
    CHECK(out.rational.empty());
    CHECK(out.prime.empty());
    CHECK(out.locally_knotted.empty());
    bool noted = false;
    for (const auto& n : out.notes)
        if (n.rule == "factor-match-required") noted = true;
    CHECK(noted);
}

TEST_CASE("distributive system at distance one lists Montesinos candidates") {
    DistributiveSystem sys{TwoBridgeLink(4, 1),
                           CompositeKnot({TwoBridgeLink(2, 1), TwoBridgeLink(2, 1)}),
                           RationalTangle(0, 1),
                           RationalTangle::integral(1),
                           kMa,
                           {}};
    REQUIRE(distance(sys.parental, sys.recombinant) == 1);
    SolutionSet out = solve_distributive(sys);
    CHECK(out.prime_unresolved);
    CHECK(out.prime_verdict.rule == "prime-montesinos-family");
    bool m0 = false;
    for (const auto& c : out.prime)
        if (c.m == 0 && c.raw_p == 4) m0 = true;
    CHECK(m0);
}

TEST_CASE("the excised reduced system matches the hand computation") {
    // |u| = 1 and |u + 2v| = 3 have exactly the cores T(1) and T(-1/2).
    std::set<std::string> cores;
    for (Int v = 0; v <= 64; ++v)
        for (Int u = -64; u <= 64; ++u) {
            if (v == 0 && u != 1) continue;
            if (u == 0 && v != 1) continue;
            if (u != 0 && v != 0 && std::gcd(u < 0 ? -u : u, v) != 1) continue;
            RationalTangle core(u, v);
            if (!equivalent(closure_sum(core, RationalTangle(0, 1)), TwoBridgeLink(1, 1), kMa))
                continue;
            if (!equivalent(closure_sum(core, RationalTangle::integral(2)), TwoBridgeLink(3, 1),
                            kMa))
                continue;
            cores.insert(core.str());
        }
    CHECK(cores == std::set<std::string>{"T(1)", "T(-1/2)"});
}

TEST_CASE("montesinos distance-one family") {
    auto family = montesinos_distance_one_family(3, 1, 3, 1, -5, 5);
    REQUIRE(family.size() == 11);
    for (const auto& c : family) {
        CHECK(c.raw_p == 6 + 9 * c.m);
        CHECK(c.raw_p != 3);
    }
    // m = 0 gives the b(6,1) class.
    CHECK(equivalent(family[5].member, TwoBridgeLink(6, 1), kMa));
    CHECK(family[5].raw_p == 6);

    auto small = montesinos_distance_one_family(2, 1, 2, 1, 0, 0);
    REQUIRE(small.size() == 1);
    CHECK(small[0].raw_p == 4);

    CHECK_THROWS_AS(montesinos_distance_one_family(4, 2, 3, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(montesinos_distance_one_family(1, 1, 3, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(montesinos_distance_one_family(3, 1, 3, 1, 5, -5), std::invalid_argument);
}

TEST_CASE("family members equal the closure of the corresponding sum") {
    // Dual route: the theorem formula against the closure formula.
    for (Int r : {2, 3, 5})
        for (Int s = 1; s < r; ++s) {
            if (std::gcd(r, s) != 1) continue;
            for (Int t : {2, 3, 4})
                for (Int u = 1; u < t; ++u) {
                    if (std::gcd(t, u) != 1) continue;
                    montesinos_distance_one_family_visit(
                        r, s, t, u, -4, 4, [&](Int m, Int, TwoBridgeLink member) {
                            RationalTangle left(s, r);
                            RationalTangle right(u + t * m, t);
                            CAPTURE(r, s, t, u, m);
                            REQUIRE(member == closure_sum(left, right));
                        });
                }
        }
}
