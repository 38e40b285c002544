#include <doctest.h>

#include "helpers.hpp"
#include "symmset/levels.hpp"

using namespace symmset;
using namespace symmset::testing;

TEST_CASE("skeleton_symset: mass-filtered view of graphs") {
    auto sk1 = skeleton_symset(graph_symset(), 1);
    CHECK(sk1->name() == "sk_1(graph)");
    // mass <= 2 graphs on 3 points: edgeless plus the three 2-block complete bipartite ones
    CHECK(sk1->structure_count(FinSet(3)) == 4);
    // on 4 points: edgeless plus the seven complete bipartite splittings
    CHECK(sk1->structure_count(FinSet(4)) == 8);

    for (std::uint64_t i = 0; i < sk1->structure_count(FinSet(4)); ++i) {
        Structure x = sk1->structure_at(FinSet(4), i);
        CHECK(x.owner == "sk_1(graph)");
        CHECK(mass(*sk1, x) <= 2);
        for (int p = 0; p < 4; ++p)
            CHECK(mass(*sk1, sk1->pullback(x, delta(FinSet(4), p))) <= 2);
    }

    CHECK_THROWS_AS(sk1->from_payload(FinSet(4), EdgeSet{complete_graph_edges(4)}), DomainError);
}

TEST_CASE("is_l_skeletal: bundled instances") {
    for (int l = 1; l <= 3; ++l) {
        CAPTURE(l);
        CHECK(is_l_skeletal(*eq_exact_symset(l), l, 6));
        CHECK(is_l_skeletal(*eq_leq_symset(l), l, 6));
    }
    CHECK(is_l_skeletal(*discrete_symset(FinSet(3)), 0, 5));
    CHECK_FALSE(is_l_skeletal(*graph_symset(), 1, 4));  // witness: K_3
    CHECK_FALSE(is_l_skeletal(*graph_symset(), 2, 4));  // witness: K_4
    CHECK(is_l_skeletal(*graph_symset(), 3, 4));
}

TEST_CASE("skeleton_membership") {
    auto g = graph_symset();
    Structure x = graph_on(7, mass4_graph_edges());
    CHECK(skeleton_membership(*g, 3, x));
    CHECK_FALSE(skeleton_membership(*g, 2, x));
    CHECK(skeleton_membership(*g, 6, x));
}

TEST_CASE("coskeletality: discrete two-point instance") {
    auto d = discrete_symset(FinSet(2));
    CoskeletalityCheck fail = check_coskeletality(d, 0, 3);
    CHECK_FALSE(fail.passed);
    CHECK(fail.failed_k == 1);
    CHECK(fail.counterexample_fillers == 0);

    CHECK(is_l_coskeletal(d, 1, 3));
}

TEST_CASE("coskeletality: representable sets are 0-coskeletal") {
    CHECK(is_l_coskeletal(representable_symset(FinSet(2)), 0, 3));
}

TEST_CASE("coskeletality: the carrier guard rejects oversized enumerations") {
    // k = 3 needs all graphs on 4 points (64 > 8)
    CHECK_THROWS_AS(check_coskeletality(graph_symset(), 1, 3, /*carrier_guard=*/8), DomainError);
}

TEST_CASE("coskeletality: Eq is 2- but not 1-coskeletal") {
    auto e = eq_symset();
    CoskeletalityCheck fail = check_coskeletality(e, 1, 4);
    CHECK_FALSE(fail.passed);
    CHECK(fail.failed_k == 2);
    REQUIRE(fail.counterexample.has_value());
    CHECK(fail.counterexample_fillers == 0);

    CHECK(is_l_coskeletal(e, 2, 4));
}

TEST_CASE("lower_bound_cycle: explicit constructions") {
    Cycle c1 = lower_bound_cycle(1);
    CHECK(c1.k() == 2);
    CHECK(c1.P.size == 3);
    for (const Structure& f : c1.faces)
        CHECK(f == eq_exact_symset(1)->from_payload(FinSet(2), Blocks{{0, 1}}));

    Cycle c2 = lower_bound_cycle(2);
    CHECK(c2.k() == 4);
    CHECK(c2.P.size == 5);
    // c_0 lives on {1,2,3,4} and joins 4 with 1 (positions 3 and 0)
    CHECK(c2.faces[0] ==
          eq_exact_symset(2)->from_payload(FinSet(4), Blocks{{0, 1, 2, 0}}));

    Cycle c3 = lower_bound_cycle(3);
    CHECK(c3.k() == 5);
    CHECK(c3.P.size == 6);
    CHECK(c3.P.labels == std::vector<std::string>{"a1", "a2", "a3", "b1", "b2", "b3"});
    // c_{a1} groups {a2,a3} and keeps b1,b2,b3 separate
    CHECK(c3.faces[0] ==
          eq_exact_symset(3)->from_payload(FinSet(5), Blocks{{0, 0, 1, 2, 3}}));

    CHECK_THROWS_AS(lower_bound_cycle(0), DomainError);
}

TEST_CASE("verify_lower_bound: certificates for l = 1, 2, 3") {
    LowerBoundCertificate c1 = verify_lower_bound(1);
    CHECK(c1.k == 2);
    CHECK(c1.search_size == 4);
    CHECK(c1.filler_count == 0);
    CHECK_FALSE(c1.reduction_graph_propagative);
    CHECK(c1.passed());

    LowerBoundCertificate c2 = verify_lower_bound(2);
    CHECK(c2.k == 4);
    CHECK(c2.search_size == 26);  // S(5,3) + 1
    CHECK(c2.passed());

    LowerBoundCertificate c3 = verify_lower_bound(3);
    CHECK(c3.k == 5);
    CHECK(c3.search_size == 66);  // S(6,4) + 1
    CHECK(c3.passed());
}

TEST_CASE("claimed_aufhebung closed form") {
    CHECK(claimed_aufhebung(0) == 1);
    CHECK(claimed_aufhebung(1) == 2);
    CHECK(claimed_aufhebung(2) == 4);
    CHECK(claimed_aufhebung(3) == 5);
    CHECK(claimed_aufhebung(5) == 9);
}

TEST_CASE("verify_aufhebung: level 1 with exhaustive checks") {
    AufhebungReport report = verify_aufhebung(1);
    CHECK(report.claimed_value == 2);
    CHECK(report.k_bound == 4);
    CHECK(report.lower_bound.passed());
    CHECK(report.passed());
    REQUIRE(report.upper_bound_checks.size() == 6);
    for (const auto& check : report.upper_bound_checks) {
        CHECK(check.mode == "exhaustive");
        CHECK(check.all_uniquely_filled);
        CHECK(check.cycles_tested > 0);
    }
}

TEST_CASE("verify_aufhebung: level 2 under light guards") {
    AufhebungGuards guards;
    guards.graph_carrier_max = 6;
    guards.eq_carrier_max = 7;
    guards.randomized_cycles_per_check = 6;
    AufhebungReport report = verify_aufhebung(2, /*k_bound=*/5, guards);
    CHECK(report.claimed_value == 4);
    CHECK(report.passed());
    bool randomized_seen = false;
    for (const auto& check : report.upper_bound_checks)
        randomized_seen |= check.mode == "randomized";
    CHECK(randomized_seen);
}

TEST_CASE("verify_aufhebung: guards skip oversized carriers visibly") {
    AufhebungGuards guards;
    guards.graph_carrier_max = 4;
    guards.eq_carrier_max = 7;
    guards.randomized_cycles_per_check = 4;
    AufhebungReport report = verify_aufhebung(2, /*k_bound=*/6, guards);
    bool skipped = false;
    for (const auto& check : report.upper_bound_checks)
        if (check.mode == "skipped") {
            skipped = true;
            CHECK(check.cycles_tested == 0);
        }
    CHECK(skipped);
    CHECK(report.passed());
}
