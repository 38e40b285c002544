#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "symmset/cycles.hpp"
#include "symmset/dot.hpp"
#include "symmset/levels.hpp"

using namespace symmset;
using namespace symmset::testing;

namespace {

Cycle mass4_cycle() { return restrict_to_cycle(graph_symset(), graph_on(7, mass4_graph_edges())); }

}  // namespace

TEST_CASE("restrict_to_cycle always validates") {
    auto g = graph_symset();
    Structure f = graph_on(5, {{0, 1}, {1, 2}, {3, 4}});
    Cycle c = restrict_to_cycle(g, f);
    CHECK(c.k() == 4);
    // re-validating the same faces succeeds
    CHECK_NOTHROW(validate_cycle(g, c.P, c.faces));

    // a 1-cycle: no cycle equations to check
    Structure tiny = graph_on(2, {{0, 1}});
    CHECK(restrict_to_cycle(g, tiny).k() == 1);
}

TEST_CASE("validate_cycle rejects perturbed faces and reports the pair") {
    auto e = eq_symset();
    Structure f = partition_on(e, 4, {{0, 1}, {2, 3}});
    Cycle c = restrict_to_cycle(e, f);

    int violations = 0;
    auto faces3 = e->enumerate_structures(FinSet(3));
    for (const Structure& replacement : faces3) {
        if (replacement == c.faces[0]) continue;
        auto faces = c.faces;
        faces[0] = replacement;
        try {
            validate_cycle(e, c.P, faces);
        } catch (const DomainError& err) {
            ++violations;
            CHECK(std::string(err.what()).find("cycle equation violated") != std::string::npos);
        }
    }
    CHECK(violations > 0);
}

TEST_CASE("brute_force_fillers finds the generator of a restriction") {
    auto g = graph_symset();
    Structure f = graph_on(5, {{0, 1}, {0, 2}, {3, 4}});
    auto fillers = brute_force_fillers(restrict_to_cycle(g, f));
    bool contains = false;
    for (const Structure& x : fillers) contains |= (x == f);
    CHECK(contains);

    CHECK_THROWS_AS(brute_force_fillers(mass4_cycle(), /*guard=*/1024), DomainError);
}

TEST_CASE("cycle_stats: worked examples") {
    CycleStats s = cycle_stats(mass4_cycle());
    CHECK(s.n == 3);
    CHECK(s.d == 3);
    CHECK(s.upper == std::vector<int>{0, 1, 2, 3, 5, 6});
    CHECK(s.lower == std::vector<int>{4});

    CycleStats lb2 = cycle_stats(lower_bound_cycle(2));
    CHECK(lb2.n == 2);
    CHECK(lb2.d == 2);
    CHECK(lb2.upper.size() == 5);
    CHECK(lb2.lower.empty());

    // restriction of a non-degenerate structure: every face keeps full mass
    auto g = graph_symset();
    CycleStats k5 = cycle_stats(restrict_to_cycle(g, graph_on(5, complete_graph_edges(5))));
    CHECK(k5.n == 3);
    CHECK(k5.upper.size() == 5);
}

TEST_CASE("reduction_graph: the 6-cycle's graph") {
    ReductionGraph rg = reduction_graph(mass4_cycle());
    CHECK(rg.upper == std::vector<int>{0, 1, 2, 3, 5, 6});
    CHECK(rg.lower == std::vector<int>{4});

    // mutual edges join exactly the points in different congruence classes
    std::vector<std::pair<int, int>> expected_mutual{{0, 1}, {0, 2}, {0, 3}, {0, 6},
                                                     {1, 3}, {1, 5}, {1, 6}, {2, 3},
                                                     {2, 5}, {2, 6}, {3, 5}, {5, 6}};
    CHECK(rg.upper_edges() == expected_mutual);

    // the low-mass vertex only receives edges
    for (int p = 0; p < 7; ++p) {
        CHECK_FALSE(rg.has_edge(4, p));
        if (p != 4) CHECK(rg.has_edge(p, 4));
    }

    CHECK(is_propagative(rg.upper_subgraph));
}

TEST_CASE("reduction_graph: lower-bound cycles match the paper's shapes") {
    // l=1: three isolated vertices
    ReductionGraph r1 = reduction_graph(lower_bound_cycle(1));
    CHECK(r1.edges.empty());
    CHECK(r1.upper.size() == 3);
    CHECK_FALSE(is_propagative(r1.upper_subgraph));

    // l=2: the pentagon
    ReductionGraph r2 = reduction_graph(lower_bound_cycle(2));
    CHECK(r2.upper_edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    CHECK_FALSE(is_propagative(r2.upper_subgraph));

    // l=3: two disjoint triangles
    ReductionGraph r3 = reduction_graph(lower_bound_cycle(3));
    CHECK(r3.upper_edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CHECK_FALSE(is_propagative(r3.upper_subgraph));
}

TEST_CASE("reduction_graph: 1-cycles have no edges") {
    auto d = discrete_symset(FinSet(2));
    std::vector<Structure> faces{d->from_payload(FinSet(1), Atom{0}),
                                 d->from_payload(FinSet(1), Atom{1})};
    Cycle c = validate_cycle(d, FinSet(2), faces);
    CHECK(reduction_graph(c).edges.empty());
    CHECK(brute_force_fillers(c).empty());
    CHECK(propagate_filler(c, d->from_payload(FinSet(2), Atom{0}), {0}) == std::vector<int>{0});
}

TEST_CASE("seed_filler: every upper edge of the 6-cycle reproduces the graph") {
    Cycle c = mass4_cycle();
    Structure x = graph_on(7, mass4_graph_edges());
    ReductionGraph rg = reduction_graph(c);
    for (const auto& [p, q] : rg.upper_edges()) {
        CHECK(seed_filler(c, p, q) == x);
        CHECK(seed_filler(c, q, p) == x);
    }
    // pairs that are not edges of the upper graph are rejected
    CHECK_THROWS_AS(seed_filler(c, 0, 5), DomainError);
    CHECK_THROWS_AS(seed_filler(c, 0, 4), DomainError);
}

TEST_CASE("seed_filler: unique extension clause on a degenerate restriction") {
    auto e = eq_symset();
    Structure f = partition_on(e, 5, {{0, 1, 2}, {3, 4}});
    Cycle c = restrict_to_cycle(e, f);
    CycleStats s = cycle_stats(c);
    ReductionGraph rg = reduction_graph(c);
    auto edges = rg.upper_edges();
    REQUIRE(!edges.empty());
    CHECK(seed_filler(c, edges.front().first, edges.front().second) == f);
    CHECK(s.n + 1 == 2);
}

TEST_CASE("lower-bound pentagon: seed exists but propagation stalls") {
    Cycle c = lower_bound_cycle(2);
    Structure f = seed_filler(c, 0, 1);
    auto m = c.symset;
    CHECK(m->pullback(f, delta(c.P, 0)) == c.faces[0]);
    CHECK(m->pullback(f, delta(c.P, 1)) == c.faces[1]);
    CHECK(mass(*m, f) == 3);

    std::vector<int> closure = propagate_filler(c, f, {0, 1});
    CHECK(closure == std::vector<int>{0, 1});
    CHECK(brute_force_fillers(c).empty());
}

TEST_CASE("propagate_filler: closure is order independent and a least fixpoint") {
    Cycle c = mass4_cycle();
    ReductionGraph rg = reduction_graph(c);
    Structure x = graph_on(7, mass4_graph_edges());
    for (const auto& [p, q] : rg.upper_edges()) {
        std::vector<int> closure = propagate_filler(c, x, {p, q});
        CHECK(static_cast<int>(closure.size()) == c.P.size);
        CHECK(propagate_filler(c, x, closure) == closure);
    }
    CHECK(propagate_filler(c, x, {0, 1, 2, 3, 4, 5, 6}) ==
          std::vector<int>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("propagate_filler: precondition violations") {
    Cycle c = mass4_cycle();
    Structure wrong = graph_on(7, {});
    CHECK_THROWS_AS(propagate_filler(c, wrong, {0, 1}), DomainError);
}

TEST_CASE("construct_degenerate_filler: the 6-cycle") {
    Cycle c = mass4_cycle();
    Structure built = construct_degenerate_filler(c);
    CHECK(built == graph_on(7, mass4_graph_edges()));

    std::vector<std::string> log;
    construct_degenerate_filler(c, [&](const std::string& msg) { log.push_back(msg); });
    CHECK(!log.empty());
}

TEST_CASE("construct_degenerate_filler: hypotheses checked") {
    CHECK_THROWS_AS(construct_degenerate_filler(lower_bound_cycle(2)), DomainError);
    CHECK(meets_filling_inequalities(3, 6));
    CHECK_FALSE(meets_filling_inequalities(2, 4));
    CHECK_FALSE(meets_filling_inequalities(3, 5));  // k = 2n-1
    CHECK(is_exceptional_case(1, 3));
    CHECK_FALSE(is_exceptional_case(2, 4));
}

TEST_CASE("construct_degenerate_filler: exceptional case (n,k)=(1,3) in Eq") {
    auto e = eq_symset();
    FinSet p4(4);
    int tested = 0;
    for (std::uint64_t i = 0; i < e->structure_count(p4); ++i) {
        Structure f = e->structure_at(p4, i);
        if (mass(*e, f) != 2) continue;
        Cycle c = restrict_to_cycle(e, f);
        CycleStats s = cycle_stats(c);
        REQUIRE(s.n == 1);
        Structure built = construct_degenerate_filler(c);
        CHECK(built == f);
        auto fillers = brute_force_fillers(c);
        std::uint64_t degenerate = 0;
        for (const Structure& g : fillers)
            if (is_degenerate(*e, g)) ++degenerate;
        CHECK(degenerate == 1);
        ++tested;
    }
    CHECK(tested == 7);  // S(4,2) mass-2 partitions
}

TEST_CASE("construct_degenerate_filler: randomized restrictions match brute force") {
    std::mt19937_64 rng(20240601);
    struct Source {
        SymSetPtr m;
        int carrier;
    };
    std::vector<Source> sources{{graph_symset(), 6},      {eq_symset(), 6},
                                {eq_symset(), 7},         {eq_exact_symset(2), 6},
                                {eq_exact_symset(1), 5},  {eq_leq_symset(2), 7}};
    int accepted = 0;
    for (const auto& [m, carrier] : sources) {
        FinSet p(carrier);
        std::uint64_t total = m->structure_count(p);
        for (int trial = 0; trial < 12 && accepted < 40; ++trial) {
            Structure f = m->structure_at(p, rng() % total);
            if (!is_degenerate(*m, f)) continue;
            Cycle c = restrict_to_cycle(m, f);
            CycleStats s = cycle_stats(c);
            if (!meets_filling_inequalities(s.n, c.k()) && !is_exceptional_case(s.n, c.k()))
                continue;
            ++accepted;

            if (meets_filling_inequalities(s.n, c.k()))
                CHECK(is_propagative(reduction_graph(c).upper_subgraph));

            Structure built = construct_degenerate_filler(c);
            auto fillers = brute_force_fillers(c);
            std::vector<Structure> degenerate;
            for (const Structure& g : fillers)
                if (is_degenerate(*m, g)) degenerate.push_back(g);
            REQUIRE(degenerate.size() == 1);
            CHECK(built == degenerate.front());
            CHECK(built == f);
        }
    }
    CHECK(accepted >= 20);
}

TEST_CASE("reduction graph dot export") {
    std::string dot = to_dot(reduction_graph(mass4_cycle()));
    CHECK(dot.find("digraph R {") == 0);
    CHECK(dot.find("0 [fillcolor=black, fontcolor=white];") != std::string::npos);
    CHECK(dot.find("4 [fillcolor=white];") != std::string::npos);
    CHECK(dot.find("0 -> 1 [dir=both];") != std::string::npos);
    CHECK(dot.find("0 -> 4;") != std::string::npos);
    CHECK(dot.find("0 -> 5") == std::string::npos);
}
