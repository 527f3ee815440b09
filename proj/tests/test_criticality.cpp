#include <doctest.h>

#include "distcrit/criticality.hpp"
#include "distcrit/enumerate.hpp"

using namespace distcrit;

TEST_SUITE_BEGIN("criticality");

TEST_CASE("K1 is vacuously critical") {
    const CriticalityReport r = is_critical(complete_graph(1));
    CHECK(r.d == 1);
    CHECK(r.is_critical);
    CHECK(r.vacuous);
}

TEST_CASE("order-2 graphs are the only 2-critical graphs") {
    CHECK(is_critical(complete_graph(2)).is_critical);
    CHECK(is_critical(edgeless_graph(2)).is_critical);
    const CriticalityReport p3 = is_critical(path_graph(3));
    CHECK(p3.d == 2);
    CHECK_FALSE(p3.is_critical);
    REQUIRE(p3.witness_subset.has_value());
    // The witness really is a proper induced subgraph with the same D.
    const Graph sub = induced_subgraph(path_graph(3), *p3.witness_subset);
    CHECK(sub.order() < 3);
    CHECK(distinguishing_number(sub).value == p3.d);
}

TEST_CASE("cycle criticality fixtures") {
    for (int n : {3, 4, 5}) {
        const CriticalityReport r = is_critical(cycle_graph(n));
        CHECK(r.d == 3);
        CHECK(r.is_critical);
        CHECK(r.is_strong_critical);
    }
    const CriticalityReport c6 = is_critical(cycle_graph(6));
    CHECK(c6.d == 2);
    CHECK_FALSE(c6.is_critical);
    CHECK_FALSE(c6.is_strong_critical);
    REQUIRE(c6.witness_vertex.has_value());
    CHECK(distinguishing_number(delete_vertex(cycle_graph(6), *c6.witness_vertex)).value == 2);
}

TEST_CASE("strong criticality without criticality exists") {
    // P4: D = 2; deleting any vertex leaves P3 or K2+K1, both D = 2.
    const StrongCriticalityResult p4 = is_strong_critical(path_graph(4));
    CHECK_FALSE(p4.is_strong_critical);
    CHECK(p4.witness_vertex.has_value());

    // A minimal asymmetric graph is strong-1-critical but not critical.
    const Graph asym =
        build_graph(6, {{0, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5}, {2, 5}, {4, 5}});
    const CriticalityReport r = is_critical(asym);
    CHECK(r.d == 1);
    CHECK_FALSE(r.is_critical);
    CHECK(r.is_strong_critical);

    CHECK_THROWS_AS(is_strong_critical(complete_graph(1)), GraphError);
}

TEST_CASE("minimal asymmetric predicate") {
    const Graph asym =
        build_graph(6, {{0, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5}, {2, 5}, {4, 5}});
    CHECK(is_minimal_asymmetric(asym));
    CHECK(is_minimal_asymmetric(complement(asym)));
    CHECK_FALSE(is_minimal_asymmetric(path_graph(4)));  // not asymmetric
    // The spider with legs 1,2,3 is the unique minimal asymmetric tree.
    const Graph tree7 =
        build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}});
    CHECK_FALSE(has_nontrivial_automorphism(tree7));
    CHECK(is_minimal_asymmetric(tree7));
    // Asymmetric with an asymmetric proper subgraph: not minimal.
    Graph padded = build_graph(
        7, {{0, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5}, {2, 5}, {4, 5}});
    CHECK_FALSE(has_nontrivial_automorphism(padded));
    CHECK_FALSE(is_minimal_asymmetric(padded));
    CHECK_THROWS_AS(is_minimal_asymmetric(complete_graph(1)), GraphError);
}

TEST_CASE("budget and cache behavior") {
    const Graph big = path_graph(11);
    CHECK_THROWS_AS(is_critical(big, nullptr, 10), BudgetError);
    CHECK(is_critical(big, nullptr, 11).d == 2);

    DCache cache;
    std::uint64_t hits = 0;
    const int d1 = cached_distinguishing_number(cycle_graph(7), &cache, &hits);
    CHECK(d1 == 2);
    CHECK(hits == 0);
    CHECK(cache.size() == 1);
    const int d2 = cached_distinguishing_number(cycle_graph(7), &cache, &hits);
    CHECK(d2 == d1);
    CHECK(hits == 1);

    // Cache transparency: same reports with and without a shared cache.
    for (const Graph& g : enumerate_graphs(5)) {
        const CriticalityReport fresh = is_critical(g);
        const CriticalityReport shared = is_critical(g, &cache);
        CHECK(fresh.d == shared.d);
        CHECK(fresh.is_critical == shared.is_critical);
        CHECK(fresh.is_strong_critical == shared.is_strong_critical);
    }
}

TEST_CASE("structural audit requires a critical graph and passes on knowns") {
    const CriticalityReport bad = is_critical(path_graph(3));
    CHECK_THROWS_AS(audit_structural_theorems(path_graph(3), bad), GraphError);

    DCache cache;
    for (const Graph& g : {cycle_graph(4), cycle_graph(5), complete_graph(4),
                           edgeless_graph(5), disjoint_copies_graph(2, complete_graph(4))}) {
        const CriticalityReport r = is_critical(g, &cache);
        REQUIRE(r.is_critical);
        const StructuralAudit audit = audit_structural_theorems(g, r, &cache);
        CHECK(audit.theorems_pass());
        REQUIRE(audit.find("conjecture-regular") != nullptr);
        CHECK(audit.find("conjecture-regular")->verdict != AuditVerdict::Fail);
        CHECK(audit.find("no-such-item") == nullptr);
    }

    // 2K4 is disconnected: the component lemmas must actually fire.
    const Graph two_k4 = disjoint_copies_graph(2, complete_graph(4));
    const CriticalityReport r = is_critical(two_k4, &cache);
    const StructuralAudit audit = audit_structural_theorems(two_k4, r, &cache);
    CHECK(audit.find("components-isomorphic")->verdict == AuditVerdict::Pass);
    CHECK(audit.find("conjecture-complete-components")->verdict == AuditVerdict::Pass);
}

TEST_SUITE_END();
