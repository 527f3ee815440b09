#include <doctest.h>

#include <set>

#include "distcrit/enumerate.hpp"
#include "distcrit/graph6.hpp"
#include "distcrit/metrics.hpp"

using namespace distcrit;

namespace {

// Labeled-graph oracle: generate all 2^C(n,2) labeled graphs and dedup by
// canonical certificate.
std::size_t labeled_dedup_count(int n) {
    const int bits = n * (n - 1) / 2;
    std::set<std::string> certs;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        std::vector<std::pair<int, int>> edges;
        int b = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++b)
                if ((code >> b) & 1u) edges.emplace_back(u, v);
        certs.insert(canonical_certificate(build_graph(n, edges)));
    }
    return certs.size();
}

}  // namespace

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("class counts match the frozen table and the labeled-dedup oracle") {
    const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 8; ++n)
        CHECK(enumerate_graphs(n).size() == expected[static_cast<size_t>(n - 1)]);
    for (int n = 1; n <= 5; ++n)
        CHECK(enumerate_graphs(n).size() == labeled_dedup_count(n));
}

TEST_CASE("representatives are pairwise non-isomorphic and deterministic") {
    std::set<std::string> certs;
    const std::vector<Graph> first = enumerate_graphs(6);
    for (const Graph& g : first) {
        CHECK(g.order() == 6);
        CHECK(certs.insert(canonical_certificate(g)).second);
    }
    CHECK(first == enumerate_graphs(6));  // stable order across runs
}

TEST_CASE("connected and tree filters") {
    EnumerationConfig connected;
    connected.connected_only = true;
    const std::vector<std::size_t> conn{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        const auto graphs = enumerate_graphs(n, connected);
        CHECK(graphs.size() == conn[static_cast<size_t>(n - 1)]);
        for (const Graph& g : graphs) CHECK(is_connected(g));
    }

    EnumerationConfig trees;
    trees.tree_only = true;
    const std::vector<std::size_t> tree_counts{1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n)
        CHECK(enumerate_graphs(n, trees).size() == tree_counts[static_cast<size_t>(n - 1)]);

    EnumerationConfig regular;
    regular.predicate = [](const Graph& g) { return metrics(g).is_regular; };
    for (const Graph& g : enumerate_graphs(6, regular)) CHECK(metrics(g).is_regular);
}

TEST_CASE("internal generator budget") {
    EnumerationConfig cfg;
    CHECK_THROWS_AS(enumerate_graphs(11, cfg), BudgetError);
    CHECK_THROWS_AS(enumerate_graphs(0, cfg), GraphError);
    cfg.hard_stop = 4;
    CHECK_THROWS_AS(enumerate_graphs(5, cfg), BudgetError);
}

TEST_CASE("critical search up to order 6 finds the known sets") {
    const std::vector<CriticalHit> hits = search_critical(6);
    std::set<std::string> got;
    for (const CriticalHit& hit : hits) {
        CHECK(hit.report.is_critical);
        CHECK(hit.audit.theorems_pass());
        got.insert(canonical_certificate(hit.graph));
    }
    std::set<std::string> want;
    for (const Graph& g :
         {complete_graph(1), complete_graph(2), edgeless_graph(2), complete_graph(3),
          edgeless_graph(3), complete_graph(4), edgeless_graph(4), cycle_graph(4),
          complement(cycle_graph(4)), complete_graph(5), edgeless_graph(5), cycle_graph(5),
          complete_graph(6), edgeless_graph(6), disjoint_copies_graph(2, complete_graph(3)),
          complete_bipartite_graph(3, 3)})
        want.insert(canonical_certificate(g));
    CHECK(got == want);

    CriticalSearchOptions three;
    three.d_filter = 3;
    CHECK(search_critical(6, three).size() == 5);

    CriticalSearchOptions disc;
    disc.disconnected_only = true;
    for (const CriticalHit& hit : search_critical(6, disc))
        CHECK_FALSE(is_connected(hit.graph));
}

TEST_CASE("minimal asymmetric search is empty below order 6") {
    CHECK(search_minimal_asymmetric(5).empty());
    // Every asymmetric graph of order 6 is minimal (all smaller graphs are
    // symmetric), and there are exactly 8 of them.
    const std::vector<Graph> found = search_minimal_asymmetric(6);
    CHECK(found.size() == 8);
    std::set<std::string> certs;
    for (const Graph& g : found) certs.insert(canonical_certificate(g));
    for (const Graph& g : found)
        CHECK(certs.contains(canonical_certificate(complement(g))));
}

TEST_CASE("verification suites are registered and pass at small orders") {
    const auto& names = verification_suite_names();
    CHECK(names.size() == 13);
    DCache cache;
    for (const std::string& name : names) {
        const SuiteResult r = run_verification_suite(name, 5, &cache);
        CHECK(r.name == name);
        CHECK(r.assertions_run > 0);
        CHECK(r.passed());
        const bool conj = name.rfind("conjecture-", 0) == 0;
        CHECK(r.conjecture == conj);
    }
    CHECK_THROWS_AS(run_verification_suite("no-such-suite", 5), GraphError);
}

TEST_SUITE_END();
