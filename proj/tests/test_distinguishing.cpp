#include <doctest.h>

#include <algorithm>

#include "distcrit/distinguishing.hpp"
#include "distcrit/enumerate.hpp"

using namespace distcrit;

namespace {

// Independent D(G,k) oracle: enumerate all k^n labelings, keep the
// distinguishing ones, count Aut(G)-orbits by union-find over the full
// automorphism list.
std::uint64_t orbit_count_oracle(const Graph& g, int k) {
    const int n = g.order();
    std::vector<std::vector<int>> good;
    std::vector<int> colors(static_cast<size_t>(n), 1);
    while (true) {
        if (is_distinguishing(g, Labeling(colors))) good.push_back(colors);
        int i = 0;
        while (i < n && colors[static_cast<size_t>(i)] == k) colors[static_cast<size_t>(i++)] = 1;
        if (i == n) break;
        ++colors[static_cast<size_t>(i)];
    }
    const std::vector<Permutation> auts = enumerate_automorphisms(g);
    std::vector<std::size_t> parent(good.size());
    for (std::size_t i = 0; i < good.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto index_of = [&](const std::vector<int>& c) {
        return static_cast<std::size_t>(
            std::lower_bound(good.begin(), good.end(), c) - good.begin());
    };
    std::sort(good.begin(), good.end());
    for (std::size_t i = 0; i < good.size(); ++i)
        for (const Permutation& p : auts) {
            std::vector<int> moved(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) moved[static_cast<size_t>(p(v))] = good[i][static_cast<size_t>(v)];
            parent[find(i)] = find(index_of(moved));
        }
    std::uint64_t orbits = 0;
    for (std::size_t i = 0; i < good.size(); ++i)
        if (find(i) == i) ++orbits;
    return orbits;
}

}  // namespace

TEST_SUITE_BEGIN("distinguishing");

TEST_CASE("is_distinguishing fixtures on C6") {
    const Graph c6 = cycle_graph(6);
    CHECK(is_distinguishing(c6, Labeling({1, 1, 2, 1, 2, 2})));
    CHECK_FALSE(is_distinguishing(c6, Labeling({1, 2, 1, 2, 1, 2})));  // rotation by 2 survives
    CHECK_FALSE(is_distinguishing(c6, Labeling::constant(6)));
    CHECK_THROWS_AS(is_distinguishing(c6, Labeling({1, 2})), GraphError);
}

TEST_CASE("known distinguishing numbers") {
    CHECK(distinguishing_number(path_graph(3)).value == 2);
    CHECK(distinguishing_number(path_graph(10)).value == 2);
    CHECK(distinguishing_number(cycle_graph(5)).value == 3);
    CHECK(distinguishing_number(cycle_graph(6)).value == 2);
    CHECK(distinguishing_number(complete_graph(7)).value == 7);
    CHECK(distinguishing_number(edgeless_graph(7)).value == 7);
    CHECK(distinguishing_number(complete_bipartite_graph(2, 3)).value == 3);
    CHECK(distinguishing_number(complete_bipartite_graph(4, 4)).value == 5);
    CHECK(distinguishing_number(complete_graph(1)).value == 1);
    // Asymmetric graph: D = 1 via the shortcut.
    const Graph asym =
        build_graph(6, {{0, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5}, {2, 5}, {4, 5}});
    const DistResult r = distinguishing_number(asym);
    CHECK(r.value == 1);
    CHECK(r.method == DistMethod::AsymmetricShortcut);
}

TEST_CASE("every witness is a valid minimal distinguishing labeling, order <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            const DistResult r = distinguishing_number(g);
            REQUIRE(r.witness.size() == n);
            CHECK(is_distinguishing(g, r.witness));
            int used = 0;
            for (int v = 0; v < n; ++v) used = std::max(used, r.witness[v]);
            CHECK(used <= r.value);
            if (r.value > 1)
                CHECK(count_distinguishing_labelings(g, r.value - 1) == 0);
        }
}

TEST_CASE("search agrees with the shortcut pipeline, order <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n))
            CHECK(distinguishing_number_by_search(g).value == distinguishing_number(g).value);
}

TEST_CASE("labeling counts") {
    CHECK(count_distinguishing_labelings(complete_graph(4), 4) == 24);
    CHECK(count_inequivalent_distinguishing(complete_graph(4), 4) == 1);  // D(K_s, s) = 1
    CHECK(count_inequivalent_distinguishing(complete_graph(3), 4) == 4);
    CHECK(count_distinguishing_labelings(cycle_graph(4), 2) == 0);
    CHECK(count_inequivalent_distinguishing(complete_graph(1), 3) == 3);
    CHECK_THROWS_AS(count_inequivalent_distinguishing(complete_graph(3), 0), GraphError);
}

TEST_CASE("inequivalent counts match the orbit oracle, order <= 5, k <= 3") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (int k = 1; k <= 3; ++k)
                CHECK(count_inequivalent_distinguishing(g, k) == orbit_count_oracle(g, k));
}

TEST_CASE("inequivalent labeling representatives are pairwise inequivalent") {
    const Graph g = cycle_graph(5);
    const auto reps = inequivalent_distinguishing_labelings(g, 3, 100);
    CHECK(reps.size() == count_inequivalent_distinguishing(g, 3));
    for (const Labeling& phi : reps) CHECK(is_distinguishing(g, phi));
    const auto auts = enumerate_automorphisms(g);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            for (const Permutation& p : auts) {
                std::vector<int> moved(5);
                for (int v = 0; v < 5; ++v) moved[static_cast<size_t>(p(v))] = reps[i][v];
                CHECK(Labeling(moved) != reps[j]);
            }
}

TEST_CASE("complete multipartite recognition and formula") {
    auto s = complete_multipartite_structure(complete_bipartite_graph(2, 3));
    REQUIRE(s.has_value());
    CHECK(s->size_counts == std::vector<std::pair<int, int>>{{3, 1}, {2, 1}});
    CHECK(multipartite_distinguishing_number(s->size_counts) == 3);

    CHECK_FALSE(complete_multipartite_structure(path_graph(4)).has_value());
    CHECK(complete_multipartite_structure(complete_graph(5)).has_value());
    CHECK(complete_multipartite_structure(edgeless_graph(4)).has_value());

    // K_{2,2,2}: one size class {2 x 3}: smallest p with C(p,2) >= 3 is 3.
    const Graph k222 = make_named(NamedGraphSpec::complete_multipartite({{2, 3}}));
    CHECK(distinguishing_number(k222).value == 3);
    CHECK(multipartite_distinguishing_number({{2, 3}}) == 3);
    // K_{n,n} = n + 1 through the formula.
    CHECK(multipartite_distinguishing_number({{4, 2}}) == 5);
}

TEST_CASE("disjoint copies formula") {
    CHECK(disjoint_copies_distinguishing_number(complete_graph(3), 2) == 4);  // 2K3
    CHECK(disjoint_copies_distinguishing_number(complete_graph(2), 3) == 3);  // 3K2
    CHECK(disjoint_copies_distinguishing_number(complete_graph(1), 5) == 5);  // 5K1
    CHECK(disjoint_copies_distinguishing_number(complete_graph(4), 2) == 5);  // 2K4
    CHECK_THROWS_AS(disjoint_copies_distinguishing_number(disjoint_copies_graph(2, complete_graph(2)), 2),
                    GraphError);

    // The full pipeline handles mixed disconnected graphs.
    const Graph mixed = build_graph(3, {{0, 1}});  // K2 + K1
    const DistResult r = distinguishing_number(mixed);
    CHECK(r.value == 2);
    CHECK(is_distinguishing(mixed, r.witness));

    const Graph two_k3 = disjoint_copies_graph(2, complete_graph(3));
    const DistResult r2 = distinguishing_number(two_k3);
    CHECK(r2.value == 4);
    CHECK(is_distinguishing(two_k3, r2.witness));
}

TEST_CASE("budget enforcement") {
    CHECK_THROWS_AS(distinguishing_number_by_search(cycle_graph(6), /*max_checks=*/1),
                    BudgetError);
    CHECK_THROWS_AS(count_distinguishing_labelings(cycle_graph(6), 2, /*max_labelings=*/1),
                    BudgetError);
}

TEST_SUITE_END();
