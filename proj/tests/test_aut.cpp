#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "distcrit/aut.hpp"
#include "distcrit/enumerate.hpp"

using namespace distcrit;

namespace {

// Independent oracle: count automorphisms by trying all n! permutations.
std::uint64_t brute_force_aut_order(const Graph& g) {
    std::vector<int> image(static_cast<size_t>(g.order()));
    std::iota(image.begin(), image.end(), 0);
    std::uint64_t count = 0;
    do {
        if (is_automorphism(g, Permutation{image})) ++count;
    } while (std::next_permutation(image.begin(), image.end()));
    return count;
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) edges.emplace_back(p(u), p(v));
    return build_graph(g.order(), edges);
}

}  // namespace

TEST_SUITE_BEGIN("aut");

TEST_CASE("permutation algebra") {
    const Permutation id = Permutation::identity(4);
    CHECK(id.is_identity());
    CHECK(id.cycle_notation() == "()");
    const Permutation t{{1, 0, 2, 3}};
    CHECK(t.cycle_notation() == "(0 1)");
    const Permutation c{{1, 2, 3, 0}};
    CHECK(c.cycle_notation() == "(0 1 2 3)");
    CHECK((c * c.inverse()).is_identity());
    CHECK((t * c)(0) == (t(c(0))));
}

TEST_CASE("group order matches the n! oracle for every graph of order <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            CAPTURE(n);
            CHECK(automorphism_group(g).order == brute_force_aut_order(g));
        }
}

TEST_CASE("known group orders") {
    CHECK(automorphism_group(complete_graph(5)).order == 120);
    CHECK(automorphism_group(cycle_graph(6)).order == 12);
    CHECK(automorphism_group(path_graph(5)).order == 2);
    CHECK(automorphism_group(complete_bipartite_graph(3, 3)).order == 72);
    CHECK(automorphism_group(edgeless_graph(9)).order == 362880);
    CHECK(automorphism_group(disjoint_copies_graph(2, complete_graph(4))).order == 1152);
}

TEST_CASE("generators actually generate: closure equals the enumerated group") {
    for (const Graph& g : {cycle_graph(5), complete_bipartite_graph(2, 3), path_graph(4),
                           star_graph(4), disjoint_copies_graph(3, path_graph(2))}) {
        const AutGroup group = automorphism_group(g);
        std::vector<Permutation> closure{Permutation::identity(g.order())};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const Permutation& a : std::vector<Permutation>(closure))
                for (const Permutation& s : group.generators) {
                    Permutation prod = s * a;
                    if (std::find(closure.begin(), closure.end(), prod) == closure.end()) {
                        closure.push_back(prod);
                        grew = true;
                    }
                }
        }
        CHECK(closure.size() == group.order);
        CHECK(closure.size() == enumerate_automorphisms(g).size());
    }
}

TEST_CASE("color-constrained group: C4 with colors (1,1,2,2) has order 2") {
    const Labeling phi{{1, 1, 2, 2}};
    const AutGroup group = automorphism_group(cycle_graph(4), phi);
    CHECK(group.order == 2);
    for (const Permutation& p : enumerate_automorphisms(cycle_graph(4), &phi))
        CHECK(is_automorphism(cycle_graph(4), p, &phi));
}

TEST_CASE("orbits of a star separate center from leaves") {
    const AutGroup group = automorphism_group(star_graph(3));
    REQUIRE(group.orbits.size() == 2);
    CHECK(group.orbits[0] == std::vector<int>{0});
    CHECK(group.orbits[1] == std::vector<int>{1, 2, 3});
}

TEST_CASE("equitable refinement") {
    // Regular graph, uniform colors: one cell.
    OrderedPartition p = equitable_refinement(cycle_graph(6), Labeling::constant(6, 1));
    REQUIRE(p.size() == 1);
    CHECK(p[0].size() == 6);

    // Star: center split off by degree.
    p = equitable_refinement(star_graph(3), Labeling::constant(4, 1));
    REQUIRE(p.size() == 2);

    // Initial colors are respected.
    p = equitable_refinement(cycle_graph(6), Labeling{{1, 1, 1, 2, 2, 2}});
    CHECK(p.size() >= 2);
}

TEST_CASE("forced-assignment automorphism search") {
    CHECK(find_automorphism_mapping(path_graph(4), 0, 3).has_value());
    CHECK_FALSE(find_automorphism_mapping(path_graph(4), 0, 1).has_value());
    auto witness = find_automorphism_mapping(cycle_graph(5), 0, 2);
    REQUIRE(witness.has_value());
    CHECK(is_automorphism(cycle_graph(5), *witness));
    CHECK((*witness)(0) == 2);
}

TEST_CASE("nontrivial automorphism detection") {
    CHECK(has_nontrivial_automorphism(path_graph(3)));
    // Smallest asymmetric graph: 6 vertices.
    const Graph asym =
        build_graph(6, {{0, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5}, {2, 5}, {4, 5}});
    CHECK_FALSE(has_nontrivial_automorphism(asym));
    auto p = find_nontrivial_automorphism(cycle_graph(4));
    REQUIRE(p.has_value());
    CHECK_FALSE(p->is_identity());
    CHECK(is_automorphism(cycle_graph(4), *p));
}

TEST_CASE("canonical form and isomorphism") {
    CHECK(are_isomorphic(path_graph(4), complement(path_graph(4))));  // self-complementary
    CHECK(are_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
    CHECK_FALSE(are_isomorphic(path_graph(4), star_graph(3)));
    CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_copies_graph(2, complete_graph(3))));

    // The relabeling really is an isomorphism onto the canonical form.
    for (const Graph& g :
         {path_graph(7), cycle_graph(7), complete_bipartite_graph(2, 4)}) {
        const CanonicalForm cf = canonical_form(g);
        const Graph relabeled = apply_permutation(g, cf.relabeling);
        CHECK(canonical_certificate(relabeled) == cf.certificate);
        CHECK(are_isomorphic(g, relabeled));
    }
}

TEST_CASE("certificates agree across random relabelings") {
    const Graph g = build_graph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
    const std::string cert = canonical_certificate(g);
    std::vector<int> image(7);
    std::iota(image.begin(), image.end(), 0);
    for (int trial = 0; trial < 20; ++trial) {
        std::next_permutation(image.begin(), image.end());
        CHECK(canonical_certificate(apply_permutation(g, Permutation{image})) == cert);
    }
}

TEST_SUITE_END();
