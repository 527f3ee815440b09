#ifndef DISTCRIT_METRICS_HPP
#define DISTCRIT_METRICS_HPP

#include <vector>

#include "distcrit/graph.hpp"

namespace distcrit {

/// Eccentricity / diameter sentinel for disconnected graphs.
constexpr int kInfiniteDistance = 1 << 20;

struct GraphMetrics {
    std::vector<int> degree_sequence;  // sorted ascending
    int min_degree = 0;
    int max_degree = 0;
    bool is_regular = false;
    int regular_k = -1;  // valid when is_regular
    int component_count = 0;
    std::vector<int> eccentricity;  // per vertex; kInfiniteDistance if disconnected
    int diameter = 0;               // kInfiniteDistance if disconnected
    int radius = 0;
    int clique_number = 0;
    int independence_number = 0;
    bool triangle_free = false;
    bool claw_free = false;
};

GraphMetrics metrics(const Graph& g);

/// Exact clique number by branch and bound.
int clique_number(const Graph& g);
/// Exact independence number (clique number of the complement).
int independence_number(const Graph& g);

bool has_triangle(const Graph& g);
/// True iff g has K_{1,3} as an induced subgraph.
bool has_induced_claw(const Graph& g);
/// True iff g has K_{1,d} as an induced subgraph: some vertex with an
/// independent set of size d inside its neighborhood.
bool has_induced_star(const Graph& g, int d);

bool is_tree(const Graph& g);
bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);

/// Per-vertex distances from src (kInfiniteDistance when unreachable).
std::vector<int> bfs_distances(const Graph& g, int src);

/// Every vertex has eccentricity exactly k. Rejects disconnected input.
bool is_k_self_centered(const Graph& g, int k);

struct AVertexClassification {
    // is_a1[v] is true iff deg(v) = n-1 or some neighbor u of v has
    // N(u) ∪ N(v) = V(G); otherwise v counts as an a2-vertex.
    std::vector<bool> is_a1;

    bool all_a2() const {
        for (bool b : is_a1)
            if (b) return false;
        return true;
    }
};

AVertexClassification classify_a_vertices(const Graph& g);

}  // namespace distcrit

#endif
