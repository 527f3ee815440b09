#include "distcrit/metrics.hpp"

#include <algorithm>
#include <bit>

namespace distcrit {

namespace {

// Max clique over `cand`, branch and bound with popcount bound.
void clique_search(const Graph& g, std::uint64_t cand, int size, int& best) {
    if (size + std::popcount(cand) <= best) return;
    while (cand) {
        if (size + std::popcount(cand) <= best) return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        int next = size + 1;
        std::uint64_t rest = cand & g.neighbors(v);
        if (next > best) best = next;
        if (rest) clique_search(g, rest, next, best);
    }
}

}  // namespace

int clique_number(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = 0;
    clique_search(g, g.vertex_mask(), 0, best);
    return best;
}

int independence_number(const Graph& g) {
    if (g.order() == 0) return 0;
    return clique_number(complement(g));
}

bool has_triangle(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        std::uint64_t nu = g.neighbors(u);
        std::uint64_t rest = nu;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (v <= u) continue;
            if (nu & g.neighbors(v) & ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v)))
                return true;
        }
    }
    return false;
}

bool has_induced_star(const Graph& g, int d) {
    if (d < 1) return g.order() >= 1;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) < d) continue;
        Graph nbhd = induced_subgraph(g, g.neighbors(v));
        if (independence_number(nbhd) >= d) return true;
    }
    return false;
}

bool has_induced_claw(const Graph& g) { return has_induced_star(g, 3); }

bool is_tree(const Graph& g) {
    return g.order() >= 1 && is_connected(g) && g.edge_count() == g.order() - 1;
}

bool is_complete(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != g.order() - 1) return false;
    return true;
}

bool is_edgeless(const Graph& g) { return g.edge_count() == 0; }

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<size_t>(g.order()), kInfiniteDistance);
    dist[static_cast<size_t>(src)] = 0;
    std::uint64_t seen = std::uint64_t{1} << src;
    std::uint64_t frontier = seen;
    int d = 0;
    while (frontier) {
        ++d;
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int u = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbors(u);
        }
        frontier = next & ~seen;
        seen |= frontier;
        std::uint64_t nf = frontier;
        while (nf) {
            int u = std::countr_zero(nf);
            nf &= nf - 1;
            dist[static_cast<size_t>(u)] = d;
        }
    }
    return dist;
}

GraphMetrics metrics(const Graph& g) {
    GraphMetrics m;
    const int n = g.order();
    m.degree_sequence.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) m.degree_sequence.push_back(g.degree(v));
    std::sort(m.degree_sequence.begin(), m.degree_sequence.end());
    m.min_degree = n ? m.degree_sequence.front() : 0;
    m.max_degree = n ? m.degree_sequence.back() : 0;
    m.is_regular = (m.min_degree == m.max_degree);
    m.regular_k = m.is_regular ? m.min_degree : -1;

    m.component_count = static_cast<int>(connected_components(g).vertex_sets.size());

    m.eccentricity.assign(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v);
        int ecc = 0;
        for (int d : dist) ecc = std::max(ecc, d);
        m.eccentricity[static_cast<size_t>(v)] = ecc;
    }
    if (n > 0) {
        m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
        m.radius = *std::min_element(m.eccentricity.begin(), m.eccentricity.end());
    }

    m.clique_number = clique_number(g);
    m.independence_number = independence_number(g);
    m.triangle_free = !has_triangle(g);
    m.claw_free = !has_induced_claw(g);
    return m;
}

bool is_k_self_centered(const Graph& g, int k) {
    if (k < 1) throw GraphError("is_k_self_centered: k must be positive");
    if (!is_connected(g)) throw GraphError("is_k_self_centered: graph is disconnected");
    for (int v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        int ecc = 0;
        for (int d : dist) ecc = std::max(ecc, d);
        if (ecc != k) return false;
    }
    return true;
}

AVertexClassification classify_a_vertices(const Graph& g) {
    AVertexClassification out;
    const int n = g.order();
    const std::uint64_t all = g.vertex_mask();
    out.is_a1.assign(static_cast<size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) {
            out.is_a1[static_cast<size_t>(v)] = true;
            continue;
        }
        std::uint64_t nb = g.neighbors(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if ((g.neighbors(u) | g.neighbors(v)) == all) {
                out.is_a1[static_cast<size_t>(v)] = true;
                break;
            }
        }
    }
    return out;
}

}  // namespace distcrit
