#include "distcrit/graph.hpp"

#include <bit>

namespace distcrit {

int Graph::degree(int v) const {
    return std::popcount(rows_[static_cast<size_t>(v)]);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > Graph::kMaxOrder)
        throw GraphError("graph order must be in 1..64, got " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.rows_.assign(static_cast<size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw GraphError("loop edge at vertex " + std::to_string(u));
        g.rows_[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
        g.rows_[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
    }
    return g;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph induced_subgraph(const Graph& g, std::uint64_t subset) {
    if (subset == 0) throw GraphError("induced subgraph of the empty vertex set");
    if (subset & ~g.vertex_mask()) throw GraphError("subset contains vertices outside V(G)");
    std::vector<int> verts;
    for (int v = 0; v < g.order(); ++v)
        if ((subset >> v) & 1u) verts.push_back(v);
    const int m = static_cast<int>(verts.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)]))
                edges.emplace_back(i, j);
    return build_graph(m, edges);
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw GraphError("delete_vertex: vertex out of range");
    return induced_subgraph(g, g.vertex_mask() & ~(std::uint64_t{1} << v));
}

ComponentDecomposition connected_components(const Graph& g) {
    ComponentDecomposition out;
    const std::uint64_t all = g.vertex_mask();
    std::uint64_t seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if ((seen >> v) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << v;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(u);
            }
            frontier = next & ~comp;
            comp |= frontier;
        }
        seen |= comp;
        out.vertex_sets.push_back(comp);
        out.subgraphs.push_back(induced_subgraph(g, comp));
        if (seen == all) break;
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return connected_components(g).vertex_sets.size() == 1;
}

namespace {

Graph make_multipartite(const std::vector<std::pair<int, int>>& parts) {
    int prev_size = 0;
    int n = 0;
    for (auto [size, count] : parts) {
        if (size < 1 || count < 1) throw GraphError("multipartite part sizes and counts must be >= 1");
        if (prev_size != 0 && size >= prev_size)
            throw GraphError("multipartite part sizes must be strictly decreasing");
        prev_size = size;
        n += size * count;
    }
    if (n > Graph::kMaxOrder) throw GraphError("multipartite order exceeds 64");
    // Vertices of each part are contiguous; parts listed largest first.
    std::vector<std::pair<int, int>> bounds;  // [begin, end) per part
    int at = 0;
    for (auto [size, count] : parts)
        for (int j = 0; j < count; ++j) {
            bounds.emplace_back(at, at + size);
            at += size;
        }
    std::vector<std::pair<int, int>> edges;
    for (size_t a = 0; a < bounds.size(); ++a)
        for (size_t b = a + 1; b < bounds.size(); ++b)
            for (int u = bounds[a].first; u < bounds[a].second; ++u)
                for (int v = bounds[b].first; v < bounds[b].second; ++v)
                    edges.emplace_back(u, v);
    return build_graph(n, edges);
}

}  // namespace

Graph make_named(const NamedGraphSpec& spec) {
    using F = NamedGraphSpec::Family;
    auto arg = [&](size_t i) {
        if (i >= spec.params.size()) throw GraphError("missing parameter for named graph");
        return spec.params[i];
    };
    switch (spec.family) {
        case F::Complete: {
            int n = arg(0);
            if (n < 1) throw GraphError("complete graph needs n >= 1");
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return build_graph(n, edges);
        }
        case F::EmptyComplement: {
            int n = arg(0);
            if (n < 1) throw GraphError("edgeless graph needs n >= 1");
            return build_graph(n, {});
        }
        case F::Path: {
            int n = arg(0);
            if (n < 1) throw GraphError("path needs n >= 1");
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            return build_graph(n, edges);
        }
        case F::Cycle: {
            int n = arg(0);
            if (n < 3) throw GraphError("cycle needs n >= 3");
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(n - 1, 0);
            return build_graph(n, edges);
        }
        case F::Star: {
            int leaves = arg(0);
            if (leaves < 1) throw GraphError("star needs at least one leaf");
            std::vector<std::pair<int, int>> edges;
            for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
            return build_graph(leaves + 1, edges);
        }
        case F::CompleteBipartite: {
            int m = arg(0), n = arg(1);
            if (m < 1 || n < 1) throw GraphError("complete bipartite needs both parts >= 1");
            if (m == n) return make_multipartite({{m, 2}});
            if (m < n) std::swap(m, n);
            return make_multipartite({{m, 1}, {n, 1}});
        }
        case F::CompleteMultipartite:
            if (spec.parts.empty()) throw GraphError("multipartite spec has no parts");
            return make_multipartite(spec.parts);
        case F::DisjointCopies: {
            if (spec.copies < 1) throw GraphError("disjoint copies needs c >= 1");
            const Graph& h = spec.inner;
            const int m = h.order();
            if (m < 1) throw GraphError("disjoint copies of an empty graph");
            const int n = spec.copies * m;
            if (n > Graph::kMaxOrder) throw GraphError("disjoint copies order exceeds 64");
            std::vector<std::pair<int, int>> edges;
            for (int c = 0; c < spec.copies; ++c)
                for (int u = 0; u < m; ++u)
                    for (int v = u + 1; v < m; ++v)
                        if (h.adjacent(u, v)) edges.emplace_back(c * m + u, c * m + v);
            return build_graph(n, edges);
        }
    }
    throw GraphError("unknown named graph family");
}

}  // namespace distcrit
