#ifndef DISTCRIT_GRAPH_HPP
#define DISTCRIT_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distcrit {

/// Thrown on invalid graph construction or operation arguments.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on at most 64 vertices.
/// Row v is a bitset holding the open neighborhood N(v).
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;

    int order() const { return n_; }

    bool adjacent(int u, int v) const {
        return (rows_[static_cast<size_t>(u)] >> v) & 1u;
    }

    /// Neighborhood of v as a bitmask.
    std::uint64_t neighbors(int v) const { return rows_[static_cast<size_t>(v)]; }

    int degree(int v) const;
    int edge_count() const;

    /// Mask with bits 0..n-1 set.
    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    bool operator==(const Graph& other) const = default;

    friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Builds a graph from an explicit edge list. Edges are symmetrized;
/// loops and out-of-range endpoints are rejected.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

Graph complement(const Graph& g);

/// Subgraph induced by the vertices in `subset` (bitmask). Vertices are
/// relabeled 0..|S|-1 in ascending order of their original index.
/// An empty subset is rejected.
Graph induced_subgraph(const Graph& g, std::uint64_t subset);

/// g with vertex v deleted.
Graph delete_vertex(const Graph& g, int v);

struct ComponentDecomposition {
    std::vector<std::uint64_t> vertex_sets;  // ascending by minimum vertex
    std::vector<Graph> subgraphs;
};

ComponentDecomposition connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Named graph families with documented vertex orderings.
struct NamedGraphSpec {
    enum class Family {
        Complete,          // K_n
        EmptyComplement,   // complement of K_n (edgeless)
        Path,              // P_n in walk order 0-1-...-(n-1)
        Cycle,             // C_n in walk order, edge (n-1,0) closes it
        Star,              // K_{1,d}: vertex 0 is the center
        CompleteBipartite, // K_{m,n}: parts contiguous, larger part first
        CompleteMultipartite, // parts contiguous, sizes strictly decreasing
        DisjointCopies,    // c copies of an inner graph, blocks contiguous
    };

    Family family;
    std::vector<int> params;  // n; or m,n; or part sizes with multiplicities

    // CompleteMultipartite: (size, count) pairs with sizes strictly decreasing.
    std::vector<std::pair<int, int>> parts;

    // DisjointCopies only.
    int copies = 0;
    Graph inner;

    static NamedGraphSpec complete(int n) { return {Family::Complete, {n}, {}, 0, {}}; }
    static NamedGraphSpec edgeless(int n) { return {Family::EmptyComplement, {n}, {}, 0, {}}; }
    static NamedGraphSpec path(int n) { return {Family::Path, {n}, {}, 0, {}}; }
    static NamedGraphSpec cycle(int n) { return {Family::Cycle, {n}, {}, 0, {}}; }
    static NamedGraphSpec star(int leaves) { return {Family::Star, {leaves}, {}, 0, {}}; }
    static NamedGraphSpec complete_bipartite(int m, int n) {
        return {Family::CompleteBipartite, {m, n}, {}, 0, {}};
    }
    static NamedGraphSpec complete_multipartite(std::vector<std::pair<int, int>> sized_counts) {
        return {Family::CompleteMultipartite, {}, std::move(sized_counts), 0, {}};
    }
    static NamedGraphSpec disjoint_copies(int c, Graph h) {
        return {Family::DisjointCopies, {}, {}, c, std::move(h)};
    }
};

Graph make_named(const NamedGraphSpec& spec);

// Convenience constructors used throughout the test and search code.
inline Graph complete_graph(int n) { return make_named(NamedGraphSpec::complete(n)); }
inline Graph edgeless_graph(int n) { return make_named(NamedGraphSpec::edgeless(n)); }
inline Graph path_graph(int n) { return make_named(NamedGraphSpec::path(n)); }
inline Graph cycle_graph(int n) { return make_named(NamedGraphSpec::cycle(n)); }
inline Graph star_graph(int leaves) { return make_named(NamedGraphSpec::star(leaves)); }
inline Graph complete_bipartite_graph(int m, int n) {
    return make_named(NamedGraphSpec::complete_bipartite(m, n));
}
inline Graph disjoint_copies_graph(int c, const Graph& h) {
    return make_named(NamedGraphSpec::disjoint_copies(c, h));
}

}  // namespace distcrit

#endif
