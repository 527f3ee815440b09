#ifndef DISTCRIT_AUT_HPP
#define DISTCRIT_AUT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "distcrit/graph.hpp"
#include "distcrit/labeling.hpp"

namespace distcrit {

struct Permutation {
    std::vector<int> image;  // image[v] is where v goes

    static Permutation identity(int n);
    int size() const { return static_cast<int>(image.size()); }
    int operator()(int v) const { return image[static_cast<size_t>(v)]; }
    bool is_identity() const;
    Permutation inverse() const;
    /// (a * b)(v) = a(b(v))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    bool operator==(const Permutation&) const = default;

    /// Disjoint cycle notation, fixed points omitted; "()" for the identity.
    std::string cycle_notation() const;
};

/// True iff p preserves adjacency (and the coloring, when given).
bool is_automorphism(const Graph& g, const Permutation& p,
                     const Labeling* coloring = nullptr);

/// Ordered partition of V; cells listed in order, vertices ascending in a cell.
using OrderedPartition = std::vector<std::vector<int>>;

/// Coarsest equitable partition refining the initial coloring: any two
/// vertices of a cell have equally many neighbors in every cell.
OrderedPartition equitable_refinement(const Graph& g, const Labeling& initial);

struct AutGroup {
    std::vector<Permutation> generators;  // empty for the trivial group
    std::uint64_t order = 1;              // exact, via orbit-stabilizer chain
    std::vector<std::vector<int>> orbits; // sorted by minimum vertex
};

/// Automorphism group of g, optionally constrained to color-preserving
/// permutations. Deterministic for fixed input.
AutGroup automorphism_group(const Graph& g,
                            const std::optional<Labeling>& coloring = std::nullopt);

/// Any non-identity (color-preserving) automorphism, if one exists.
std::optional<Permutation> find_nontrivial_automorphism(const Graph& g,
                                                        const Labeling* coloring = nullptr);

bool has_nontrivial_automorphism(const Graph& g, const Labeling* coloring = nullptr);

/// Is there an automorphism with a forced assignment src -> dst?
std::optional<Permutation> find_automorphism_mapping(const Graph& g, int src, int dst,
                                                     const Labeling* coloring = nullptr);

/// Visits every (color-preserving) automorphism including the identity;
/// stops early if the visitor returns false. Returns false on early stop.
bool for_each_automorphism(const Graph& g, const Labeling* coloring,
                           const std::function<bool(const Permutation&)>& visit);

/// All automorphisms, capped (throws GraphError past the cap).
std::vector<Permutation> enumerate_automorphisms(const Graph& g,
                                                 const Labeling* coloring = nullptr,
                                                 std::uint64_t cap = 10'000'000);

struct CanonicalForm {
    std::string certificate;  // equal iff isomorphic
    Permutation relabeling;   // maps input vertices to canonical positions
};

CanonicalForm canonical_form(const Graph& g);

/// Certificate only (the common case; skips keeping the permutation).
std::string canonical_certificate(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace distcrit

#endif
