#ifndef DISTCRIT_DISTINGUISHING_HPP
#define DISTCRIT_DISTINGUISHING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "distcrit/aut.hpp"
#include "distcrit/graph.hpp"
#include "distcrit/labeling.hpp"

namespace distcrit {

/// Thrown when an exhaustive step would exceed its configured budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class DistMethod {
    Search,
    MultipartiteFormula,
    DisjointCopiesFormula,
    AsymmetricShortcut,
};

struct DistResult {
    int value = 0;
    Labeling witness;  // distinguishing labeling with `value` colors
    DistMethod method = DistMethod::Search;
};

/// True iff the color-preserving automorphism group of (g, phi) is trivial.
bool is_distinguishing(const Graph& g, const Labeling& phi);

/// Exact D(G) with a witness labeling. Fast paths: asymmetric graphs,
/// complete multipartite graphs and their complements, disconnected graphs
/// via the inequivalent-labeling count of their components.
DistResult distinguishing_number(const Graph& g);

/// D(G) by plain labeling search only (no structural shortcuts); used to
/// cross-check the closed forms. `max_checks` bounds the number of
/// candidate labelings tested.
DistResult distinguishing_number_by_search(const Graph& g,
                                           std::uint64_t max_checks = 50'000'000);

/// Raw number of distinguishing k-labelings of g (not up to equivalence).
std::uint64_t count_distinguishing_labelings(const Graph& g, int k,
                                             std::uint64_t max_labelings = 1u << 28);

/// D(G,k): distinguishing k-labelings counted up to Aut(G). Computed as
/// raw count / |Aut(G)|; the division is exact because the action is free.
std::uint64_t count_inequivalent_distinguishing(const Graph& g, int k,
                                                std::uint64_t max_labelings = 1u << 28);

/// Complete multipartite structure of g if it has one (parts are the
/// components of the complement when those are all complete).
struct MultipartiteStructure {
    std::vector<std::uint64_t> part_masks;        // descending by size, then by mask
    std::vector<std::pair<int, int>> size_counts; // (size, multiplicity), sizes decreasing
};
std::optional<MultipartiteStructure> complete_multipartite_structure(const Graph& g);

/// Smallest p with binomial(p, a_i) >= j_i for every part size a_i with
/// multiplicity j_i.
int multipartite_distinguishing_number(const std::vector<std::pair<int, int>>& size_counts);

/// D(cH) for connected H: min k with D(H,k) >= c.
int disjoint_copies_distinguishing_number(const Graph& h, int c);

/// First `count` pairwise-inequivalent distinguishing k-labelings of g in
/// lexicographic enumeration order (fewer if not that many exist).
std::vector<Labeling> inequivalent_distinguishing_labelings(const Graph& g, int k,
                                                            std::uint64_t count,
                                                            std::uint64_t max_labelings = 1u << 28);

}  // namespace distcrit

#endif
