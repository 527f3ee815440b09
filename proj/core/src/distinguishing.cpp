#include "distcrit/distinguishing.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>

#include "distcrit/metrics.hpp"

namespace distcrit {

bool is_distinguishing(const Graph& g, const Labeling& phi) {
    if (phi.size() != g.order()) throw GraphError("labeling length does not match graph order");
    return !has_nontrivial_automorphism(g, &phi);
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binomial_saturating(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        if (result > kSaturated / static_cast<std::uint64_t>(n - k + i)) return kSaturated;
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

// Twin pair with equal colors forces a color-preserving transposition, so
// no extension of the partial labeling can be distinguishing.
bool labeled_twin_exists(const Graph& g, const std::vector<int>& colors, int v,
                         const std::vector<int>& labeled) {
    const std::uint64_t bv = std::uint64_t{1} << v;
    for (int u : labeled) {
        if (colors[static_cast<size_t>(u)] != colors[static_cast<size_t>(v)]) continue;
        const std::uint64_t pair_mask = bv | (std::uint64_t{1} << u);
        if ((g.neighbors(u) & ~pair_mask) == (g.neighbors(v) & ~pair_mask)) return true;
    }
    return false;
}

// Counts distinguishing k-labelings by DFS over vertices with twin pruning.
struct RawCounter {
    const Graph& g;
    int k;
    std::uint64_t budget;
    std::uint64_t checks = 0;
    std::uint64_t found = 0;
    std::vector<int> colors;
    std::vector<int> labeled;

    void run() {
        colors.assign(static_cast<size_t>(g.order()), 0);
        dfs(0);
    }

    void dfs(int v) {
        if (v == g.order()) {
            if (++checks > budget)
                throw BudgetError("distinguishing labeling count out of configured budget");
            Labeling phi{colors};
            if (!has_nontrivial_automorphism(g, &phi)) ++found;
            return;
        }
        for (int c = 1; c <= k; ++c) {
            colors[static_cast<size_t>(v)] = c;
            if (!labeled_twin_exists(g, colors, v, labeled)) {
                labeled.push_back(v);
                dfs(v + 1);
                labeled.pop_back();
            }
        }
        colors[static_cast<size_t>(v)] = 0;
    }
};

}  // namespace

std::uint64_t count_distinguishing_labelings(const Graph& g, int k, std::uint64_t max_labelings) {
    if (k < 1) throw GraphError("color count k must be >= 1");
    if (g.order() == 0) return 1;
    RawCounter counter{g, k, max_labelings};
    counter.run();
    return counter.found;
}

std::uint64_t count_inequivalent_distinguishing(const Graph& g, int k,
                                                std::uint64_t max_labelings) {
    const std::uint64_t raw = count_distinguishing_labelings(g, k, max_labelings);
    const std::uint64_t aut_order = automorphism_group(g).order;
    if (raw % aut_order != 0)
        throw std::logic_error("free-action violation: raw distinguishing count " +
                               std::to_string(raw) + " not divisible by |Aut| = " +
                               std::to_string(aut_order));
    return raw / aut_order;
}

std::vector<Labeling> inequivalent_distinguishing_labelings(const Graph& g, int k,
                                                            std::uint64_t count,
                                                            std::uint64_t max_labelings) {
    if (k < 1) throw GraphError("color count k must be >= 1");
    const int n = g.order();
    std::vector<Labeling> reps;
    if (count == 0 || n == 0) return reps;
    std::vector<int> colors(static_cast<size_t>(n), 1);
    std::uint64_t seen = 0;
    while (true) {
        if (++seen > max_labelings)
            throw BudgetError("inequivalent labeling enumeration out of configured budget");
        Labeling phi{colors};
        if (is_distinguishing(g, phi)) {
            bool fresh = true;
            for (const Labeling& kept : reps) {
                // Equivalent iff some automorphism carries kept onto phi.
                bool equivalent = !for_each_automorphism(g, nullptr, [&](const Permutation& a) {
                    for (int v = 0; v < n; ++v)
                        if (phi[a(v)] != kept[v]) return true;
                    return false;  // abort: found a matching automorphism
                });
                if (equivalent) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) {
                reps.push_back(phi);
                if (reps.size() >= count) return reps;
            }
        }
        // Odometer step over k^n.
        int at = n - 1;
        while (at >= 0 && colors[static_cast<size_t>(at)] == k) colors[static_cast<size_t>(at--)] = 1;
        if (at < 0) return reps;
        ++colors[static_cast<size_t>(at)];
    }
}

std::optional<MultipartiteStructure> complete_multipartite_structure(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    auto comps = connected_components(complement(g));
    for (const Graph& c : comps.subgraphs)
        if (!is_complete(c)) return std::nullopt;
    MultipartiteStructure out;
    out.part_masks = comps.vertex_sets;
    std::sort(out.part_masks.begin(), out.part_masks.end(),
              [](std::uint64_t a, std::uint64_t b) {
                  int pa = std::popcount(a), pb = std::popcount(b);
                  return pa != pb ? pa > pb : a < b;
              });
    for (std::uint64_t mask : out.part_masks) {
        int size = std::popcount(mask);
        if (!out.size_counts.empty() && out.size_counts.back().first == size)
            ++out.size_counts.back().second;
        else
            out.size_counts.emplace_back(size, 1);
    }
    return out;
}

int multipartite_distinguishing_number(const std::vector<std::pair<int, int>>& size_counts) {
    if (size_counts.empty()) throw GraphError("multipartite formula: no parts");
    int p = 0;
    for (auto [size, count] : size_counts) {
        if (size < 1 || count < 1) throw GraphError("multipartite formula: invalid part spec");
        p = std::max(p, size);
    }
    while (true) {
        bool ok = true;
        for (auto [size, count] : size_counts)
            if (binomial_saturating(p, size) < static_cast<std::uint64_t>(count)) {
                ok = false;
                break;
            }
        if (ok) return p;
        ++p;
    }
}

namespace {

// Distinguishing labeling of a complete multipartite graph with p colors:
// rainbow colors inside each part, distinct color sets across equal parts.
Labeling multipartite_witness(int n, const MultipartiteStructure& parts, int p) {
    std::vector<int> colors(static_cast<size_t>(n), 0);
    size_t i = 0;
    while (i < parts.part_masks.size()) {
        const int size = std::popcount(parts.part_masks[i]);
        // k-subset odometer over {1..p}, lexicographic.
        std::vector<int> subset(static_cast<size_t>(size));
        std::iota(subset.begin(), subset.end(), 1);
        size_t j = i;
        while (j < parts.part_masks.size() &&
               std::popcount(parts.part_masks[j]) == size) {
            std::uint64_t mask = parts.part_masks[j];
            for (int idx = 0; mask; ++idx) {
                int v = std::countr_zero(mask);
                mask &= mask - 1;
                colors[static_cast<size_t>(v)] = subset[static_cast<size_t>(idx)];
            }
            // next k-subset
            int at = size - 1;
            while (at >= 0 && subset[static_cast<size_t>(at)] == p - (size - 1 - at)) --at;
            if (at >= 0) {
                ++subset[static_cast<size_t>(at)];
                for (int t = at + 1; t < size; ++t)
                    subset[static_cast<size_t>(t)] = subset[static_cast<size_t>(t - 1)] + 1;
            }
            ++j;
        }
        i = j;
    }
    return Labeling{colors};
}

// Labeling search at a fixed color count: restricted-growth enumeration
// (colors first used in increasing order) over vertices in descending-degree
// order, pruning branches with a same-colored twin pair.
struct LabelingSearch {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t checks = 0;

    std::vector<int> vorder;
    std::vector<int> colors;
    std::vector<int> labeled;
    int k = 0;
    std::optional<Labeling> found;

    explicit LabelingSearch(const Graph& graph, std::uint64_t max_checks)
        : g(graph), budget(max_checks) {
        vorder.resize(static_cast<size_t>(g.order()));
        std::iota(vorder.begin(), vorder.end(), 0);
        std::stable_sort(vorder.begin(), vorder.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    bool try_k(int colors_allowed) {
        k = colors_allowed;
        colors.assign(static_cast<size_t>(g.order()), 0);
        labeled.clear();
        found.reset();
        dfs(0, 0);
        return found.has_value();
    }

    void dfs(int i, int max_used) {
        if (found) return;
        const int n = g.order();
        if (i == n) {
            if (max_used != k) return;  // smaller palettes were tried at smaller k
            if (++checks > budget)
                throw BudgetError("distinguishing search out of configured budget");
            Labeling phi{colors};
            if (!has_nontrivial_automorphism(g, &phi)) found = phi;
            return;
        }
        if (k - max_used > n - i) return;  // cannot reach k colors anymore
        const int v = vorder[static_cast<size_t>(i)];
        const int top = std::min(max_used + 1, k);
        for (int c = 1; c <= top && !found; ++c) {
            colors[static_cast<size_t>(v)] = c;
            if (!labeled_twin_exists(g, colors, v, labeled)) {
                labeled.push_back(v);
                dfs(i + 1, std::max(max_used, c));
                labeled.pop_back();
            }
        }
        colors[static_cast<size_t>(v)] = 0;
    }
};

DistResult disconnected_distinguishing(const Graph& g);

DistResult distinguishing_impl(const Graph& g, bool allow_shortcuts, std::uint64_t max_checks) {
    const int n = g.order();
    if (n < 1) throw GraphError("distinguishing number needs order >= 1");

    if (allow_shortcuts) {
        if (!has_nontrivial_automorphism(g))
            return {1, Labeling::constant(n), DistMethod::AsymmetricShortcut};
        auto parts = complete_multipartite_structure(g);
        bool on_complement = false;
        if (!parts) {
            parts = complete_multipartite_structure(complement(g));
            on_complement = parts.has_value();
        }
        if (parts) {
            // D(G) = D(complement(G)) and Aut(G) = Aut(complement(G)), so a
            // witness built on either side serves for both.
            const int p = multipartite_distinguishing_number(parts->size_counts);
            (void)on_complement;
            return {p, multipartite_witness(n, *parts, p), DistMethod::MultipartiteFormula};
        }
        if (!is_connected(g)) return disconnected_distinguishing(g);
    }

    LabelingSearch search(g, max_checks);
    const int k_stop = is_connected(g) ? metrics(g).max_degree + 1 : n;
    for (int k = 1; k <= k_stop; ++k)
        if (search.try_k(k)) return {k, *search.found, DistMethod::Search};
    throw std::logic_error("distinguishing search failed below its proven bound");
}

DistResult disconnected_distinguishing(const Graph& g) {
    auto comps = connected_components(g);
    // Group components into isomorphism classes.
    std::map<std::string, std::vector<size_t>> classes;
    for (size_t i = 0; i < comps.subgraphs.size(); ++i)
        classes[canonical_certificate(comps.subgraphs[i])].push_back(i);

    int value = 1;
    for (auto& [cert, members] : classes) {
        const Graph& rep = comps.subgraphs[members.front()];
        value = std::max(value, disjoint_copies_distinguishing_number(
                                    rep, static_cast<int>(members.size())));
    }

    // Witness: transport pairwise-inequivalent labelings of each class
    // representative onto the copies through explicit isomorphisms.
    std::vector<int> colors(static_cast<size_t>(g.order()), 0);
    for (auto& [cert, members] : classes) {
        const Graph& rep = comps.subgraphs[members.front()];
        auto reps = inequivalent_distinguishing_labelings(rep, value, members.size());
        if (reps.size() != members.size())
            throw std::logic_error("disjoint-copies witness construction fell short");
        const Permutation rep_to_canon = canonical_form(rep).relabeling;
        for (size_t m = 0; m < members.size(); ++m) {
            const size_t ci = members[m];
            const Graph& comp = comps.subgraphs[ci];
            const Permutation comp_to_canon = canonical_form(comp).relabeling;
            const Permutation iso = comp_to_canon.inverse() * rep_to_canon;  // rep -> comp
            // Local component index -> global vertex.
            std::vector<int> global;
            std::uint64_t mask = comps.vertex_sets[ci];
            while (mask) {
                global.push_back(std::countr_zero(mask));
                mask &= mask - 1;
            }
            for (int v = 0; v < rep.order(); ++v)
                colors[static_cast<size_t>(global[static_cast<size_t>(iso(v))])] = reps[m][v];
        }
    }
    return {value, Labeling{colors}, DistMethod::DisjointCopiesFormula};
}

}  // namespace

DistResult distinguishing_number(const Graph& g) {
    return distinguishing_impl(g, /*allow_shortcuts=*/true, /*max_checks=*/200'000'000);
}

DistResult distinguishing_number_by_search(const Graph& g, std::uint64_t max_checks) {
    return distinguishing_impl(g, /*allow_shortcuts=*/false, max_checks);
}

int disjoint_copies_distinguishing_number(const Graph& h, int c) {
    if (c < 1) throw GraphError("copy count must be >= 1");
    if (!is_connected(h) || h.order() == 0)
        throw GraphError("disjoint copies formula needs a connected component graph");
    for (int k = 1; k <= Graph::kMaxOrder + c; ++k)
        if (count_inequivalent_distinguishing(h, k) >= static_cast<std::uint64_t>(c)) return k;
    throw std::logic_error("disjoint copies formula found no admissible color count");
}

}  // namespace distcrit
