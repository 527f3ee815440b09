#include "distcrit/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <thread>

#include "distcrit/aut.hpp"
#include "distcrit/graph6.hpp"
#include "distcrit/metrics.hpp"

namespace distcrit {

int worker_count() {
    if (const char* env = std::getenv("DISTCRIT_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& t : threads) t.join();
}

namespace {

Graph extend_with_vertex(const Graph& parent, std::uint64_t neighbor_set) {
    const int m = parent.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v)
            if (parent.adjacent(u, v)) edges.emplace_back(u, v);
        if ((neighbor_set >> u) & 1u) edges.emplace_back(u, m);
    }
    return build_graph(m + 1, edges);
}

// Canonical-augmentation acceptance: the child survives iff its new vertex
// lies in the same Aut-orbit as the vertex holding the last canonical
// position, i.e. deleting the canonical vertex reproduces the parent.
bool accept_child(const Graph& child) {
    const int last = child.order() - 1;
    const Permutation relabel = canonical_form(child).relabeling;
    int canonical_vertex = -1;
    for (int v = 0; v < child.order(); ++v)
        if (relabel(v) == last) {
            canonical_vertex = v;
            break;
        }
    if (canonical_vertex == last) return true;
    return find_automorphism_mapping(child, last, canonical_vertex).has_value();
}

void generate_order(int n, int hard_stop, const std::function<void(const Graph&)>& emit) {
    if (n < 1) throw GraphError("enumeration needs order >= 1");
    if (n > hard_stop)
        throw BudgetError("internal generator capped at order " + std::to_string(hard_stop) +
                          "; use an external graph6 stream beyond that");
    std::vector<Graph> level{build_graph(1, {})};
    for (int m = 2; m <= n; ++m) {
        std::vector<Graph> next_level;
        const bool last_level = (m == n);
        for (const Graph& parent : level) {
            std::vector<std::string> seen;  // child certs for this parent
            const std::uint64_t subsets = std::uint64_t{1} << parent.order();
            for (std::uint64_t s = 0; s < subsets; ++s) {
                Graph child = extend_with_vertex(parent, s);
                if (!accept_child(child)) continue;
                std::string cert = canonical_certificate(child);
                if (std::find(seen.begin(), seen.end(), cert) != seen.end()) continue;
                seen.push_back(std::move(cert));
                if (last_level)
                    emit(child);
                else
                    next_level.push_back(std::move(child));
            }
        }
        if (last_level) return;
        level = std::move(next_level);
    }
    // n == 1
    for (const Graph& g : level) emit(g);
}

}  // namespace

void enumerate_graphs(int n, const EnumerationConfig& config,
                      const std::function<void(const Graph&)>& emit) {
    generate_order(n, config.hard_stop, [&](const Graph& g) {
        if (config.connected_only && !is_connected(g)) return;
        if (config.tree_only && !is_tree(g)) return;
        if (config.predicate && !config.predicate(g)) return;
        emit(g);
    });
}

std::vector<Graph> enumerate_graphs(int n, const EnumerationConfig& config) {
    std::vector<Graph> out;
    enumerate_graphs(n, config, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> enumerate_graphs_up_to(int max_n, const EnumerationConfig& config) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        enumerate_graphs(n, config, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<CriticalHit> search_critical(int max_n, const CriticalSearchOptions& options,
                                         DCache* cache) {
    DCache local;
    if (!cache) cache = &local;
    std::vector<CriticalHit> hits;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Graph> graphs = enumerate_graphs(n);
        std::vector<std::optional<CriticalHit>> results(graphs.size());
        parallel_for(graphs.size(), [&](std::size_t i) {
            const Graph& g = graphs[i];
            if (options.disconnected_only && is_connected(g)) return;
            CriticalityReport report = is_critical(g, cache, options.max_order_budget);
            const bool keep = options.strong_only ? (g.order() >= 2 && report.is_strong_critical)
                                                  : report.is_critical;
            if (!keep) return;
            if (options.d_filter && report.d != *options.d_filter) return;
            CriticalHit hit{g, report, {}};
            if (report.is_critical) hit.audit = audit_structural_theorems(g, report, cache);
            results[i] = std::move(hit);
        });
        // Deterministic emission independent of scheduling.
        std::vector<CriticalHit> level;
        for (auto& r : results)
            if (r) level.push_back(std::move(*r));
        std::sort(level.begin(), level.end(), [](const CriticalHit& a, const CriticalHit& b) {
            return canonical_certificate(a.graph) < canonical_certificate(b.graph);
        });
        for (auto& hit : level) hits.push_back(std::move(hit));
    }
    return hits;
}

std::vector<Graph> search_minimal_asymmetric(int max_n) {
    std::vector<Graph> found;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<Graph> graphs = enumerate_graphs(n);
        std::vector<char> keep(graphs.size(), 0);
        parallel_for(graphs.size(), [&](std::size_t i) {
            keep[i] = is_minimal_asymmetric(graphs[i]) ? 1 : 0;
        });
        std::vector<Graph> level;
        for (std::size_t i = 0; i < graphs.size(); ++i)
            if (keep[i]) level.push_back(graphs[i]);
        std::sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
            return canonical_certificate(a) < canonical_certificate(b);
        });
        for (auto& g : level) found.push_back(std::move(g));
    }
    return found;
}

}  // namespace distcrit
