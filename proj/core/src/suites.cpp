#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "distcrit/enumerate.hpp"
#include "distcrit/graph6.hpp"
#include "distcrit/metrics.hpp"

namespace distcrit {

namespace {

struct SuiteContext {
    int max_n;
    DCache* cache;
    SuiteResult result;

    void fail(const Graph& g, const std::string& assertion) {
        result.failures.push_back({write_graph6(g), assertion});
    }
};

// Criticality reports for every graph of order <= max_n, computed in
// parallel; several suites share this scan.
std::vector<std::pair<Graph, CriticalityReport>> critical_scan(int max_n, DCache* cache) {
    std::vector<std::pair<Graph, CriticalityReport>> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Graph> graphs = enumerate_graphs(n);
        std::vector<CriticalityReport> reports(graphs.size());
        parallel_for(graphs.size(), [&](std::size_t i) {
            reports[i] = is_critical(graphs[i], cache, std::max(n, 10));
        });
        for (std::size_t i = 0; i < graphs.size(); ++i)
            out.emplace_back(std::move(graphs[i]), reports[i]);
    }
    return out;
}

std::set<std::string> certs_of(const std::vector<Graph>& graphs, int max_n) {
    std::set<std::string> certs;
    for (const Graph& g : graphs)
        if (g.order() <= max_n) certs.insert(canonical_certificate(g));
    return certs;
}

// Expected-set suite core: critical graphs with D = d must match `expected`
// exactly (restricted to orders within max_n).
void check_exact_critical_set(SuiteContext& ctx, int d, const std::vector<Graph>& expected,
                              bool disconnected_only, const std::string& id) {
    const std::set<std::string> want = certs_of(expected, ctx.max_n);
    std::set<std::string> got;
    for (auto& [g, report] : critical_scan(ctx.max_n, ctx.cache)) {
        ++ctx.result.assertions_run;
        if (!report.is_critical || report.d != d) continue;
        if (disconnected_only && is_connected(g)) continue;
        const std::string cert = canonical_certificate(g);
        got.insert(cert);
        if (!want.contains(cert)) ctx.fail(g, id + ":unexpected-member");
    }
    if (!std::includes(got.begin(), got.end(), want.begin(), want.end()))
        ctx.result.failures.push_back({"", id + ":missing-expected-member"});
}

void suite_no_1_critical(SuiteContext& ctx) {
    for (auto& [g, report] : critical_scan(ctx.max_n, ctx.cache)) {
        if (g.order() < 2) continue;
        ++ctx.result.assertions_run;
        if (report.is_critical && report.d == 1) ctx.fail(g, "no-1-critical");
    }
}

void suite_two_critical(SuiteContext& ctx) {
    check_exact_critical_set(ctx, 2, {complete_graph(2), edgeless_graph(2)}, false, "two-critical");
}

void suite_three_critical(SuiteContext& ctx) {
    check_exact_critical_set(ctx, 3,
                             {cycle_graph(3), cycle_graph(4), cycle_graph(5),
                              complement(cycle_graph(3)), complement(cycle_graph(4))},
                             false, "three-critical");
}

void suite_three_critical_maxdeg(SuiteContext& ctx) {
    for (auto& [g, report] : critical_scan(ctx.max_n, ctx.cache)) {
        if (!report.is_critical || report.d != 3) continue;
        ++ctx.result.assertions_run;
        if (metrics(g).max_degree > 2) ctx.fail(g, "three-critical-maxdeg");
    }
}

void suite_five_six_critical_disconnected(SuiteContext& ctx) {
    check_exact_critical_set(ctx, 5, {edgeless_graph(5), disjoint_copies_graph(2, complete_graph(4))},
                             true, "five-critical-disconnected");
    std::vector<Graph> six{edgeless_graph(6)};
    if (ctx.max_n >= 10) six.push_back(disjoint_copies_graph(2, complete_graph(5)));
    check_exact_critical_set(ctx, 6, six, true, "six-critical-disconnected");
}

void suite_delta_plus_one(SuiteContext& ctx) {
    EnumerationConfig cfg;
    cfg.connected_only = true;
    for (int n = 1; n <= ctx.max_n; ++n) {
        std::vector<Graph> graphs = enumerate_graphs(n, cfg);
        std::vector<int> dvals(graphs.size());
        parallel_for(graphs.size(), [&](std::size_t i) {
            dvals[i] = cached_distinguishing_number(graphs[i], ctx.cache);
        });
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const Graph& g = graphs[i];
            ++ctx.result.assertions_run;
            const int max_deg = metrics(g).max_degree;
            if (dvals[i] > max_deg + 1) {
                ctx.fail(g, "delta-plus-one:bound");
                continue;
            }
            const bool in_equality_set =
                is_complete(g) ||
                (n % 2 == 0 && n >= 2 && are_isomorphic(g, complete_bipartite_graph(n / 2, n / 2))) ||
                (n == 5 && are_isomorphic(g, cycle_graph(5)));
            if ((dvals[i] == max_deg + 1) != in_equality_set)
                ctx.fail(g, "delta-plus-one:equality-classification");
        }
    }
}

void suite_complement_invariance(SuiteContext& ctx) {
    for (int n = 1; n <= ctx.max_n; ++n) {
        std::vector<Graph> graphs = enumerate_graphs(n);
        std::vector<char> bad(graphs.size(), 0);
        parallel_for(graphs.size(), [&](std::size_t i) {
            bad[i] = cached_distinguishing_number(graphs[i], ctx.cache) !=
                             cached_distinguishing_number(complement(graphs[i]), ctx.cache)
                         ? 1
                         : 0;
        });
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            ++ctx.result.assertions_run;
            if (bad[i]) ctx.fail(graphs[i], "complement-invariance");
        }
    }
}

void suite_critical_tree(SuiteContext& ctx) {
    EnumerationConfig cfg;
    cfg.tree_only = true;
    for (int n = 1; n <= ctx.max_n; ++n) {
        for (const Graph& t : enumerate_graphs(n, cfg)) {
            ++ctx.result.assertions_run;
            const bool critical = is_critical(t, ctx.cache, std::max(n, 10)).is_critical;
            const bool is_k2 = (n == 2);
            if (n == 1) continue;  // K1 is vacuously critical, outside the tree claim
            if (critical != is_k2) ctx.fail(t, "critical-tree");
        }
    }
}

void suite_tree_bound(SuiteContext& ctx) {
    EnumerationConfig cfg;
    cfg.tree_only = true;
    for (int n = 3; n <= ctx.max_n; ++n) {
        for (const Graph& t : enumerate_graphs(n, cfg)) {
            ++ctx.result.assertions_run;
            if (cached_distinguishing_number(t, ctx.cache) > metrics(t).max_degree)
                ctx.fail(t, "tree-bound");
        }
    }
}

void suite_multipartite_formula(SuiteContext& ctx) {
    for (int n = 1; n <= ctx.max_n; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            auto parts = complete_multipartite_structure(g);
            if (!parts) continue;
            ++ctx.result.assertions_run;
            const int formula = multipartite_distinguishing_number(parts->size_counts);
            const int searched = distinguishing_number_by_search(g).value;
            if (formula != searched) ctx.fail(g, "multipartite-formula");
        }
    }
}

void suite_disjoint_copies_formula(SuiteContext& ctx) {
    EnumerationConfig cfg;
    cfg.connected_only = true;
    for (int h_order = 1; h_order <= std::min(4, ctx.max_n); ++h_order) {
        for (const Graph& h : enumerate_graphs(h_order, cfg)) {
            for (int c = 1; c <= 4; ++c) {
                if (c * h_order > ctx.max_n) continue;
                ++ctx.result.assertions_run;
                const int formula = disjoint_copies_distinguishing_number(h, c);
                const Graph g = disjoint_copies_graph(c, h);
                const int searched =
                    distinguishing_number_by_search(g, /*max_checks=*/4'000'000'000ULL).value;
                if (formula != searched) ctx.fail(g, "disjoint-copies-formula");
            }
        }
    }
}

void suite_conjecture_regularity(SuiteContext& ctx) {
    for (auto& [g, report] : critical_scan(ctx.max_n, ctx.cache)) {
        if (!report.is_critical) continue;
        ++ctx.result.assertions_run;
        const GraphMetrics m = metrics(g);
        if (!(m.is_regular && m.regular_k <= report.d)) ctx.fail(g, "conjecture-regularity");
    }
}

void suite_conjecture_complete_components(SuiteContext& ctx) {
    for (auto& [g, report] : critical_scan(ctx.max_n, ctx.cache)) {
        if (!report.is_critical || is_connected(g)) continue;
        ++ctx.result.assertions_run;
        for (const Graph& comp : connected_components(g).subgraphs)
            if (!is_complete(comp)) {
                ctx.fail(g, "conjecture-complete-components");
                break;
            }
    }
}

const std::map<std::string, std::pair<void (*)(SuiteContext&), bool>>& suite_table() {
    static const std::map<std::string, std::pair<void (*)(SuiteContext&), bool>> table{
        {"no-1-critical", {suite_no_1_critical, false}},
        {"two-critical", {suite_two_critical, false}},
        {"delta-plus-one", {suite_delta_plus_one, false}},
        {"complement-invariance", {suite_complement_invariance, false}},
        {"three-critical", {suite_three_critical, false}},
        {"three-critical-maxdeg", {suite_three_critical_maxdeg, false}},
        {"five-six-critical-disconnected", {suite_five_six_critical_disconnected, false}},
        {"critical-tree", {suite_critical_tree, false}},
        {"tree-bound", {suite_tree_bound, false}},
        {"multipartite-formula", {suite_multipartite_formula, false}},
        {"disjoint-copies-formula", {suite_disjoint_copies_formula, false}},
        {"conjecture-regularity", {suite_conjecture_regularity, true}},
        {"conjecture-complete-components", {suite_conjecture_complete_components, true}},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& verification_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (auto& [name, entry] : suite_table()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_verification_suite(const std::string& name, int max_n, DCache* cache) {
    auto it = suite_table().find(name);
    if (it == suite_table().end()) throw GraphError("unknown verification suite: " + name);
    DCache local;
    SuiteContext ctx{max_n, cache ? cache : &local, {}};
    ctx.result.name = name;
    ctx.result.conjecture = it->second.second;
    const auto start = std::chrono::steady_clock::now();
    it->second.first(ctx);
    ctx.result.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return ctx.result;
}

}  // namespace distcrit
