#include "distcrit/criticality.hpp"

#include <algorithm>
#include <bit>

#include "distcrit/metrics.hpp"

namespace distcrit {

int cached_distinguishing_number(const Graph& g, DCache* cache, std::uint64_t* hits) {
    if (!cache) return distinguishing_number(g).value;
    const std::string cert = canonical_certificate(g);
    if (auto value = cache->lookup(cert)) {
        if (hits) ++*hits;
        return *value;
    }
    const int value = distinguishing_number(g).value;
    cache->insert(cert, value);
    return value;
}

namespace {

// Visits nonempty proper subsets of {0..n-1}: size descending, positions
// lexicographic within a size. Stops early when the visitor returns false.
void for_each_proper_subset(int n, const std::function<bool(std::uint64_t)>& visit) {
    for (int size = n - 1; size >= 1; --size) {
        std::vector<int> idx(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (int i : idx) mask |= std::uint64_t{1} << i;
            if (!visit(mask)) return;
            int at = size - 1;
            while (at >= 0 && idx[static_cast<size_t>(at)] == n - (size - at)) --at;
            if (at < 0) break;
            ++idx[static_cast<size_t>(at)];
            for (int t = at + 1; t < size; ++t)
                idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
        }
    }
}

}  // namespace

StrongCriticalityResult is_strong_critical(const Graph& g, DCache* cache) {
    if (g.order() < 2) throw GraphError("strong criticality is undefined for order < 2");
    StrongCriticalityResult out;
    out.d = cached_distinguishing_number(g, cache);
    out.is_strong_critical = true;
    for (int v = 0; v < g.order(); ++v) {
        if (cached_distinguishing_number(delete_vertex(g, v), cache) == out.d) {
            out.is_strong_critical = false;
            out.witness_vertex = v;
            break;
        }
    }
    return out;
}

CriticalityReport is_critical(const Graph& g, DCache* cache, int max_order) {
    const int n = g.order();
    if (n < 1) throw GraphError("criticality needs order >= 1");
    if (n > max_order)
        throw BudgetError("criticality budget exceeded: order " + std::to_string(n) + " > " +
                          std::to_string(max_order));

    CriticalityReport report;
    report.d = cached_distinguishing_number(g, cache, &report.cache_hits);

    if (n == 1) {
        report.is_critical = true;
        report.is_strong_critical = true;  // matches critical => strong-critical
        report.vacuous = true;
        return report;
    }

    report.is_critical = true;
    for_each_proper_subset(n, [&](std::uint64_t subset) {
        ++report.subgraphs_evaluated;
        const Graph sub = induced_subgraph(g, subset);
        if (cached_distinguishing_number(sub, cache, &report.cache_hits) == report.d) {
            report.is_critical = false;
            report.witness_subset = subset;
            return false;
        }
        return true;
    });

    auto strong = is_strong_critical(g, cache);
    report.is_strong_critical = strong.is_strong_critical;
    report.witness_vertex = strong.witness_vertex;
    return report;
}

bool is_minimal_asymmetric(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw GraphError("minimal asymmetry is defined for order >= 2");
    if (has_nontrivial_automorphism(g)) return false;
    bool minimal = true;
    for_each_proper_subset(n, [&](std::uint64_t subset) {
        if (std::popcount(subset) < 2) return true;
        if (!has_nontrivial_automorphism(induced_subgraph(g, subset))) {
            minimal = false;
            return false;
        }
        return true;
    });
    return minimal;
}

namespace {

struct AuditContext {
    const Graph& g;
    const CriticalityReport& report;
    DCache* cache;
    int n;
    int d;
    GraphMetrics gm;
    Graph comp;  // complement
    bool connected;
    bool comp_connected;
    bool is_c5;
    ComponentDecomposition comps;
    bool comps_isomorphic = false;
    Graph h;  // component representative when comps are isomorphic
    int c = 0;
};

bool is_balanced_complete_bipartite(const Graph& g) {
    const int n = g.order();
    if (n < 2 || n % 2 != 0) return false;
    return are_isomorphic(g, complete_bipartite_graph(n / 2, n / 2));
}

void add(StructuralAudit& audit, std::string id, AuditVerdict verdict, bool conjecture = false,
         std::string note = {}) {
    audit.items.push_back({std::move(id), verdict, conjecture, std::move(note)});
}

AuditVerdict verdict_of(bool pass) { return pass ? AuditVerdict::Pass : AuditVerdict::Fail; }

// Every distinguishing labeling of H with D(H) colors splits the degree
// sequence evenly across the color classes.
bool color_class_degrees_equal(const Graph& h, int dh) {
    const int m = h.order();
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) {
        total *= static_cast<std::uint64_t>(dh);
        if (total > (std::uint64_t{1} << 28))
            throw BudgetError("color-class audit out of configured budget");
    }
    std::vector<int> colors(static_cast<size_t>(m), 1);
    while (true) {
        Labeling phi{colors};
        if (is_distinguishing(h, phi)) {
            std::vector<std::vector<int>> class_degrees(static_cast<size_t>(dh));
            for (int v = 0; v < m; ++v)
                class_degrees[static_cast<size_t>(colors[static_cast<size_t>(v)] - 1)].push_back(
                    h.degree(v));
            for (auto& seq : class_degrees) std::sort(seq.begin(), seq.end());
            for (int i = 1; i < dh; ++i)
                if (class_degrees[static_cast<size_t>(i)] != class_degrees[0]) return false;
        }
        int at = m - 1;
        while (at >= 0 && colors[static_cast<size_t>(at)] == dh) colors[static_cast<size_t>(at--)] = 1;
        if (at < 0) return true;
        ++colors[static_cast<size_t>(at)];
    }
}

}  // namespace

StructuralAudit audit_structural_theorems(const Graph& g, const CriticalityReport& report,
                                          DCache* cache) {
    if (!report.is_critical)
        throw GraphError("structural audit requires a verified-critical graph");

    AuditContext ctx{g, report, cache, g.order(), report.d, metrics(g), complement(g),
                     false, false, false, connected_components(g)};
    ctx.connected = (ctx.gm.component_count == 1);
    ctx.comp_connected = is_connected(ctx.comp);
    ctx.is_c5 = (ctx.n == 5) && are_isomorphic(g, cycle_graph(5));
    ctx.c = static_cast<int>(ctx.comps.subgraphs.size());
    if (ctx.c > 1) {
        ctx.comps_isomorphic = true;
        const std::string cert0 = canonical_certificate(ctx.comps.subgraphs[0]);
        for (size_t i = 1; i < ctx.comps.subgraphs.size(); ++i)
            if (canonical_certificate(ctx.comps.subgraphs[i]) != cert0) {
                ctx.comps_isomorphic = false;
                break;
            }
        ctx.h = ctx.comps.subgraphs[0];
    }

    StructuralAudit audit;
    const int n = ctx.n, d = ctx.d;

    // Maximum-degree cases.
    if (ctx.connected && d >= 3) {
        const bool in_equality_set = are_isomorphic(g, complete_graph(d)) ||
                                     (d >= 2 && n == 2 * (d - 1) &&
                                      are_isomorphic(g, complete_bipartite_graph(d - 1, d - 1))) ||
                                     ctx.is_c5;
        if (ctx.gm.max_degree == d - 1)
            add(audit, "delta-cases", verdict_of(in_equality_set));
        else
            add(audit, "delta-cases", verdict_of(!in_equality_set && ctx.gm.max_degree >= d));
    } else {
        add(audit, "delta-cases", AuditVerdict::NotApplicable);
    }

    // delta(G) <= n - d - 1 when G and its complement are connected, G != C5.
    if (d >= 3 && ctx.connected && ctx.comp_connected && !ctx.is_c5)
        add(audit, "min-degree", verdict_of(ctx.gm.min_degree <= n - d - 1));
    else
        add(audit, "min-degree", AuditVerdict::NotApplicable);

    // No induced K_{1,d}.
    if (d >= 3)
        add(audit, "star-free", verdict_of(!has_induced_star(g, d)));
    else
        add(audit, "star-free", AuditVerdict::NotApplicable);

    // omega(G) <= d-1 unless G = K_d.
    if (d >= 3 && !are_isomorphic(g, complete_graph(d)))
        add(audit, "clique-bound", verdict_of(ctx.gm.clique_number <= d - 1));
    else
        add(audit, "clique-bound", AuditVerdict::NotApplicable);

    // alpha(G) <= d-1 unless G is the edgeless graph of order d.
    if (d >= 3 && !are_isomorphic(g, edgeless_graph(d)))
        add(audit, "independence-bound", verdict_of(ctx.gm.independence_number <= d - 1));
    else
        add(audit, "independence-bound", AuditVerdict::NotApplicable);

    // Triangle-free connected critical graphs are K2, K_{d-1,d-1} or C5.
    if (d >= 2 && ctx.connected && ctx.gm.triangle_free) {
        const bool listed = are_isomorphic(g, complete_graph(2)) ||
                            (d >= 2 && n == 2 * (d - 1) &&
                             are_isomorphic(g, complete_bipartite_graph(d - 1, d - 1))) ||
                            ctx.is_c5;
        add(audit, "triangle-free-classification", verdict_of(listed));
    } else {
        add(audit, "triangle-free-classification", AuditVerdict::NotApplicable);
    }

    // A claw-free graph with G, complement connected and G != C5 cannot be
    // critical, so a critical one here must contain an induced claw.
    if (d >= 2 && ctx.connected && ctx.comp_connected && !ctx.is_c5)
        add(audit, "claw-free", verdict_of(!ctx.gm.claw_free));
    else
        add(audit, "claw-free", AuditVerdict::NotApplicable);

    // Disconnected critical without isolated vertices: complement is a
    // connected 2-self-centered graph.
    if (!ctx.connected && ctx.gm.min_degree >= 1)
        add(audit, "disconnected-complement-2sc",
            verdict_of(ctx.comp_connected && is_k_self_centered(ctx.comp, 2)));
    else
        add(audit, "disconnected-complement-2sc", AuditVerdict::NotApplicable);

    if (!ctx.connected && d >= 3)
        add(audit, "components-isomorphic", verdict_of(ctx.comps_isomorphic));
    else
        add(audit, "components-isomorphic", AuditVerdict::NotApplicable);

    const bool disconnected_iso = !ctx.connected && d >= 3 && ctx.comps_isomorphic;
    const int dh = disconnected_iso ? cached_distinguishing_number(ctx.h, cache) : 0;

    if (disconnected_iso) {
        const auto count_dm1 = count_inequivalent_distinguishing(ctx.h, d - 1);
        const auto count_d = count_inequivalent_distinguishing(ctx.h, d);
        add(audit, "component-count-relation",
            verdict_of(static_cast<std::uint64_t>(ctx.c) == count_dm1 + 1 &&
                       count_d >= static_cast<std::uint64_t>(ctx.c)));
        add(audit, "component-count-upper",
            verdict_of(static_cast<std::uint64_t>(ctx.c) >
                       count_inequivalent_distinguishing(ctx.h, dh)));
    } else {
        add(audit, "component-count-relation", AuditVerdict::NotApplicable);
        add(audit, "component-count-upper", AuditVerdict::NotApplicable);
    }

    // c(G) >= d/2 forces complete components with a binomial count.
    if (disconnected_iso && 2 * ctx.c >= d) {
        bool pass = is_complete(ctx.h);
        if (pass) {
            const int s = ctx.h.order();
            std::uint64_t binom_dm1 = 1, binom_d = 1;
            // small exact binomials
            auto binom = [](int a, int b) {
                if (b < 0 || b > a) return std::uint64_t{0};
                std::uint64_t r = 1;
                for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) /
                                                  static_cast<std::uint64_t>(i);
                return r;
            };
            binom_dm1 = binom(d - 1, s);
            binom_d = binom(d, s);
            pass = (static_cast<std::uint64_t>(ctx.c) == binom_dm1 + 1) &&
                   (binom_d >= static_cast<std::uint64_t>(ctx.c));
        }
        add(audit, "many-components-complete", verdict_of(pass));
    } else {
        add(audit, "many-components-complete", AuditVerdict::NotApplicable);
    }

    // c(G) < d/2 with d >= 5: d = D(H)+1 and D(H) >= 4.
    const bool few = disconnected_iso && d >= 5 && 2 * ctx.c < d;
    if (few)
        add(audit, "few-components", verdict_of(d == dh + 1 && dh >= 4));
    else
        add(audit, "few-components", AuditVerdict::NotApplicable);

    if (few && !is_complete(ctx.h)) {
        add(audit, "color-class-degrees", verdict_of(color_class_degrees_equal(ctx.h, dh)));
        // Each degree value occurs at least 2 c(G)(d-1) times in G.
        std::vector<int> degrees = ctx.gm.degree_sequence;
        bool pass = true;
        for (size_t i = 0; i < degrees.size();) {
            size_t j = i;
            while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
            if (static_cast<int>(j - i) < 2 * ctx.c * (d - 1)) {
                pass = false;
                break;
            }
            i = j;
        }
        add(audit, "degree-count-lower-bound", verdict_of(pass));
    } else {
        add(audit, "color-class-degrees", AuditVerdict::NotApplicable);
        add(audit, "degree-count-lower-bound", AuditVerdict::NotApplicable);
    }

    if (few)
        add(audit, "divisibility", verdict_of(ctx.h.order() % dh == 0));
    else
        add(audit, "divisibility", AuditVerdict::NotApplicable);

    if (few) {
        const bool comp_is_kd = are_isomorphic(ctx.comp, complete_graph(d));
        const bool comp_is_bal = (d >= 2) && (n == 2 * (d - 1)) &&
                                 are_isomorphic(ctx.comp, complete_bipartite_graph(d - 1, d - 1));
        if (!comp_is_kd && !comp_is_bal)
            add(audit, "component-cap", verdict_of(3 * ctx.c <= d - 1));
        else
            add(audit, "component-cap", AuditVerdict::NotApplicable);
    } else {
        add(audit, "component-cap", AuditVerdict::NotApplicable);
    }

    // Conjectures (reported, never treated as theorem failures).
    add(audit, "conjecture-regular",
        verdict_of(ctx.gm.is_regular && ctx.gm.regular_k <= d), /*conjecture=*/true);
    if (!ctx.connected) {
        bool all_complete = true;
        for (const Graph& comp : ctx.comps.subgraphs)
            if (!is_complete(comp)) {
                all_complete = false;
                break;
            }
        add(audit, "conjecture-complete-components", verdict_of(all_complete), true);
    } else {
        add(audit, "conjecture-complete-components", AuditVerdict::NotApplicable, true);
    }

    return audit;
}

}  // namespace distcrit
