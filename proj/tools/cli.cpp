#include "cli.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "distcrit/criticality.hpp"
#include "distcrit/distinguishing.hpp"
#include "distcrit/enumerate.hpp"
#include "distcrit/graph6.hpp"

namespace distcrit::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Json, Tsv };

struct Emitter {
    Format format;
    std::ostream& out;

    // TSV carries the same fields as the JSON line: key=value pairs,
    // tab-separated, nested values serialized as JSON.
    void record(const ordered_json& j) {
        if (format == Format::Json) {
            out << j.dump() << "\n";
            return;
        }
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out << '\t';
            first = false;
            out << it.key() << '=';
            if (it.value().is_string())
                out << it.value().get<std::string>();
            else
                out << it.value().dump();
        }
        out << "\n";
    }
};

struct InputGraph {
    Graph g;
    std::string g6;
};

// Graphs come from positional arguments when given, otherwise stdin.
// Returns 0 or exit code 3 with the offending line named on err.
int collect_graphs(const std::vector<std::string>& positional, std::istream& in,
                   std::ostream& err, std::vector<InputGraph>& out) {
    if (!positional.empty()) {
        for (std::size_t i = 0; i < positional.size(); ++i) {
            try {
                out.push_back({parse_graph6(positional[i]), positional[i]});
            } catch (const Graph6Error& e) {
                err << "argument " << (i + 1) << " (" << positional[i] << "): " << e.what()
                    << "\n";
                return 3;
            }
        }
        return 0;
    }
    try {
        stream_graph6(in, [&](const Graph& g) {
            out.push_back({g, write_graph6(g)});
            return true;
        });
    } catch (const Graph6Error& e) {
        err << e.what() << "\n";
        return 3;
    }
    return 0;
}

const char* method_name(DistMethod m) {
    switch (m) {
        case DistMethod::Search: return "search";
        case DistMethod::MultipartiteFormula: return "multipartite-formula";
        case DistMethod::DisjointCopiesFormula: return "disjoint-copies-formula";
        case DistMethod::AsymmetricShortcut: return "asymmetric";
    }
    return "?";
}

const char* verdict_name(AuditVerdict v) {
    switch (v) {
        case AuditVerdict::Pass: return "pass";
        case AuditVerdict::Fail: return "fail";
        case AuditVerdict::NotApplicable: return "n/a";
    }
    return "?";
}

ordered_json base_record(const InputGraph& ig) {
    return ordered_json{{"graph6", ig.g6}, {"order", ig.g.order()}};
}

ordered_json audit_json(const StructuralAudit& audit) {
    ordered_json items = ordered_json::array();
    for (const AuditItem& item : audit.items)
        items.push_back(ordered_json{{"id", item.id},
                                     {"verdict", verdict_name(item.verdict)},
                                     {"conjecture", item.conjecture},
                                     {"note", item.note}});
    return items;
}

std::vector<int> subset_vertices(std::uint64_t mask) {
    std::vector<int> vs;
    for (int v = 0; v < 64; ++v)
        if ((mask >> v) & 1u) vs.push_back(v);
    return vs;
}

int cmd_dnum(const std::vector<InputGraph>& graphs, Emitter& em) {
    for (const InputGraph& ig : graphs) {
        DistResult r = distinguishing_number(ig.g);
        ordered_json j = base_record(ig);
        j["D"] = r.value;
        j["witness"] = r.witness.colors;
        j["method"] = method_name(r.method);
        em.record(j);
    }
    return 0;
}

int cmd_count(const std::vector<InputGraph>& graphs, int k, Emitter& em) {
    for (const InputGraph& ig : graphs) {
        ordered_json j = base_record(ig);
        j["k"] = k;
        j["DGk"] = count_inequivalent_distinguishing(ig.g, k);
        em.record(j);
    }
    return 0;
}

int cmd_aut(const std::vector<InputGraph>& graphs, Emitter& em) {
    for (const InputGraph& ig : graphs) {
        AutGroup group = automorphism_group(ig.g);
        ordered_json j = base_record(ig);
        j["autOrder"] = group.order;
        ordered_json gens = ordered_json::array();
        for (const Permutation& p : group.generators) gens.push_back(p.cycle_notation());
        j["generators"] = gens;
        j["orbits"] = group.orbits;
        em.record(j);
    }
    return 0;
}

int cmd_critical(const std::vector<InputGraph>& graphs, int max_order, Emitter& em) {
    DCache cache;
    for (const InputGraph& ig : graphs) {
        CriticalityReport report = is_critical(ig.g, &cache, max_order);
        ordered_json j = base_record(ig);
        j["D"] = report.d;
        j["critical"] = report.is_critical;
        j["strongCritical"] = report.is_strong_critical;
        j["vacuous"] = report.vacuous;
        j["witnessSubset"] = report.witness_subset
                                 ? ordered_json(subset_vertices(*report.witness_subset))
                                 : ordered_json(nullptr);
        j["witnessVertex"] =
            report.witness_vertex ? ordered_json(*report.witness_vertex) : ordered_json(nullptr);
        j["subgraphsEvaluated"] = report.subgraphs_evaluated;
        if (report.is_critical) {
            StructuralAudit audit = audit_structural_theorems(ig.g, report, &cache);
            j["audit"] = audit_json(audit);
            j["auditPass"] = audit.theorems_pass();
        }
        em.record(j);
    }
    return 0;
}

int cmd_gen(int n, bool connected_only, bool trees_only, std::ostream& out) {
    EnumerationConfig cfg;
    cfg.connected_only = connected_only;
    cfg.tree_only = trees_only;
    enumerate_graphs(n, cfg, [&](const Graph& g) { out << write_graph6(g) << "\n"; });
    return 0;
}

int cmd_search(int max_n, std::optional<int> d, bool strong, bool minimal_asymmetric,
               bool disconnected_only, Emitter& em) {
    if (minimal_asymmetric) {
        for (const Graph& g : search_minimal_asymmetric(max_n))
            em.record(ordered_json{{"graph6", write_graph6(g)}, {"order", g.order()}});
        return 0;
    }
    CriticalSearchOptions options;
    options.d_filter = d;
    options.strong_only = strong;
    options.disconnected_only = disconnected_only;
    options.max_order_budget = std::max(max_n, 10);
    for (const CriticalHit& hit : search_critical(max_n, options)) {
        ordered_json j{{"graph6", write_graph6(hit.graph)},
                       {"order", hit.graph.order()},
                       {"D", hit.report.d},
                       {"critical", hit.report.is_critical},
                       {"strongCritical", hit.report.is_strong_critical}};
        if (hit.report.is_critical) {
            j["audit"] = audit_json(hit.audit);
            j["auditPass"] = hit.audit.theorems_pass();
        }
        em.record(j);
    }
    return 0;
}

int cmd_verify(const std::string& suite, int max_n, Emitter& em) {
    SuiteResult result = run_verification_suite(suite, max_n);
    ordered_json fails = ordered_json::array();
    for (const SuiteFailure& f : result.failures)
        fails.push_back(ordered_json{{"graph6", f.graph6}, {"assertion", f.assertion_id}});
    em.record(ordered_json{{"suite", result.name},
                           {"conjecture", result.conjecture},
                           {"assertions", result.assertions_run},
                           {"failures", fails},
                           {"wallMs", result.wall_time.count()},
                           {"passed", result.passed()}});
    // Conjecture counterexamples are discoveries, not errors.
    if (!result.passed() && !result.conjecture) return 1;
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"distinguishing numbers, automorphisms and criticality of small graphs"};
    app.require_subcommand(1);

    std::string format_name = "json";
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));

    std::vector<std::string> graphs_dnum, graphs_count, graphs_aut, graphs_critical;
    auto* dnum = app.add_subcommand("dnum", "distinguishing number D(G) with a witness");
    dnum->add_option("graphs", graphs_dnum, "graph6 strings (stdin when omitted)");

    int count_k = 0;
    auto* count = app.add_subcommand("count", "inequivalent distinguishing k-labelings D(G,k)");
    count->add_option("--k", count_k, "number of colors")->required()->check(CLI::PositiveNumber);
    count->add_option("graphs", graphs_count, "graph6 strings (stdin when omitted)");

    auto* aut = app.add_subcommand("aut", "automorphism group order, generators and orbits");
    aut->add_option("graphs", graphs_aut, "graph6 strings (stdin when omitted)");

    int critical_budget = 10;
    auto* critical = app.add_subcommand("critical", "criticality report and structural audit");
    critical->add_option("--max-order", critical_budget, "order budget for the subgraph scan");
    critical->add_option("graphs", graphs_critical, "graph6 strings (stdin when omitted)");

    int gen_n = 0;
    bool gen_connected = false, gen_trees = false;
    auto* gen = app.add_subcommand("gen", "all graphs of order n up to isomorphism, graph6");
    gen->add_option("--n", gen_n, "graph order")->required()->check(CLI::PositiveNumber);
    gen->add_flag("--connected", gen_connected, "connected graphs only");
    gen->add_flag("--trees", gen_trees, "trees only");

    int search_max_n = 0;
    std::optional<int> search_d;
    bool search_strong = false, search_min_asym = false, search_disconnected = false;
    auto* search = app.add_subcommand("search", "exhaustive critical / asymmetric graph search");
    search->add_option("--max-n", search_max_n, "largest order to scan")
        ->required()
        ->check(CLI::PositiveNumber);
    search->add_option("--d", search_d, "restrict to D(G) = d");
    search->add_flag("--strong", search_strong, "strong-critical graphs instead of critical");
    search->add_flag("--minimal-asymmetric", search_min_asym, "minimal asymmetric graphs");
    search->add_flag("--disconnected-only", search_disconnected, "skip connected graphs");

    std::string verify_suite;
    int verify_max_n = 0;
    auto* verify = app.add_subcommand("verify", "run one theorem/conjecture suite");
    verify->add_option("--suite", verify_suite, "suite name")
        ->required()
        ->check(CLI::IsMember(verification_suite_names()));
    verify->add_option("--max-n", verify_max_n, "largest order to scan")
        ->required()
        ->check(CLI::PositiveNumber);

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 convention
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Emitter em{format_name == "tsv" ? Format::Tsv : Format::Json, out};
    try {
        auto with_graphs = [&](const std::vector<std::string>& positional,
                               const std::function<int(const std::vector<InputGraph>&)>& fn) {
            std::vector<InputGraph> graphs;
            int rc = collect_graphs(positional, in, err, graphs);
            return rc != 0 ? rc : fn(graphs);
        };
        if (app.got_subcommand(dnum))
            return with_graphs(graphs_dnum, [&](const auto& gs) { return cmd_dnum(gs, em); });
        if (app.got_subcommand(count))
            return with_graphs(graphs_count,
                               [&](const auto& gs) { return cmd_count(gs, count_k, em); });
        if (app.got_subcommand(aut))
            return with_graphs(graphs_aut, [&](const auto& gs) { return cmd_aut(gs, em); });
        if (app.got_subcommand(critical))
            return with_graphs(graphs_critical, [&](const auto& gs) {
                return cmd_critical(gs, critical_budget, em);
            });
        if (app.got_subcommand(gen)) return cmd_gen(gen_n, gen_connected, gen_trees, out);
        if (app.got_subcommand(search))
            return cmd_search(search_max_n, search_d, search_strong, search_min_asym,
                              search_disconnected, em);
        if (app.got_subcommand(verify)) return cmd_verify(verify_suite, verify_max_n, em);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace distcrit::cli
