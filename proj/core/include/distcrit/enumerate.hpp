#ifndef DISTCRIT_ENUMERATE_HPP
#define DISTCRIT_ENUMERATE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "distcrit/criticality.hpp"
#include "distcrit/graph.hpp"

namespace distcrit {

struct EnumerationConfig {
    bool connected_only = false;
    bool tree_only = false;
    std::function<bool(const Graph&)> predicate;  // extra filter, may be empty
    int hard_stop = 10;                           // internal generator ceiling
};

/// Orderly generation of all graphs of order n up to isomorphism: one
/// representative per class, deterministic order. Filters apply to the
/// emitted graphs only, never to the generation itself.
void enumerate_graphs(int n, const EnumerationConfig& config,
                      const std::function<void(const Graph&)>& emit);

std::vector<Graph> enumerate_graphs(int n, const EnumerationConfig& config = {});

/// Classes of every order 1..max_n, ascending order then generation order.
std::vector<Graph> enumerate_graphs_up_to(int max_n, const EnumerationConfig& config = {});

struct CriticalHit {
    Graph graph;
    CriticalityReport report;
    StructuralAudit audit;
};

struct CriticalSearchOptions {
    std::optional<int> d_filter;
    bool disconnected_only = false;
    bool strong_only = false;  // keep strong-critical graphs instead of critical
    int max_order_budget = 10;
};

/// All critical graphs of order <= max_n with reports and audits, ordered
/// by (order, canonical certificate).
std::vector<CriticalHit> search_critical(int max_n, const CriticalSearchOptions& options = {},
                                         DCache* cache = nullptr);

/// All minimal asymmetric graphs of order <= max_n, ordered by (order,
/// canonical certificate).
std::vector<Graph> search_minimal_asymmetric(int max_n);

struct SuiteFailure {
    std::string graph6;
    std::string assertion_id;
};

struct SuiteResult {
    std::string name;
    bool conjecture = false;  // conjecture suites report without failing the run
    std::uint64_t assertions_run = 0;
    std::vector<SuiteFailure> failures;
    std::chrono::milliseconds wall_time{0};

    bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& verification_suite_names();

/// Runs one named theorem/conjecture suite over every graph within max_n.
/// Unknown suite ids raise GraphError.
SuiteResult run_verification_suite(const std::string& name, int max_n, DCache* cache = nullptr);

/// Worker count: DISTCRIT_THREADS if set, else hardware concurrency.
int worker_count();

/// Applies fn to every index in [0, count) on the worker pool.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace distcrit

#endif
