#ifndef DISTCRIT_CRITICALITY_HPP
#define DISTCRIT_CRITICALITY_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "distcrit/distinguishing.hpp"
#include "distcrit/graph.hpp"

namespace distcrit {

/// Shared memo of distinguishing numbers keyed by canonical certificate.
/// Concurrent readers, single-writer insertion.
class DCache {
public:
    std::optional<int> lookup(const std::string& cert) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(cert);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const std::string& cert, int value) {
        std::unique_lock lock(mutex_);
        map_.emplace(cert, value);
    }

    size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, int> map_;
};

/// D(g) through the cache (computes and stores on a miss).
int cached_distinguishing_number(const Graph& g, DCache* cache, std::uint64_t* hits = nullptr);

struct CriticalityReport {
    int d = 0;
    bool is_critical = false;
    bool is_strong_critical = false;
    bool vacuous = false;  // K1: no nonempty proper induced subgraph exists
    /// Non-critical witness: a proper induced subgraph with equal D.
    std::optional<std::uint64_t> witness_subset;
    /// Non-strong-critical witness: a vertex whose deletion keeps D.
    std::optional<int> witness_vertex;
    std::uint64_t subgraphs_evaluated = 0;
    std::uint64_t cache_hits = 0;
};

/// Full criticality decision: d = D(g), then every nonempty proper vertex
/// subset, largest first, with early exit on the first witness.
/// The strong variant is filled in for order >= 2.
CriticalityReport is_critical(const Graph& g, DCache* cache = nullptr, int max_order = 10);

struct StrongCriticalityResult {
    int d = 0;
    bool is_strong_critical = false;
    std::optional<int> witness_vertex;
};

/// D(g - v) != D(g) for every vertex v. Rejects order 1.
StrongCriticalityResult is_strong_critical(const Graph& g, DCache* cache = nullptr);

/// |Aut(g)| = 1 and every induced subgraph on 2 <= |S| < n vertices has a
/// nontrivial automorphism. Rejects order < 2.
bool is_minimal_asymmetric(const Graph& g);

enum class AuditVerdict { Pass, Fail, NotApplicable };

struct AuditItem {
    std::string id;
    AuditVerdict verdict = AuditVerdict::NotApplicable;
    bool conjecture = false;
    std::string note;
};

struct StructuralAudit {
    std::vector<AuditItem> items;

    bool theorems_pass() const {
        for (const auto& item : items)
            if (!item.conjecture && item.verdict == AuditVerdict::Fail) return false;
        return true;
    }
    const AuditItem* find(const std::string& id) const {
        for (const auto& item : items)
            if (item.id == id) return &item;
        return nullptr;
    }
};

/// Evaluates every structural assertion against a verified-critical graph.
StructuralAudit audit_structural_theorems(const Graph& g, const CriticalityReport& report,
                                          DCache* cache = nullptr);

}  // namespace distcrit

#endif
