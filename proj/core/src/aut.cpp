#include "distcrit/aut.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace distcrit {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(static_cast<size_t>(n));
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
}

bool Permutation::is_identity() const {
    for (int v = 0; v < size(); ++v)
        if (image[static_cast<size_t>(v)] != v) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.image.resize(image.size());
    for (int v = 0; v < size(); ++v) p.image[static_cast<size_t>(image[static_cast<size_t>(v)])] = v;
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation p;
    p.image.resize(b.image.size());
    for (int v = 0; v < b.size(); ++v) p.image[static_cast<size_t>(v)] = a(b(v));
    return p;
}

std::string Permutation::cycle_notation() const {
    std::string out;
    std::vector<bool> seen(image.size(), false);
    for (int v = 0; v < size(); ++v) {
        if (seen[static_cast<size_t>(v)] || (*this)(v) == v) continue;
        out += '(';
        int u = v;
        bool first = true;
        while (!seen[static_cast<size_t>(u)]) {
            seen[static_cast<size_t>(u)] = true;
            if (!first) out += ' ';
            out += std::to_string(u);
            first = false;
            u = (*this)(u);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

bool is_automorphism(const Graph& g, const Permutation& p, const Labeling* coloring) {
    const int n = g.order();
    if (p.size() != n) return false;
    std::vector<bool> hit(static_cast<size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        int w = p(v);
        if (w < 0 || w >= n || hit[static_cast<size_t>(w)]) return false;
        hit[static_cast<size_t>(w)] = true;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return false;
    if (coloring)
        for (int v = 0; v < n; ++v)
            if ((*coloring)[v] != (*coloring)[p(v)]) return false;
    return true;
}

namespace {

using CellList = std::vector<std::uint64_t>;

CellList cells_from_colors(const Graph& g, const std::vector<int>& colors) {
    std::map<int, std::uint64_t> by_color;
    for (int v = 0; v < g.order(); ++v) by_color[colors[static_cast<size_t>(v)]] |= std::uint64_t{1} << v;
    CellList cells;
    for (auto& [c, mask] : by_color) cells.push_back(mask);
    return cells;
}

// Refine to the coarsest equitable partition. Scans restart after each
// split; cell order stays deterministic (subcells sorted by neighbor count).
void refine_cells(const Graph& g, CellList& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t ti = 0; ti < cells.size() && !changed; ++ti) {
            const std::uint64_t target = cells[ti];
            for (size_t ci = 0; ci < cells.size(); ++ci) {
                std::uint64_t cell = cells[ci];
                if (std::popcount(cell) <= 1) continue;
                std::map<int, std::uint64_t> buckets;
                std::uint64_t rest = cell;
                while (rest) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    buckets[std::popcount(g.neighbors(v) & target)] |= std::uint64_t{1} << v;
                }
                if (buckets.size() <= 1) continue;
                CellList replacement;
                for (auto& [cnt, mask] : buckets) replacement.push_back(mask);
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), replacement.begin(),
                             replacement.end());
                changed = true;
                break;
            }
        }
    }
}

std::vector<int> cell_index_per_vertex(const Graph& g, const CellList& cells) {
    std::vector<int> cell_of(static_cast<size_t>(g.order()), -1);
    for (size_t i = 0; i < cells.size(); ++i) {
        std::uint64_t rest = cells[i];
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            cell_of[static_cast<size_t>(v)] = static_cast<int>(i);
        }
    }
    return cell_of;
}

std::vector<int> colors_or_unit(const Graph& g, const Labeling* coloring) {
    if (coloring) {
        if (coloring->size() != g.order())
            throw GraphError("coloring length does not match graph order");
        return coloring->colors;
    }
    return std::vector<int>(static_cast<size_t>(g.order()), 1);
}

// Transposition (u v) is a color-preserving automorphism iff u,v share a
// color and have identical neighborhoods outside {u,v}.
std::optional<Permutation> twin_transposition(const Graph& g, const std::vector<int>& colors) {
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (colors[static_cast<size_t>(u)] != colors[static_cast<size_t>(v)]) continue;
            const std::uint64_t pair_mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            if ((g.neighbors(u) & ~pair_mask) != (g.neighbors(v) & ~pair_mask)) continue;
            Permutation p = Permutation::identity(n);
            p.image[static_cast<size_t>(u)] = v;
            p.image[static_cast<size_t>(v)] = u;
            return p;
        }
    }
    return std::nullopt;
}

// Backtracking search over vertex images constrained to refinement cells.
class AutDfs {
public:
    AutDfs(const Graph& g, const std::vector<int>& colors) : g_(g), n_(g.order()) {
        CellList cells = cells_from_colors(g, colors);
        refine_cells(g, cells);
        cell_of_ = cell_index_per_vertex(g, cells);
        cell_mask_.resize(cells.size());
        for (size_t i = 0; i < cells.size(); ++i) cell_mask_[i] = cells[i];
        img_.assign(static_cast<size_t>(n_), -1);
    }

    int forced_src = -1;
    int forced_dst = -1;

    // Returns false if the visitor aborted the search.
    bool run(const std::function<bool(const Permutation&)>& visit) {
        visit_ = &visit;
        return dfs(0);
    }

private:
    bool dfs(int v) {
        if (v == n_) {
            Permutation p;
            p.image = img_;
            return (*visit_)(p);
        }
        const int cell = cell_of_[static_cast<size_t>(v)];
        std::uint64_t cand = cell_mask_[static_cast<size_t>(cell)] & ~used_;
        if (v == forced_src) {
            std::uint64_t want = std::uint64_t{1} << forced_dst;
            cand &= want;
        }
        // Required image-side neighborhood among already assigned images.
        std::uint64_t required = 0;
        std::uint64_t nb = g_.neighbors(v);
        for (int u = 0; u < v; ++u)
            if ((nb >> u) & 1u) required |= std::uint64_t{1} << img_[static_cast<size_t>(u)];
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            if ((g_.neighbors(w) & used_) != required) continue;
            img_[static_cast<size_t>(v)] = w;
            used_ |= std::uint64_t{1} << w;
            bool keep_going = dfs(v + 1);
            used_ &= ~(std::uint64_t{1} << w);
            img_[static_cast<size_t>(v)] = -1;
            if (!keep_going) return false;
        }
        return true;
    }

    const Graph& g_;
    int n_;
    std::vector<int> cell_of_;
    std::vector<std::uint64_t> cell_mask_;
    std::vector<int> img_;
    std::uint64_t used_ = 0;
    const std::function<bool(const Permutation&)>* visit_ = nullptr;
};

}  // namespace

OrderedPartition equitable_refinement(const Graph& g, const Labeling& initial) {
    if (initial.size() != g.order())
        throw GraphError("coloring length does not match graph order");
    CellList cells = cells_from_colors(g, initial.colors);
    refine_cells(g, cells);
    OrderedPartition out;
    for (std::uint64_t mask : cells) {
        std::vector<int> cell;
        while (mask) {
            int v = std::countr_zero(mask);
            mask &= mask - 1;
            cell.push_back(v);
        }
        out.push_back(std::move(cell));
    }
    return out;
}

bool for_each_automorphism(const Graph& g, const Labeling* coloring,
                           const std::function<bool(const Permutation&)>& visit) {
    if (g.order() == 0) return visit(Permutation{});
    AutDfs dfs(g, colors_or_unit(g, coloring));
    return dfs.run(visit);
}

std::optional<Permutation> find_nontrivial_automorphism(const Graph& g, const Labeling* coloring) {
    if (g.order() <= 1) return std::nullopt;
    auto colors = colors_or_unit(g, coloring);
    if (auto twin = twin_transposition(g, colors)) return twin;
    std::optional<Permutation> found;
    AutDfs dfs(g, colors);
    dfs.run([&](const Permutation& p) {
        if (p.is_identity()) return true;
        found = p;
        return false;
    });
    return found;
}

bool has_nontrivial_automorphism(const Graph& g, const Labeling* coloring) {
    return find_nontrivial_automorphism(g, coloring).has_value();
}

std::optional<Permutation> find_automorphism_mapping(const Graph& g, int src, int dst,
                                                     const Labeling* coloring) {
    if (src < 0 || src >= g.order() || dst < 0 || dst >= g.order())
        throw GraphError("find_automorphism_mapping: vertex out of range");
    AutDfs dfs(g, colors_or_unit(g, coloring));
    dfs.forced_src = src;
    dfs.forced_dst = dst;
    std::optional<Permutation> found;
    dfs.run([&](const Permutation& p) {
        found = p;
        return false;
    });
    return found;
}

std::vector<Permutation> enumerate_automorphisms(const Graph& g, const Labeling* coloring,
                                                 std::uint64_t cap) {
    std::vector<Permutation> all;
    bool completed = for_each_automorphism(g, coloring, [&](const Permutation& p) {
        all.push_back(p);
        return all.size() < cap;
    });
    if (!completed && all.size() >= cap)
        throw GraphError("automorphism enumeration exceeded cap of " + std::to_string(cap));
    return all;
}

AutGroup automorphism_group(const Graph& g, const std::optional<Labeling>& coloring) {
    AutGroup group;
    const int n = g.order();
    if (n == 0) return group;

    std::vector<int> colors = colors_or_unit(g, coloring ? &*coloring : nullptr);
    int fresh = *std::max_element(colors.begin(), colors.end()) + 1;

    // Orbit-stabilizer chain: pick a base vertex from the first non-singleton
    // cell, find its orbit via forced-assignment searches, multiply orbit
    // sizes, then fix the vertex with a fresh color and recurse.
    while (true) {
        CellList cells = cells_from_colors(g, colors);
        refine_cells(g, cells);
        int base_vertex = -1;
        for (const std::uint64_t cell : cells)
            if (std::popcount(cell) > 1) {
                base_vertex = std::countr_zero(cell);
                break;
            }
        if (base_vertex == -1) break;  // discrete partition: stabilizer is trivial

        std::uint64_t cell_mask = 0;
        for (const std::uint64_t cell : cells)
            if ((cell >> base_vertex) & 1u) {
                cell_mask = cell;
                break;
            }
        Labeling constrained{colors};
        std::uint64_t orbit_size = 1;
        std::uint64_t rest = cell_mask & ~(std::uint64_t{1} << base_vertex);
        while (rest) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            if (auto witness = find_automorphism_mapping(g, base_vertex, w, &constrained)) {
                ++orbit_size;
                group.generators.push_back(*witness);
            }
        }
        group.order *= orbit_size;
        colors[static_cast<size_t>(base_vertex)] = fresh++;
    }

    // Orbits of the full group via union-find over the generators.
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (const auto& gen : group.generators)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(gen(v));
            if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
        }
    std::map<int, std::vector<int>> orbit_map;
    for (int v = 0; v < n; ++v) orbit_map[find(v)].push_back(v);
    for (auto& [root, members] : orbit_map) group.orbits.push_back(std::move(members));
    return group;
}

namespace {

// ---- Canonical form: individualization-refinement with automorphism pruning.

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalForm run() {
        CellList cells{g_.vertex_mask()};
        if (n_ > 0) refine_cells(g_, cells);
        std::vector<int> base;
        dfs(cells, base);
        CanonicalForm out;
        out.certificate = best_cert_;
        out.relabeling.image.assign(static_cast<size_t>(n_), 0);
        for (int pos = 0; pos < n_; ++pos)
            out.relabeling.image[static_cast<size_t>(best_leaf_[static_cast<size_t>(pos)])] = pos;
        return out;
    }

private:
    std::string cert_of(const std::vector<int>& pos_to_vertex) const {
        std::string cert;
        cert.push_back(static_cast<char>(n_));
        int acc = 0, nb = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                acc = (acc << 1) |
                      (g_.adjacent(pos_to_vertex[static_cast<size_t>(i)], pos_to_vertex[static_cast<size_t>(j)]) ? 1 : 0);
                if (++nb == 8) {
                    cert.push_back(static_cast<char>(acc));
                    acc = 0;
                    nb = 0;
                }
            }
        if (nb > 0) cert.push_back(static_cast<char>(acc << (8 - nb)));
        return cert;
    }

    static Permutation leaf_automorphism(const std::vector<int>& a, const std::vector<int>& b) {
        Permutation p;
        p.image.assign(a.size(), 0);
        for (size_t pos = 0; pos < a.size(); ++pos)
            p.image[static_cast<size_t>(a[pos])] = b[pos];
        return p;
    }

    void handle_leaf(const CellList& cells) {
        std::vector<int> leaf;
        leaf.reserve(static_cast<size_t>(n_));
        for (std::uint64_t cell : cells) leaf.push_back(std::countr_zero(cell));
        std::string cert = cert_of(leaf);
        if (first_leaf_.empty()) {
            first_leaf_ = leaf;
            first_cert_ = cert;
        } else if (cert == first_cert_) {
            autos_.push_back(leaf_automorphism(first_leaf_, leaf));
        } else if (!best_leaf_.empty() && cert == best_cert_) {
            autos_.push_back(leaf_automorphism(best_leaf_, leaf));
        }
        if (best_leaf_.empty() || cert < best_cert_) {
            best_leaf_ = leaf;
            best_cert_ = cert;
        }
    }

    // Orbits of the discovered automorphisms that fix the base pointwise;
    // candidates in one orbit lead to identical certificate sets.
    std::vector<int> base_stable_orbits(const std::vector<int>& base) const {
        std::vector<int> parent(static_cast<size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) {
            while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            return v;
        };
        for (const auto& a : autos_) {
            bool fixes_base = true;
            for (int b : base)
                if (a(b) != b) {
                    fixes_base = false;
                    break;
                }
            if (!fixes_base) continue;
            for (int v = 0; v < n_; ++v) {
                int x = find(v), y = find(a(v));
                if (x != y) parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
            }
        }
        std::vector<int> roots(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) roots[static_cast<size_t>(v)] = find(v);
        return roots;
    }

    void dfs(const CellList& cells, std::vector<int>& base) {
        // Target: first smallest non-singleton cell.
        int target = -1, target_size = n_ + 1;
        for (size_t i = 0; i < cells.size(); ++i) {
            int sz = std::popcount(cells[i]);
            if (sz > 1 && sz < target_size) {
                target = static_cast<int>(i);
                target_size = sz;
            }
        }
        if (target == -1) {
            handle_leaf(cells);
            return;
        }

        std::vector<int> tried;
        std::uint64_t rest = cells[static_cast<size_t>(target)];
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (!tried.empty() && !autos_.empty()) {
                auto orbit = base_stable_orbits(base);
                bool skip = false;
                for (int u : tried)
                    if (orbit[static_cast<size_t>(u)] == orbit[static_cast<size_t>(v)]) {
                        skip = true;
                        break;
                    }
                if (skip) {
                    tried.push_back(v);
                    continue;
                }
            }
            CellList child;
            child.reserve(cells.size() + 1);
            for (size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) == target) {
                    child.push_back(std::uint64_t{1} << v);
                    child.push_back(cells[i] & ~(std::uint64_t{1} << v));
                } else {
                    child.push_back(cells[i]);
                }
            }
            refine_cells(g_, child);
            base.push_back(v);
            dfs(child, base);
            base.pop_back();
            tried.push_back(v);
        }
    }

    const Graph& g_;
    int n_;
    std::string first_cert_, best_cert_;
    std::vector<int> first_leaf_, best_leaf_;
    std::vector<Permutation> autos_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() == 0) {
        CanonicalForm out;
        out.certificate = std::string(1, '\0');
        return out;
    }
    return CanonSearch(g).run();
}

std::string canonical_certificate(const Graph& g) { return canonical_form(g).certificate; }

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.order(); ++v) dg.push_back(g.degree(v));
    for (int v = 0; v < h.order(); ++v) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_certificate(g) == canonical_certificate(h);
}

}  // namespace distcrit
