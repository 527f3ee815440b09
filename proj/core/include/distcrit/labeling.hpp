#ifndef DISTCRIT_LABELING_HPP
#define DISTCRIT_LABELING_HPP

#include <vector>

#include "distcrit/graph.hpp"

namespace distcrit {

/// Vertex coloring used for symmetry breaking; colors are integers >= 1
/// and adjacent vertices may share a color.
struct Labeling {
    std::vector<int> colors;

    Labeling() = default;
    explicit Labeling(std::vector<int> c) : colors(std::move(c)) {}
    static Labeling constant(int n, int color = 1) {
        return Labeling(std::vector<int>(static_cast<size_t>(n), color));
    }

    int size() const { return static_cast<int>(colors.size()); }
    int operator[](int v) const { return colors[static_cast<size_t>(v)]; }

    bool operator==(const Labeling&) const = default;
};

}  // namespace distcrit

#endif
