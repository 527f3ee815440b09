#ifndef DISTCRIT_GRAPH6_HPP
#define DISTCRIT_GRAPH6_HPP

#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include "distcrit/graph.hpp"

namespace distcrit {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decodes one graph6 line. An optional ">>graph6<<" prefix is stripped.
/// strict_padding rejects nonzero bits after the last triangle bit.
Graph parse_graph6(std::string_view line, bool strict_padding = false);

/// Canonical graph6 bytes: 1-byte header for n <= 62, 4-byte extended
/// header for 63..64, zero padding.
std::string write_graph6(const Graph& g);

/// Reads newline-delimited graph6 records from `in`, skipping blank lines
/// and lines starting with ">>". Decode errors carry 1-based line numbers.
/// Stops early if the sink returns false.
void stream_graph6(std::istream& in, const std::function<bool(const Graph&)>& sink,
                   bool strict_padding = false);

}  // namespace distcrit

#endif
