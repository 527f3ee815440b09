#include "distcrit/graph6.hpp"

#include <vector>

namespace distcrit {

namespace {

constexpr std::string_view kHeaderPrefix = ">>graph6<<";

int decode_byte(unsigned char c, size_t pos) {
    if (c < 63 || c > 126)
        throw Graph6Error("byte out of range 63..126 at position " + std::to_string(pos));
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line, bool strict_padding) {
    if (line.starts_with(kHeaderPrefix)) line.remove_prefix(kHeaderPrefix.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw Graph6Error("empty graph6 record");
    if (line[0] == ':' || line[0] == ';')
        throw Graph6Error("sparse6 input not supported (only graph6)");
    if (line[0] == '&')
        throw Graph6Error("digraph6 input not supported (only graph6)");

    size_t at = 0;
    long n;
    if (line[0] != '~') {
        n = decode_byte(static_cast<unsigned char>(line[0]), 0);
        at = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw Graph6Error("8-byte graph6 header implies n > 64 (capacity exceeded)");
        if (line.size() < 4) throw Graph6Error("truncated extended graph6 header");
        n = 0;
        for (size_t i = 1; i <= 3; ++i)
            n = (n << 6) | decode_byte(static_cast<unsigned char>(line[i]), i);
        at = 4;
    }
    if (n > Graph::kMaxOrder)
        throw Graph6Error("graph order " + std::to_string(n) + " exceeds capacity 64");

    const long nbits = n * (n - 1) / 2;
    const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (line.size() - at < nbytes)
        throw Graph6Error("truncated graph6 payload: need " + std::to_string(nbytes) +
                          " bytes, got " + std::to_string(line.size() - at));
    if (line.size() - at > nbytes)
        throw Graph6Error("trailing bytes after graph6 payload");

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    int col = 1, row = 0;  // upper triangle, column-major: x(0,1), x(0,2), x(1,2), ...
    for (size_t i = 0; i < nbytes; ++i) {
        int v = decode_byte(static_cast<unsigned char>(line[at + i]), at + i);
        for (int b = 5; b >= 0; --b, ++bit) {
            int on = (v >> b) & 1;
            if (bit < nbits) {
                if (on) edges.emplace_back(row, col);
                if (++row == col) {
                    row = 0;
                    ++col;
                }
            } else if (on && strict_padding) {
                throw Graph6Error("nonzero padding bits in graph6 record");
            }
        }
    }
    return build_graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nb = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return out;
}

void stream_graph6(std::istream& in, const std::function<bool(const Graph&)>& sink,
                   bool strict_padding) {
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view{line};
        while (!view.empty() && (view.back() == '\r' || view.back() == '\n')) view.remove_suffix(1);
        if (view.empty()) continue;
        if (view.starts_with(">>")) {
            if (view.starts_with(kHeaderPrefix)) view.remove_prefix(kHeaderPrefix.size());
            else continue;  // other ">>" lines are comments
            if (view.empty()) continue;
        }
        Graph g;
        try {
            g = parse_graph6(view, strict_padding);
        } catch (const Graph6Error& e) {
            throw Graph6Error("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!sink(g)) return;
    }
}

}  // namespace distcrit
