#pragma once

// Edge-list text format:
//
//   # comment lines start with '#'
//   n m
//   u v        (m lines, 0 <= u < v < n, no duplicates)
//
// Serialization writes the header and edges in lexicographic order, LF endings,
// no comments.

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pancyc/graph.hpp"

namespace pancyc {

class GraphFormatError : public std::runtime_error {
public:
    GraphFormatError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

// Parses exactly two decimal integers separated by a single space.
inline bool parse_pair(std::string_view s, long& a, long& b) {
    const auto sp = s.find(' ');
    if (sp == std::string_view::npos || sp == 0 || sp + 1 >= s.size()) return false;
    auto one = [](std::string_view t, long& out) {
        if (t.empty() || t.front() == '-' || t.front() == '+') return false;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
        return ec == std::errc{} && p == t.data() + t.size();
    };
    return one(s.substr(0, sp), a) && one(s.substr(sp + 1), b);
}

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
    int line_no = 0;
    bool have_header = false;
    long n = 0;
    long m = 0;
    long seen = 0;
    Graph g;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        long a = 0;
        long b = 0;
        if (!have_header) {
            if (!detail::parse_pair(line, a, b)) throw GraphFormatError(line_no, "malformed header, expected \"n m\"");
            if (a < 1 || a > kMaxOrder) throw GraphFormatError(line_no, "order must be in 1..32");
            if (b > a * (a - 1) / 2) throw GraphFormatError(line_no, "edge count exceeds n(n-1)/2");
            n = a;
            m = b;
            g = Graph(static_cast<int>(n));
            have_header = true;
            continue;
        }
        if (!detail::parse_pair(line, a, b)) throw GraphFormatError(line_no, "malformed edge, expected \"u v\"");
        if (a >= n || b >= n) throw GraphFormatError(line_no, "vertex out of range");
        if (a == b) throw GraphFormatError(line_no, "self-loop");
        if (a > b) throw GraphFormatError(line_no, "edge endpoints must satisfy u < v");
        if (seen == m) throw GraphFormatError(line_no, "more edges than declared");
        if (g.adjacent(static_cast<int>(a), static_cast<int>(b))) throw GraphFormatError(line_no, "duplicate edge");
        g.add_edge(static_cast<int>(a), static_cast<int>(b));
        ++seen;
    }
    if (!have_header) throw GraphFormatError(line_no, "missing header");
    if (seen != m) {
        throw GraphFormatError(line_no, "declared " + std::to_string(m) + " edges, found " + std::to_string(seen));
    }
    return g;
}

inline std::string serialize_graph(const Graph& g) {
    const auto edges = g.edges();
    std::string out = std::to_string(g.order()) + ' ' + std::to_string(edges.size()) + '\n';
    for (auto [u, v] : edges) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

/// "{a,b,c}"
template <typename Range>
std::string format_set(const Range& values) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : values) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

}  // namespace pancyc
