#ifndef PATHSEP_IO_HPP
#define PATHSEP_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathsep/graph.hpp"

namespace pathsep {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

namespace detail {

inline bool content_line(const std::string& raw, std::string& out) {
    auto hash = raw.find('#');
    out = (hash == std::string::npos) ? raw : raw.substr(0, hash);
    for (char c : out)
        if (!isspace(static_cast<unsigned char>(c))) return true;
    return false;
}

} // namespace detail

// Graph file: first content line "n m", then m lines "u v" (0-based).
// '#' starts a comment. EdgeId equals line order.
inline Graph parse_graph(std::istream& in) {
    std::string raw, line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!detail::content_line(raw, line)) continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n >> m) || n < 0 || m < 0)
                throw ParseError(lineno, "expected header 'n m'");
            std::string extra;
            if (ss >> extra) throw ParseError(lineno, "trailing tokens after header");
            continue;
        }
        long long u, v;
        if (!(ss >> u >> v)) throw ParseError(lineno, "expected edge 'u v'");
        std::string extra;
        if (ss >> extra) throw ParseError(lineno, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex out of range in edge (" + std::to_string(u) +
                                         "," + std::to_string(v) + ")");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (n < 0) throw ParseError(lineno, "missing header 'n m'");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno, "header declared " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

inline void emit_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// Family file: one path per line as space-separated vertex ids; line order
// is the family index.
inline PathFamily parse_family(std::istream& in, const Graph& g) {
    std::string raw, line;
    int lineno = 0;
    std::vector<std::vector<int>> seqs;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!detail::content_line(raw, line)) continue;
        std::istringstream ss(line);
        std::vector<int> vs;
        long long v;
        while (ss >> v) {
            if (v < 0 || v >= g.n())
                throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
            vs.push_back(static_cast<int>(v));
        }
        try {
            validate_path(g, vs);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
        seqs.push_back(std::move(vs));
    }
    return make_family(g, seqs);
}

inline PathFamily parse_family(const std::string& text, const Graph& g) {
    std::istringstream ss(text);
    return parse_family(ss, g);
}

inline void emit_family(std::ostream& out, const PathFamily& fam) {
    for (const auto& p : fam.paths) {
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            if (i) out << ' ';
            out << p.vertices[i];
        }
        out << '\n';
    }
}

} // namespace pathsep

#endif
