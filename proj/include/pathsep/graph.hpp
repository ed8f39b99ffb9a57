#ifndef PATHSEP_GRAPH_HPP
#define PATHSEP_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pathsep/bitset.hpp"

namespace pathsep {

using VertexId = int;
using EdgeId = int;

// Simple undirected graph. Vertices are 0..n-1; edges keep their input
// order, and EdgeId is the position in that order. Immutable once built.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<int, int>> edges)
        : n_(n), edges_(std::move(edges)), adj_(n) {
        if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
        index_.reserve(edges_.size() * 2);
        for (std::size_t id = 0; id < edges_.size(); ++id) {
            auto [u, v] = edges_[id];
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") out of range");
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (index_.count(key(u, v)))
                throw std::invalid_argument("duplicate edge (" + std::to_string(u) +
                                            "," + std::to_string(v) + ")");
            index_.emplace(key(u, v), static_cast<EdgeId>(id));
            adj_[u].emplace_back(v, static_cast<EdgeId>(id));
            adj_[v].emplace_back(u, static_cast<EdgeId>(id));
        }
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(EdgeId e) const { return edges_[e]; }

    // (neighbor, edge id) pairs in insertion order.
    const std::vector<std::pair<int, EdgeId>>& adjacent(int v) const { return adj_[v]; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int min_degree() const {
        int d = n_ > 0 ? degree(0) : 0;
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    std::optional<EdgeId> edge_between(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return std::nullopt;
        auto it = index_.find(key(u, v));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

private:
    static uint64_t key(int u, int v) {
        if (u > v) std::swap(u, v);
        return (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v);
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, EdgeId>>> adj_;
    std::unordered_map<uint64_t, EdgeId> index_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    return Graph(n, edge_list);
}

// A simple path: distinct vertices, consecutive pairs adjacent in the host
// graph. Edge ids are derived at validation time.
struct Path {
    std::vector<int> vertices;
    std::vector<EdgeId> edge_ids;

    int length() const { return static_cast<int>(edge_ids.size()); }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
};

inline Path validate_path(const Graph& g, const std::vector<int>& vs) {
    if (vs.size() < 2)
        throw std::invalid_argument("path needs at least two vertices");
    std::vector<char> seen(g.n(), 0);
    Path p;
    p.vertices = vs;
    p.edge_ids.reserve(vs.size() - 1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        int v = vs[i];
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("path vertex " + std::to_string(v) + " out of range");
        if (seen[v])
            throw std::invalid_argument("repeated vertex " + std::to_string(v) + " in path");
        seen[v] = 1;
        if (i > 0) {
            auto e = g.edge_between(vs[i - 1], v);
            if (!e)
                throw std::invalid_argument("consecutive pair (" + std::to_string(vs[i - 1]) +
                                            "," + std::to_string(v) + ") is not an edge");
            p.edge_ids.push_back(*e);
        }
    }
    return p;
}

// Indexed list of paths over one graph. n/m record the host graph the
// family was validated against.
struct PathFamily {
    int n = 0;
    int m = 0;
    std::vector<Path> paths;

    int size() const { return static_cast<int>(paths.size()); }
};

inline PathFamily make_family(const Graph& g, const std::vector<std::vector<int>>& vs_list) {
    PathFamily fam;
    fam.n = g.n();
    fam.m = g.m();
    fam.paths.reserve(vs_list.size());
    for (const auto& vs : vs_list) fam.paths.push_back(validate_path(g, vs));
    return fam;
}

inline PathFamily make_family(const Graph& g, std::vector<Path> paths) {
    PathFamily fam;
    fam.n = g.n();
    fam.m = g.m();
    fam.paths = std::move(paths);
    return fam;
}

inline void require_same_graph(const Graph& g, const PathFamily& fam) {
    if (fam.n != g.n() || fam.m != g.m())
        throw std::invalid_argument("path family does not belong to this graph");
}

// Per-edge sets of family indices, packed. signature(e) = { i : e in P_i }.
class SignatureTable {
public:
    SignatureTable(int m, int t) : t_(t), rows_(m, Bitset(static_cast<std::size_t>(t))) {}

    int family_size() const { return t_; }
    const Bitset& row(EdgeId e) const { return rows_[e]; }
    Bitset& row(EdgeId e) { return rows_[e]; }
    int num_edges() const { return static_cast<int>(rows_.size()); }

    std::size_t total_memberships() const {
        std::size_t s = 0;
        for (const auto& r : rows_) s += r.count();
        return s;
    }

private:
    int t_;
    std::vector<Bitset> rows_;
};

// Builds the exact containment table, re-deriving edge ids from the vertex
// sequences so a family from a different graph is caught here.
inline SignatureTable signatures(const Graph& g, const PathFamily& fam) {
    require_same_graph(g, fam);
    SignatureTable table(g.m(), fam.size());
    for (int i = 0; i < fam.size(); ++i) {
        const auto& vs = fam.paths[i].vertices;
        for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
            auto e = g.edge_between(vs[k], vs[k + 1]);
            if (!e)
                throw std::invalid_argument("family path " + std::to_string(i) +
                                            " uses non-edge (" + std::to_string(vs[k]) + "," +
                                            std::to_string(vs[k + 1]) + ")");
            table.row(*e).set(static_cast<std::size_t>(i));
        }
    }
    return table;
}

// Per-path edge sets as m-bit rows; the transpose of the signature table.
inline std::vector<Bitset> path_edge_sets(const Graph& g, const PathFamily& fam) {
    require_same_graph(g, fam);
    std::vector<Bitset> sets(fam.size(), Bitset(static_cast<std::size_t>(g.m())));
    for (int i = 0; i < fam.size(); ++i) {
        const auto& vs = fam.paths[i].vertices;
        for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
            auto e = g.edge_between(vs[k], vs[k + 1]);
            if (!e)
                throw std::invalid_argument("family path " + std::to_string(i) +
                                            " uses non-edge (" + std::to_string(vs[k]) + "," +
                                            std::to_string(vs[k + 1]) + ")");
            sets[i].set(static_cast<std::size_t>(*e));
        }
    }
    return sets;
}

} // namespace pathsep

#endif
