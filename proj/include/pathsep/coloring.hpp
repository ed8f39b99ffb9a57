#ifndef PATHSEP_COLORING_HPP
#define PATHSEP_COLORING_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pathsep/graph.hpp"

namespace pathsep {

struct EdgeColoring {
    int num_colors = 0;
    std::vector<int> color; // per input edge position
};

namespace detail {

// State for fan/rotation coloring on a small simple graph given as an edge
// list over vertices 0..n-1.
class VizingState {
public:
    VizingState(int n, const std::vector<std::pair<int, int>>& edges)
        : edges_(edges), maxdeg_(0) {
        std::vector<int> deg(n, 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        for (int d : deg) maxdeg_ = std::max(maxdeg_, d);
        at_.assign(n, std::vector<int>(maxdeg_ + 1, -1));
        color_.assign(edges.size(), -1);
        eindex_.assign(n, {});
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            eindex_[u].push_back(static_cast<int>(i));
            eindex_[v].push_back(static_cast<int>(i));
        }
    }

    EdgeColoring run() {
        for (std::size_t i = 0; i < edges_.size(); ++i) color_edge(static_cast<int>(i));
        EdgeColoring out;
        out.color = color_;
        for (int c : color_) out.num_colors = std::max(out.num_colors, c + 1);
        return out;
    }

private:
    int free_color(int v) const {
        for (int c = 0; c <= maxdeg_; ++c)
            if (at_[v][c] < 0) return c;
        return -1; // cannot happen with maxdeg_+1 colors
    }
    bool is_free(int v, int c) const { return at_[v][c] < 0; }

    int edge_of(int u, int v) const {
        for (int i : eindex_[u]) {
            auto [a, b] = edges_[i];
            if ((a == u && b == v) || (a == v && b == u)) return i;
        }
        return -1;
    }

    void set_color(int u, int v, int c) {
        int i = edge_of(u, v);
        int old = color_[i];
        if (old >= 0) {
            at_[u][old] = -1;
            at_[v][old] = -1;
        }
        color_[i] = c;
        if (c >= 0) {
            at_[u][c] = v;
            at_[v][c] = u;
        }
    }
    int get_color(int u, int v) const { return color_[edge_of(u, v)]; }

    // Maximal fan of u starting at v: each next spoke is a neighbor whose
    // edge color is free at the current last spoke.
    std::vector<int> maximal_fan(int u, int v) const {
        std::vector<int> fan{v};
        bool extended = true;
        while (extended) {
            extended = false;
            for (int i : eindex_[u]) {
                if (color_[i] < 0) continue;
                auto [a, b] = edges_[i];
                int z = (a == u) ? b : a;
                if (!is_free(fan.back(), color_[i])) continue;
                if (std::find(fan.begin(), fan.end(), z) != fan.end()) continue;
                fan.push_back(z);
                extended = true;
                break;
            }
        }
        return fan;
    }

    // Swaps colors along the alternating c/d path from u. Collect first,
    // flip after; flipping while walking would revisit the flipped edge.
    void invert_cd_path(int u, int c, int d) {
        std::vector<std::pair<int, int>> path;
        int x = u;
        int expect = d;
        while (at_[x][expect] >= 0) {
            int y = at_[x][expect];
            path.push_back({x, y});
            x = y;
            expect = (expect == c) ? d : c;
        }
        std::vector<int> old(path.size());
        for (std::size_t i = 0; i < path.size(); ++i) {
            old[i] = get_color(path[i].first, path[i].second);
            set_color(path[i].first, path[i].second, -1);
        }
        for (std::size_t i = 0; i < path.size(); ++i)
            set_color(path[i].first, path[i].second, old[i] == c ? d : c);
    }

    void color_edge(int i) {
        auto [u, v] = edges_[i];
        auto fan = maximal_fan(u, v);
        int c = free_color(u);
        int d = free_color(fan.back());
        if (c != d) invert_cd_path(u, c, d);
        // After the inversion d is free at u; rotate up to the first spoke
        // where d is also free.
        std::size_t w = 0;
        while (w < fan.size() && !is_free(fan[w], d)) ++w;
        if (w == fan.size()) {
            throw std::logic_error("edge coloring: no rotatable spoke");
        }
        // Shift colors down the fan prefix, then color (u, fan[w]) with d.
        // Uncolor first so the vertex/color bookkeeping never holds two
        // spokes on one color.
        std::vector<int> old(w + 1);
        for (std::size_t k = 0; k <= w; ++k) old[k] = get_color(u, fan[k]);
        for (std::size_t k = 0; k <= w; ++k) set_color(u, fan[k], -1);
        for (std::size_t k = 0; k < w; ++k) set_color(u, fan[k], old[k + 1]);
        set_color(u, fan[w], d);
    }

    const std::vector<std::pair<int, int>>& edges_;
    int maxdeg_;
    std::vector<std::vector<int>> at_; // vertex x color -> neighbor
    std::vector<int> color_;
    std::vector<std::vector<int>> eindex_;
};

} // namespace detail

// Proper edge coloring with at most max_degree + 1 colors (fan rotation and
// alternating-path inversion).
inline EdgeColoring vizing_color(int n, const std::vector<std::pair<int, int>>& edges) {
    if (edges.empty()) return {};
    return detail::VizingState(n, edges).run();
}

// First-fit proper edge coloring; uses at most 2*max_degree - 1 colors.
inline EdgeColoring greedy_color(int n, const std::vector<std::pair<int, int>>& edges) {
    EdgeColoring out;
    if (edges.empty()) return out;
    int maxdeg = 0;
    {
        std::vector<int> deg(n, 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        for (int d : deg) maxdeg = std::max(maxdeg, d);
    }
    std::vector<std::vector<char>> used(n, std::vector<char>(2 * maxdeg, 0));
    out.color.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        int c = 0;
        while (used[u][c] || used[v][c]) ++c;
        used[u][c] = used[v][c] = 1;
        out.color[i] = c;
        out.num_colors = std::max(out.num_colors, c + 1);
    }
    return out;
}

// Splits an edge list into matchings given a proper coloring.
inline std::vector<std::vector<int>> matchings_by_color(const EdgeColoring& ec) {
    std::vector<std::vector<int>> groups(ec.num_colors);
    for (std::size_t i = 0; i < ec.color.size(); ++i)
        groups[ec.color[i]].push_back(static_cast<int>(i));
    return groups;
}

} // namespace pathsep

#endif
