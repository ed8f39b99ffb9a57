#ifndef PATHSEP_BOUNDS_HPP
#define PATHSEP_BOUNDS_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pathsep/graph.hpp"

namespace pathsep {

inline double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("binary_entropy domain is [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

struct EntropyBound {
    double entropy_form;  // log2(m) / H2((n-1)/m)
    double log_form;      // m ln m / ((n-1) ln(en/2)), the proof-chain form
};

inline EntropyBound entropy_lower_bound(int n, long long m) {
    if (n < 2) throw std::invalid_argument("entropy_lower_bound needs n >= 2");
    if (m < n) throw std::invalid_argument("entropy_lower_bound needs m >= n");
    double x = static_cast<double>(n - 1) / static_cast<double>(m);
    EntropyBound b;
    b.entropy_form = std::log2(static_cast<double>(m)) / binary_entropy(x);
    b.log_form = (static_cast<double>(m) * std::log(static_cast<double>(m))) /
                 (static_cast<double>(n - 1) * std::log(std::exp(1.0) * n / 2.0));
    return b;
}

struct GeneralUpperBound {
    long long value;    // 2n ceil(log2 ceil(m/n)) + n
    double cap;         // 3 n log2 n
};

inline int ceil_log2(long long x) {
    int t = 0;
    long long v = 1;
    while (v < x) { v <<= 1; ++t; }
    return t;
}

inline GeneralUpperBound upper_general(int n, long long m) {
    if (n < 1 || m < 0) throw std::invalid_argument("upper_general domain");
    long long per = (m + n - 1) / n; // ceil(m/n)
    int t = per > 0 ? ceil_log2(per) : 0;
    GeneralUpperBound ub;
    ub.value = 2LL * n * t + n;
    ub.cap = 3.0 * n * std::log2(static_cast<double>(n));
    return ub;
}

struct ForestStats {
    int v1 = 0;          // degree-1 vertices
    int v2 = 0;          // degree-2 vertices
    int path_components = 0;
    bool is_forest = false;
};

inline ForestStats forest_stats(const Graph& g) {
    ForestStats st;
    const int n = g.n();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    st.is_forest = true;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        // BFS; a component with c vertices and c-1 edges is a tree.
        std::vector<int> stack{s};
        comp[s] = ncomp;
        int cverts = 0;
        long long cdeg = 0;
        bool all_low = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++cverts;
            cdeg += g.degree(v);
            if (g.degree(v) > 2) all_low = false;
            for (auto [w, id] : g.adjacent(v)) {
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        long long cedges = cdeg / 2;
        if (cedges != cverts - 1) st.is_forest = false;
        // Path components have >= 1 edge and max degree <= 2.
        if (cedges == cverts - 1 && cedges >= 1 && all_low) ++st.path_components;
        ++ncomp;
    }
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 1) ++st.v1;
        else if (g.degree(v) == 2) ++st.v2;
    }
    return st;
}

inline bool is_forest(const Graph& g) { return forest_stats(g).is_forest; }

// Exact path separation number of a forest: v1 + v2 - p.
inline int forest_psn(const Graph& g) {
    ForestStats st = forest_stats(g);
    if (!st.is_forest) throw std::invalid_argument("forest_psn: input has a cycle");
    return st.v1 + st.v2 - st.path_components;
}

// Minimum over all trees on n vertices: ceil(n/2) + 1.
inline int mintree_bound(int n) {
    if (n < 2) throw std::invalid_argument("mintree_bound needs n >= 2");
    return (n + 1) / 2 + 1;
}

// Degree-sequence characterization of trees attaining mintree_bound:
// even n: all degrees in {1,3}; odd n: exactly one vertex of degree 2 or 4,
// the rest in {1,3}.
inline bool is_extremal_tree(const Graph& g) {
    ForestStats st = forest_stats(g);
    if (!st.is_forest || g.m() != g.n() - 1) return false;
    int odd_special = 0;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d == 1 || d == 3) continue;
        if (g.n() % 2 == 1 && (d == 2 || d == 4) && odd_special == 0) {
            ++odd_special;
            continue;
        }
        return false;
    }
    if (g.n() % 2 == 1 && odd_special != 1) return false;
    return true;
}

inline double bipartite_lower_bound(int a, int n) {
    if (a < 1 || 2 * a > n - 1) throw std::invalid_argument("bipartite_lower_bound needs 1 <= a <= (n-1)/2");
    double prod = static_cast<double>(a) * (n - a);
    return (prod / (2.0 * a + 1.0)) * std::log(prod) / std::log(std::exp(1.0) * n / 2.0);
}

struct HypercubeBounds {
    double lower;
    long long upper; // 2d(d+1) - 8
};

inline HypercubeBounds hypercube_bounds(int d) {
    if (d < 2) throw std::invalid_argument("hypercube_bounds needs d >= 2");
    HypercubeBounds hb;
    hb.upper = 2LL * d * (d + 1) - 8;
    if (d == 2) {
        hb.lower = 4.0;
    } else if (d == 3) {
        hb.lower = entropy_lower_bound(8, 12).entropy_form;
    } else {
        hb.lower = static_cast<double>(d) * d / (2.0 * std::log2(static_cast<double>(d)));
    }
    return hb;
}

struct BoundsReport {
    int n = 0;
    long long m = 0;
    std::optional<double> entropy_lb;    // log2 m / H2((n-1)/m), needs m >= n
    std::optional<double> log_form_lb;   // m ln m / (n ln(en/2))
    std::optional<double> proof_form_lb; // m ln m / ((n-1) ln(en/2))
    int info_lb = 0;                     // ceil(log2 m), unrestricted tests
    long long upper_general = 0;
    double upper_cap = 0.0;              // 3 n log2 n
    std::optional<int> tree_exact;
    std::optional<int> mintree_lb;
    std::optional<double> hypercube_lb;
    std::optional<long long> hypercube_ub;
};

inline bool is_complete_graph(const Graph& g) {
    return static_cast<long long>(g.m()) * 2 == static_cast<long long>(g.n()) * (g.n() - 1);
}

// Dimension d when the graph is exactly the canonical hypercube labeling
// (vertex ids are coordinate vectors), otherwise nullopt.
inline std::optional<int> hypercube_dimension(const Graph& g) {
    int n = g.n();
    if (n < 2 || (n & (n - 1)) != 0) return std::nullopt;
    int d = 0;
    while ((1 << d) < n) ++d;
    if (g.m() != static_cast<long long>(d) * (n / 2)) return std::nullopt;
    for (auto [u, v] : g.edges()) {
        int x = u ^ v;
        if ((x & (x - 1)) != 0) return std::nullopt;
    }
    return d;
}

inline BoundsReport bounds_report(const Graph& g) {
    BoundsReport r;
    r.n = g.n();
    r.m = g.m();
    if (r.m >= 1) r.info_lb = ceil_log2(r.m);
    if (r.n >= 1) {
        auto ub = upper_general(r.n, r.m);
        r.upper_general = ub.value;
        r.upper_cap = ub.cap;
    }
    if (r.n >= 2 && r.m >= r.n) {
        auto eb = entropy_lower_bound(r.n, r.m);
        r.entropy_lb = eb.entropy_form;
        r.proof_form_lb = eb.log_form;
        r.log_form_lb = (static_cast<double>(r.m) * std::log(static_cast<double>(r.m))) /
                        (static_cast<double>(r.n) * std::log(std::exp(1.0) * r.n / 2.0));
    }
    ForestStats st = forest_stats(g);
    if (st.is_forest) {
        r.tree_exact = st.v1 + st.v2 - st.path_components;
        if (r.n >= 2 && r.m == r.n - 1) r.mintree_lb = mintree_bound(r.n);
    }
    if (auto d = hypercube_dimension(g); d && *d >= 2) {
        auto hb = hypercube_bounds(*d);
        r.hypercube_lb = hb.lower;
        r.hypercube_ub = hb.upper;
    }
    return r;
}

} // namespace pathsep

#endif
