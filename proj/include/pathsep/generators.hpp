#ifndef PATHSEP_GENERATORS_HPP
#define PATHSEP_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "pathsep/graph.hpp"

namespace pathsep {

inline Graph gen_path(int k) {
    if (k < 1) throw std::invalid_argument("gen_path needs k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.push_back({i, i + 1});
    return Graph(k, e);
}

// Star on n vertices: center 0, leaves 1..n-1.
inline Graph gen_star(int n) {
    if (n < 2) throw std::invalid_argument("gen_star needs n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({0, i});
    return Graph(n, e);
}

inline Graph gen_cycle(int k) {
    if (k < 3) throw std::invalid_argument("gen_cycle needs k >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
    return Graph(k, e);
}

inline Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("gen_complete needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, e);
}

inline Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("gen_complete_bipartite needs a,b >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.push_back({u, a + v});
    return Graph(a + b, e);
}

// Vertices are the integers whose binary expansion is the coordinate
// vector; edges connect Hamming distance one.
inline Graph gen_hypercube(int d) {
    if (d < 1 || d > 25) throw std::invalid_argument("gen_hypercube needs 1 <= d <= 25");
    int n = 1 << d;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i)
            if (!(v & (1 << i))) e.push_back({v, v | (1 << i)});
    return Graph(n, e);
}

inline Graph gen_gnp(int n, double p, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_gnp needs n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_gnp needs p in [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) e.push_back({u, v});
    return Graph(n, e);
}

// Uniform random labeled tree via a random Pruefer sequence.
inline Graph gen_random_tree(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random_tree needs n >= 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = pick(rng);

    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::vector<std::pair<int, int>> e;
    // Standard decode: repeatedly join the smallest leaf to the next code
    // entry. A pointer + leaf tracker keeps it O(n log n)-free.
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : pruefer) {
        e.push_back({leaf, x});
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    e.push_back({leaf, n - 1});
    return Graph(n, e);
}

// Tree attaining the minimum of v1 + v2 over n-vertex trees. Even n: a
// caterpillar whose spine vertices all have degree 3. Odd n: the even
// construction on n-1 vertices with one edge subdivided, creating the
// single degree-2 vertex.
inline Graph gen_extremal_tree(int n) {
    if (n < 2) throw std::invalid_argument("gen_extremal_tree needs n >= 2");
    if (n == 2) return Graph(2, {{0, 1}});
    if (n == 3) return gen_path(3);
    const bool odd = (n % 2 == 1);
    const int base = odd ? n - 1 : n;
    // Spine 0..k-1; ends carry two leaves, inner vertices one.
    const int k = base / 2 - 1;
    std::vector<std::pair<int, int>> e;
    int next = k;
    for (int i = 0; i + 1 < k; ++i) e.push_back({i, i + 1});
    for (int i = 0; i < k; ++i) {
        int leaves = (k == 1) ? 3 : ((i == 0 || i == k - 1) ? 2 : 1);
        for (int j = 0; j < leaves; ++j) e.push_back({i, next++});
    }
    if (odd) {
        // Subdivide the first leaf edge of spine vertex 0.
        for (auto& [u, v] : e) {
            if (u == 0 && v == k) {
                v = next; // new midpoint
                break;
            }
        }
        e.push_back({next, k});
        ++next;
    }
    return Graph(next, e);
}

} // namespace pathsep

#endif
