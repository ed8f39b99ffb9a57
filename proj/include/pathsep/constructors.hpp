#ifndef PATHSEP_CONSTRUCTORS_HPP
#define PATHSEP_CONSTRUCTORS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "pathsep/bounds.hpp"
#include "pathsep/coloring.hpp"
#include "pathsep/cover.hpp"
#include "pathsep/graph.hpp"
#include "pathsep/verifier.hpp"

namespace pathsep {

struct ConstructionResult {
    PathFamily family;
    std::string method;
    long long claimed_bound = 0;
    int retries = 0;
    int patched = 0;
    bool certified = false;
    uint64_t seed = 0;

    int size() const { return family.size(); }
};

namespace detail {

// Re-verifies and, for every flagged direction (e, f) and every uncovered
// edge, adds the single-edge path e. A singleton contains e and nothing
// else, so it fixes all of e's missing directions at once.
inline int verify_and_patch(const Graph& g, std::vector<std::vector<int>>& paths,
                            int max_rounds = 8) {
    int patched = 0;
    for (int round = 0; round < max_rounds; ++round) {
        auto rep = check_separator(g, make_family(g, paths));
        if (rep.is_separator) return patched;
        std::set<EdgeId> fix(rep.uncovered_edges.begin(), rep.uncovered_edges.end());
        for (const auto& up : rep.unseparated_pairs) fix.insert(up.e);
        for (EdgeId e : fix) {
            auto [u, v] = g.edge(e);
            paths.push_back({u, v});
            ++patched;
        }
    }
    auto rep = check_separator(g, make_family(g, paths), false);
    if (!rep.is_separator)
        throw std::logic_error("verify_and_patch: patching did not converge");
    return patched;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Forests: exactly v1 + v2 - p paths.
// ---------------------------------------------------------------------------

namespace detail {

struct TreeFrame {
    std::vector<int> vertices;  // component members
    std::vector<int> leaves;    // in DFS (circular) order
    std::vector<int> parent;    // indexed by vertex, -1 at root
    std::vector<int> depth;
};

inline TreeFrame explore_tree(const Graph& g, int root, std::vector<char>& seen) {
    TreeFrame fr;
    fr.parent.assign(g.n(), -1);
    fr.depth.assign(g.n(), 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        fr.vertices.push_back(v);
        if (g.degree(v) == 1) fr.leaves.push_back(v);
        // Push children in reverse adjacency order so the DFS visits them
        // in adjacency order, giving one fixed planar circular order.
        const auto& adj = g.adjacent(v);
        for (auto it = adj.rbegin(); it != adj.rend(); ++it) {
            auto [w, id] = *it;
            if (seen[w]) continue;
            seen[w] = 1;
            fr.parent[w] = v;
            fr.depth[w] = fr.depth[v] + 1;
            stack.push_back(w);
        }
    }
    return fr;
}

inline std::vector<int> tree_walk(const TreeFrame& fr, int a, int b) {
    std::vector<int> left, right;
    int x = a, y = b;
    while (x != y) {
        if (fr.depth[x] >= fr.depth[y]) {
            left.push_back(x);
            x = fr.parent[x];
        } else {
            right.push_back(y);
            y = fr.parent[y];
        }
    }
    left.push_back(x);
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
}

// The v1 face paths of one non-path tree component: paths between
// consecutive leaves in DFS circular order. Covers every edge exactly twice.
inline std::vector<std::vector<int>> tree_face_paths(const Graph& g, int root,
                                                     std::vector<char>& seen) {
    TreeFrame fr = explore_tree(g, root, seen);
    std::vector<std::vector<int>> out;
    int L = static_cast<int>(fr.leaves.size());
    for (int i = 0; i < L; ++i)
        out.push_back(tree_walk(fr, fr.leaves[i], fr.leaves[(i + 1) % L]));
    return out;
}

} // namespace detail

inline ConstructionResult separator_forest(const Graph& g) {
    ForestStats st = forest_stats(g);
    if (!st.is_forest) throw std::invalid_argument("separator_forest: input has a cycle");

    std::vector<std::vector<int>> paths;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> degree2; // split points, handled after all faces exist
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s] || g.degree(s) == 0) {
            seen[s] = 1;
            continue;
        }
        // Classify the component: a path component keeps max degree <= 2.
        bool is_path_comp = true;
        {
            std::vector<int> stack{s};
            std::vector<int> comp_vertices;
            std::vector<char> mark(g.n(), 0);
            mark[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp_vertices.push_back(v);
                if (g.degree(v) > 2) is_path_comp = false;
                for (auto [w, id] : g.adjacent(v))
                    if (!mark[w]) {
                        mark[w] = 1;
                        stack.push_back(w);
                    }
            }
            if (is_path_comp) {
                for (int v : comp_vertices) {
                    seen[v] = 1;
                    for (auto [w, id] : g.adjacent(v))
                        if (v < w) paths.push_back({v, w});
                }
                continue;
            }
        }
        // Root at the component's first branch vertex and note its split
        // points.
        int root;
        {
            std::vector<int> stack{s};
            std::vector<char> mark(g.n(), 0);
            mark[s] = 1;
            root = -1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                if (g.degree(v) >= 3 && root < 0) root = v;
                if (g.degree(v) == 2) degree2.push_back(v);
                for (auto [w, id] : g.adjacent(v))
                    if (!mark[w]) {
                        mark[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        auto faces = detail::tree_face_paths(g, root, seen);
        paths.insert(paths.end(), faces.begin(), faces.end());
    }

    // Split one current path at every degree-2 vertex. Each such vertex is
    // interior to at least two paths throughout, so a host always exists.
    std::sort(degree2.begin(), degree2.end());
    for (int w : degree2) {
        bool done = false;
        for (std::size_t i = 0; i < paths.size() && !done; ++i) {
            const auto& p = paths[i];
            for (std::size_t k = 1; k + 1 < p.size(); ++k) {
                if (p[k] != w) continue;
                std::vector<int> first(p.begin(), p.begin() + k + 1);
                std::vector<int> second(p.begin() + k, p.end());
                paths[i] = std::move(first);
                paths.push_back(std::move(second));
                done = true;
                break;
            }
        }
        if (!done) throw std::logic_error("separator_forest: no splittable path");
    }

    ConstructionResult res;
    res.method = "forest";
    res.claimed_bound = st.v1 + st.v2 - st.path_components;
    res.family = make_family(g, paths);
    auto rep = check_separator(g, res.family, false);
    if (!rep.is_separator || res.family.size() != res.claimed_bound)
        throw std::logic_error("separator_forest: construction invariant failed");
    res.certified = true;
    return res;
}

// ---------------------------------------------------------------------------
// Complete graphs: Walecki cover plus three random permuted copies.
// ---------------------------------------------------------------------------

inline ConstructionResult separator_complete(const Graph& kn, uint64_t seed,
                                             int max_retries = 64) {
    const int n = kn.n();
    if (n < 5) throw std::invalid_argument("separator_complete needs n >= 5");
    if (!is_complete_graph(kn))
        throw std::invalid_argument("separator_complete: graph is not complete");

    PathFamily base = walecki_paths(kn);
    std::mt19937_64 rng(seed);

    ConstructionResult res;
    res.method = "complete";
    res.seed = seed;
    res.claimed_bound = 4LL * ((n + 1) / 2) + 2;

    std::vector<std::vector<int>> best;
    std::size_t best_misses = static_cast<std::size_t>(-1);

    std::vector<int> perm(n);
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        std::vector<std::vector<int>> paths;
        for (const auto& p : base.paths) paths.push_back(p.vertices);
        for (int rep = 0; rep < 3; ++rep) {
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (const auto& p : base.paths) {
                std::vector<int> q(p.vertices.size());
                for (std::size_t i = 0; i < q.size(); ++i) q[i] = perm[p.vertices[i]];
                paths.push_back(std::move(q));
            }
        }
        auto report = check_separator(kn, make_family(kn, paths));
        if (report.is_separator) {
            res.family = make_family(kn, paths);
            res.certified = true;
            res.retries = attempt;
            return res;
        }
        std::set<EdgeId> firsts;
        for (const auto& up : report.unseparated_pairs) firsts.insert(up.e);
        if (firsts.size() <= 2) {
            for (EdgeId e : firsts) {
                auto [u, v] = kn.edge(e);
                paths.push_back({u, v});
            }
            auto again = check_separator(kn, make_family(kn, paths), false);
            if (again.is_separator) {
                res.family = make_family(kn, paths);
                res.certified = true;
                res.retries = attempt;
                res.patched = static_cast<int>(firsts.size());
                return res;
            }
        }
        if (firsts.size() < best_misses) {
            best_misses = firsts.size();
            best = paths;
        }
    }
    res.family = make_family(kn, best);
    res.retries = max_retries;
    res.certified = false;
    return res;
}

// Number of unordered pairs the unpermuted-plus-three-copies system leaves
// unseparated; the quantity whose expectation the randomized argument
// bounds. Exposed for the Monte Carlo checks.
inline std::size_t complete_unseparated_after_union(const Graph& kn, const PathFamily& base,
                                                    uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = kn.n();
    std::vector<int> perm(n);
    std::vector<std::vector<int>> paths;
    for (const auto& p : base.paths) paths.push_back(p.vertices);
    for (int rep = 0; rep < 3; ++rep) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (const auto& p : base.paths) {
            std::vector<int> q(p.vertices.size());
            for (std::size_t i = 0; i < q.size(); ++i) q[i] = perm[p.vertices[i]];
            paths.push_back(std::move(q));
        }
    }
    return count_unseparated_unordered(kn, make_family(kn, paths));
}

// ---------------------------------------------------------------------------
// Hypercubes: recursive lift with mirror joins, subcube covers, and
// crossing-edge zigzags selected by binary codes.
// ---------------------------------------------------------------------------

namespace detail {

// Maximum bipartite matching (Kuhn) from crossing positions to paths whose
// endpoint sits there. A matched position's crossing edge becomes the join
// edge of exactly one lifted path, which then contains that crossing edge
// and no other.
inline std::vector<int> match_join_vertices(const std::vector<std::vector<int>>& paths,
                                            int nverts) {
    std::vector<std::vector<int>> cand(nverts); // vertex -> path indices
    for (std::size_t i = 0; i < paths.size(); ++i) {
        cand[paths[i].front()].push_back(static_cast<int>(i));
        if (paths[i].back() != paths[i].front())
            cand[paths[i].back()].push_back(static_cast<int>(i));
    }
    std::vector<int> path_of(nverts, -1), vert_of(paths.size(), -1);
    std::vector<char> used(paths.size(), 0);
    auto augment = [&](auto&& self, int v) -> bool {
        for (int pi : cand[v]) {
            if (used[pi]) continue;
            used[pi] = 1;
            if (vert_of[pi] < 0 || self(self, vert_of[pi])) {
                vert_of[pi] = v;
                path_of[v] = pi;
                return true;
            }
        }
        return false;
    };
    for (int v = 0; v < nverts; ++v) {
        std::fill(used.begin(), used.end(), 0);
        augment(augment, v);
    }
    return path_of;
}

// Codes for the unmatched crossing positions. Joined positions keep code
// zero; their lifted path already isolates them, and a set bit in any
// unmatched code then wins against them. The unmatched positions draw
// pairwise-incomparable codes from the middle layer of a code length
// chosen by cost: each extra set costs two zigzag paths, each position
// past the antichain capacity costs one singleton path.
struct CrossingPlan {
    std::vector<uint32_t> codes;  // per crossing position (subcube vertex)
    std::vector<int> singletons;  // positions needing their own path
    int bits = 0;
};

inline long long middle_binomial(int k) {
    long long c = 1;
    for (int i = 1; i <= k / 2; ++i) c = c * (k - i + 1) / i;
    return c;
}

inline CrossingPlan crossing_codes(const std::vector<int>& nonjoin, int nverts) {
    CrossingPlan plan;
    plan.codes.assign(nverts, 0);
    if (nonjoin.empty()) return plan;
    long long want = static_cast<long long>(nonjoin.size());
    long long best_cost = -1;
    for (int k = 1; k <= 24; ++k) {
        long long cap = middle_binomial(k);
        long long cost = 2LL * k + std::max<long long>(0, want - cap);
        if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            plan.bits = k;
        }
        if (cap >= want) break;
    }
    const int weight = std::max(1, plan.bits / 2);
    std::vector<uint32_t> pool;
    for (uint32_t c = 1; c < (uint32_t{1} << plan.bits); ++c)
        if (std::popcount(c) == weight) pool.push_back(c);
    for (std::size_t k = 0; k < nonjoin.size(); ++k) {
        if (k < pool.size()) plan.codes[nonjoin[k]] = pool[k];
        else plan.singletons.push_back(nonjoin[k]);
    }
    return plan;
}

inline std::vector<std::vector<int>> hypercube_family(int d, int& patched) {
    if (d == 2) {
        return {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    }
    std::vector<std::vector<int>> sub = hypercube_family(d - 1, patched);
    const int mask = 1 << (d - 1);
    const int half = 1 << (d - 1);
    std::vector<std::vector<int>> fam;

    // Group 1: each subfamily path joined with its mirror through one
    // crossing edge, preferring distinct crossing edges via matching.
    std::vector<int> path_of = match_join_vertices(sub, half);
    std::vector<int> join_of(sub.size(), -1);
    for (int v = 0; v < half; ++v)
        if (path_of[v] >= 0) join_of[path_of[v]] = v;
    for (std::size_t i = 0; i < sub.size(); ++i) {
        std::vector<int> p = sub[i];
        int join = join_of[i] >= 0 ? join_of[i] : p.back();
        if (p.front() == join) std::reverse(p.begin(), p.end());
        std::vector<int> lifted = p;
        for (auto it = p.rbegin(); it != p.rend(); ++it) lifted.push_back(*it | mask);
        fam.push_back(std::move(lifted));
    }

    // Group 2: a cover of the lower subcube plus its mirror; separates
    // mirror-image pairs and keeps every interior edge in a crossing-free
    // path.
    Graph qprev = Graph((1 << (d - 1)), [&] {
        std::vector<std::pair<int, int>> e;
        for (int v = 0; v < (1 << (d - 1)); ++v)
            for (int b = 0; b < d - 1; ++b)
                if (!(v & (1 << b))) e.push_back({v, v | (1 << b)});
        return e;
    }());
    PathFamily cov = hypercube_cover(qprev, d - 1);
    for (const auto& p : cov.paths) {
        fam.push_back(p.vertices);
        std::vector<int> mirror(p.vertices.size());
        for (std::size_t k = 0; k < mirror.size(); ++k) mirror[k] = p.vertices[k] | mask;
        fam.push_back(std::move(mirror));
    }

    // Group 3: zigzags along the Gray-code Hamilton path. S_j selects the
    // crossing positions whose code has bit j set; the all-crossings pair
    // handles crossing-versus-interior.
    std::vector<int> nonjoin;
    for (int v = 0; v < half; ++v)
        if (path_of[v] < 0) nonjoin.push_back(v);
    auto plan = crossing_codes(nonjoin, half);
    for (int j = 0; j < plan.bits; ++j) {
        std::vector<char> cross(half, 0);
        bool nonempty = false;
        for (int v = 0; v < half; ++v) {
            if (plan.codes[v] >> j & 1) {
                cross[v] = 1;
                nonempty = true;
            }
        }
        if (!nonempty) continue;
        // Rotations only vary the endpoints; they feed the next level's
        // join matching.
        int offset = ((j + 1) * half) / (plan.bits + 1);
        fam.push_back(detail::crossing_zigzag(d, cross, 0, offset));
        fam.push_back(detail::crossing_zigzag(d, cross, 1, offset));
    }
    for (int v : plan.singletons) fam.push_back({v, v | mask});
    std::vector<char> all(half, 1);
    fam.push_back(detail::crossing_zigzag(d, all, 0));
    fam.push_back(detail::crossing_zigzag(d, all, 1));

    // Certify this level before it feeds the next one.
    Graph qd = Graph((1 << d), [&] {
        std::vector<std::pair<int, int>> e;
        for (int v = 0; v < (1 << d); ++v)
            for (int b = 0; b < d; ++b)
                if (!(v & (1 << b))) e.push_back({v, v | (1 << b)});
        return e;
    }());
    patched += verify_and_patch(qd, fam);
    return fam;
}

} // namespace detail

inline ConstructionResult separator_hypercube(const Graph& qd, int d) {
    if (d < 2) throw std::invalid_argument("separator_hypercube needs d >= 2");
    ConstructionResult res;
    res.method = "hypercube";
    res.claimed_bound = 2LL * d * (d + 1) - 8;
    int patched = 0;
    auto fam = detail::hypercube_family(d, patched);
    res.family = make_family(qd, fam);
    res.patched = patched;
    res.certified = check_separator(qd, res.family, false).is_separator;
    if (!res.certified) throw std::logic_error("separator_hypercube: verification failed");
    return res;
}

// ---------------------------------------------------------------------------
// General graphs: cut path cover plus per-bit label covers, both polarities.
// ---------------------------------------------------------------------------

inline ConstructionResult separator_general(const Graph& g, uint64_t seed = 0) {
    ConstructionResult res;
    res.method = "general";
    res.seed = seed;
    const int n = g.n();
    const long long m = g.m();
    if (m == 0) {
        res.family = make_family(g, std::vector<Path>{});
        res.certified = true;
        return res;
    }
    long long per = (m + n - 1) / n;
    const int t = per > 1 ? ceil_log2(per) : 0;
    res.claimed_bound = 2LL * n * t + n;

    PathFamily pieces = cut_paths(g, path_cover(g), static_cast<int>(per));

    // Injective edge labels within each piece; a piece holds at most
    // ceil(m/n) <= 2^t edges, so t bits suffice when zero is allowed.
    std::vector<int> label(m, 0);
    for (const auto& p : pieces.paths) {
        int next = 0;
        for (EdgeId e : p.edge_ids) label[e] = next++;
    }

    std::vector<std::vector<int>> family;
    for (const auto& p : pieces.paths) family.push_back(p.vertices);
    for (int bit = 0; bit < t; ++bit) {
        for (int polarity = 0; polarity < 2; ++polarity) {
            std::vector<std::pair<int, int>> sub;
            for (EdgeId e = 0; e < m; ++e)
                if (((label[e] >> bit) & 1) == polarity) sub.push_back(g.edge(e));
            if (sub.empty()) continue;
            PathFamily cov = path_cover(Graph(n, sub));
            for (const auto& p : cov.paths) family.push_back(p.vertices);
        }
    }

    res.patched = detail::verify_and_patch(g, family);
    res.family = make_family(g, family);
    res.certified = true;
    return res;
}

// ---------------------------------------------------------------------------
// Random graphs: partition into role subgraphs, refine into random classes,
// edge-color, split matchings by binary codes, stitch with connector edges.
// ---------------------------------------------------------------------------

struct GnpParameters {
    int r = 1; // random classes per repetition
    int s = 1; // repetitions
};

inline GnpParameters gnp_parameters(int n, double p) {
    GnpParameters par;
    double ln_n = std::log(static_cast<double>(n));
    par.r = std::max<int>(1, static_cast<int>(3.0 * p * n / ln_n + 1e-9));
    double x = p * n / ln_n;
    if (x > 1.05)
        par.s = std::clamp<int>(static_cast<int>(4.0 * ln_n / std::log(x) + 1e-9), 1, 32);
    else
        par.s = 32;
    return par;
}

namespace detail {

// One source-half matching piece chained through connector edges. Greedy
// both-end extension; when no direct connector exists, a single free vertex
// bridges two connector edges. Falls back to several pieces instead of
// failing.
class Stitcher {
public:
    Stitcher(const Graph& g, const std::vector<std::vector<int>>& conn_adj,
             const std::vector<Bitset>& conn_bits)
        : g_(g), conn_adj_(conn_adj), conn_bits_(conn_bits) {}

    std::vector<std::vector<int>> stitch(const std::vector<EdgeId>& matching,
                                         std::mt19937_64& rng) const {
        std::vector<std::pair<int, int>> nodes; // oriented matching edges
        for (EdgeId e : matching) {
            auto [u, v] = g_.edge(e);
            if (rng() & 1) std::swap(u, v);
            nodes.push_back({u, v});
        }
        std::shuffle(nodes.begin(), nodes.end(), rng);

        std::vector<char> in_matching(g_.n(), 0);
        for (auto [u, v] : nodes) in_matching[u] = in_matching[v] = 1;

        std::vector<std::vector<int>> pieces;
        std::vector<char> used(nodes.size(), 0);
        std::size_t remaining = nodes.size();
        while (remaining > 0) {
            std::size_t s0 = 0;
            while (used[s0]) ++s0;
            used[s0] = 1;
            --remaining;
            std::vector<int> piece{nodes[s0].first, nodes[s0].second};
            std::vector<char> busy(g_.n(), 0);
            busy[nodes[s0].first] = busy[nodes[s0].second] = 1;

            bool grew = true;
            while (grew && remaining > 0) {
                grew = false;
                // Extend at the tail, then at the head.
                for (int end = 0; end < 2 && !grew; ++end) {
                    int tip = end == 0 ? piece.back() : piece.front();
                    int got = -1, bridge = -1;
                    for (std::size_t k = 0; k < nodes.size() && got < 0; ++k) {
                        if (used[k]) continue;
                        int a = end == 0 ? nodes[k].first : nodes[k].second;
                        int b = end == 0 ? nodes[k].second : nodes[k].first;
                        if (busy[a] || busy[b]) continue;
                        if (conn_bits_[tip].test(static_cast<std::size_t>(a))) {
                            got = static_cast<int>(k);
                            break;
                        }
                        // one-vertex bridge tip - w - a
                        for (int w : conn_adj_[tip]) {
                            if (busy[w] || in_matching[w]) continue;
                            if (conn_bits_[w].test(static_cast<std::size_t>(a))) {
                                got = static_cast<int>(k);
                                bridge = w;
                                break;
                            }
                        }
                    }
                    if (got < 0) continue;
                    used[got] = 1;
                    --remaining;
                    int a = end == 0 ? nodes[got].first : nodes[got].second;
                    int b = end == 0 ? nodes[got].second : nodes[got].first;
                    if (end == 0) {
                        if (bridge >= 0) {
                            piece.push_back(bridge);
                            busy[bridge] = 1;
                        }
                        piece.push_back(a);
                        piece.push_back(b);
                    } else {
                        if (bridge >= 0) {
                            piece.insert(piece.begin(), bridge);
                            busy[bridge] = 1;
                        }
                        piece.insert(piece.begin(), a);
                        piece.insert(piece.begin(), b);
                    }
                    busy[a] = busy[b] = 1;
                    grew = true;
                }
            }
            pieces.push_back(std::move(piece));
        }
        return pieces;
    }

private:
    const Graph& g_;
    const std::vector<std::vector<int>>& conn_adj_;
    const std::vector<Bitset>& conn_bits_;
};

} // namespace detail

inline ConstructionResult separator_gnp(const Graph& g, double p, uint64_t seed) {
    ConstructionResult res;
    res.method = "gnp";
    res.seed = seed;
    const int n = g.n();
    const long long m = g.m();
    if (m == 0) {
        res.family = make_family(g, std::vector<Path>{});
        res.certified = true;
        return res;
    }
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("separator_gnp needs p in (0,1]");
    GnpParameters par = gnp_parameters(n, p);
    res.claimed_bound =
        static_cast<long long>(std::ceil(64.0 * p * n * par.s)); // pinned desk-scale cap

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> four(0, 3);
    std::vector<int> cls(m);
    for (auto& c : cls) c = four(rng);

    // The six role subgraphs as class pairs; each unordered class pair
    // appears in exactly one source half, so every co-located edge pair has
    // a responsible subsystem.
    static const int source_classes[6][2] = {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}};
    static const int partner[6] = {1, 0, 3, 2, 5, 4};

    std::vector<std::vector<int>> family;

    for (int role = 0; role < 6; ++role) {
        std::vector<EdgeId> source;
        for (EdgeId e = 0; e < m; ++e) {
            int c = cls[e];
            if (c == source_classes[role][0] || c == source_classes[role][1])
                source.push_back(e);
        }
        // Connector adjacency from the partner half.
        std::vector<std::vector<int>> conn_adj(n);
        std::vector<Bitset> conn_bits(n, Bitset(static_cast<std::size_t>(n)));
        for (EdgeId e = 0; e < m; ++e) {
            int c = cls[e];
            if (c != source_classes[partner[role]][0] && c != source_classes[partner[role]][1])
                continue;
            auto [u, v] = g.edge(e);
            conn_adj[u].push_back(v);
            conn_adj[v].push_back(u);
            conn_bits[u].set(static_cast<std::size_t>(v));
            conn_bits[v].set(static_cast<std::size_t>(u));
        }
        detail::Stitcher stitcher(g, conn_adj, conn_bits);

        // r random classes, s times; color each class into Delta+1
        // matchings, then per matching the binary-code submatchings, each
        // stitched into paths. The code length follows the class's own
        // matching count.
        std::uniform_int_distribution<int> pick_class(0, par.r - 1);
        for (int rep = 0; rep < par.s; ++rep) {
            std::vector<std::vector<EdgeId>> buckets(par.r);
            for (EdgeId e : source) buckets[pick_class(rng)].push_back(e);
            for (const auto& bucket : buckets) {
                if (bucket.empty()) continue;
                std::vector<std::pair<int, int>> hedges;
                for (EdgeId e : bucket) hedges.push_back(g.edge(e));
                EdgeColoring ec = vizing_color(n, hedges);
                const int t_bits = std::max(1, ceil_log2(ec.num_colors));
                const uint32_t ncodes = (uint32_t{1} << t_bits) - 1;
                for (auto& grp : matchings_by_color(ec)) {
                    if (grp.empty()) continue;
                    std::vector<EdgeId> matching;
                    for (int pos : grp) matching.push_back(bucket[pos]);
                    if (matching.size() == 1) {
                        auto [u, v] = g.edge(matching[0]);
                        family.push_back({u, v});
                        continue;
                    }
                    // Cyclic nonzero codes; bit j selects the submatching.
                    for (int j = 0; j < t_bits; ++j) {
                        std::vector<EdgeId> sub;
                        for (std::size_t k = 0; k < matching.size(); ++k) {
                            uint32_t code = 1 + static_cast<uint32_t>(k % ncodes);
                            if (code >> j & 1) sub.push_back(matching[k]);
                        }
                        if (sub.empty()) continue;
                        for (auto& piece : stitcher.stitch(sub, rng))
                            family.push_back(std::move(piece));
                    }
                }
            }
        }
    }

    res.patched = detail::verify_and_patch(g, family);
    res.family = make_family(g, family);
    res.certified = true;
    return res;
}

} // namespace pathsep

#endif
