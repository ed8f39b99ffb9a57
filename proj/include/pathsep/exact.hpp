#ifndef PATHSEP_EXACT_HPP
#define PATHSEP_EXACT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathsep/bounds.hpp"
#include "pathsep/graph.hpp"
#include "pathsep/verifier.hpp"

namespace pathsep {

struct ExactOptions {
    int max_vertices = 10;
    int max_edges = 14;
};

// All simple paths with at least one edge, canonicalized so the smaller
// endpoint comes first, sorted longest-first then lexicographically.
inline std::vector<Path> enumerate_paths(const Graph& g, const ExactOptions& opt = {}) {
    if (g.n() > opt.max_vertices || g.m() > opt.max_edges)
        throw std::invalid_argument("enumerate_paths: instance exceeds size guard (" +
                                    std::to_string(opt.max_vertices) + " vertices, " +
                                    std::to_string(opt.max_edges) + " edges)");
    std::vector<std::vector<int>> found;
    std::vector<int> cur;
    std::vector<char> onpath(g.n(), 0);

    auto dfs = [&](auto&& self, int v, int start) -> void {
        for (auto [w, id] : g.adjacent(v)) {
            if (onpath[w]) continue;
            cur.push_back(w);
            onpath[w] = 1;
            if (w > start) found.push_back(cur);
            self(self, w, start);
            onpath[w] = 0;
            cur.pop_back();
        }
    };
    for (int s = 0; s < g.n(); ++s) {
        cur = {s};
        std::fill(onpath.begin(), onpath.end(), 0);
        onpath[s] = 1;
        dfs(dfs, s, s);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::vector<Path> out;
    out.reserve(found.size());
    for (const auto& vs : found) out.push_back(validate_path(g, vs));
    return out;
}

struct ExactResult {
    int psn = 0;
    PathFamily witness;
};

namespace detail {

// Largest antichain in {0,1}^t: the central binomial coefficient.
inline long long max_antichain(int t) {
    long long c = 1;
    for (int i = 1; i <= t / 2; ++i) c = c * (t - i + 1) / i;
    return c;
}

inline int sperner_min_t(long long m) {
    int t = 0;
    while (max_antichain(t) < m) ++t;
    return t;
}

class ExactSearch {
public:
    ExactSearch(const Graph& g, const std::vector<Path>& candidates)
        : m_(g.m()), cand_(candidates) {
        nwords_ = (cand_.size() + 63) / 64;
        emask_.resize(cand_.size(), 0);
        for (std::size_t i = 0; i < cand_.size(); ++i)
            for (EdgeId e : cand_[i].edge_ids) emask_[i] |= (uint64_t{1} << e);
        cover_.assign(m_, std::vector<uint64_t>(nwords_, 0));
        sep_.assign(static_cast<std::size_t>(m_) * m_, std::vector<uint64_t>(nwords_, 0));
        for (std::size_t i = 0; i < cand_.size(); ++i) {
            for (int e = 0; e < m_; ++e) {
                if (!(emask_[i] >> e & 1)) continue;
                cover_[e][i >> 6] |= (uint64_t{1} << (i & 63));
                for (int f = 0; f < m_; ++f) {
                    if (f == e || (emask_[i] >> f & 1)) continue;
                    sep_[pairix(e, f)][i >> 6] |= (uint64_t{1} << (i & 63));
                }
            }
        }
    }

    // Searches for a separator of exactly t paths with indices increasing.
    std::optional<std::vector<int>> find(int t) {
        t_ = t;
        sig_.assign(m_, 0);
        chosen_.clear();
        if (dfs(0, 0)) return chosen_;
        return std::nullopt;
    }

private:
    std::size_t pairix(int e, int f) const {
        return static_cast<std::size_t>(e) * m_ + f;
    }

    bool suffix_hits(const std::vector<uint64_t>& mask, std::size_t from) const {
        std::size_t w0 = from >> 6;
        if (w0 >= nwords_) return false;
        uint64_t head = mask[w0] & ~((uint64_t{1} << (from & 63)) - 1);
        if (head) return true;
        for (std::size_t w = w0 + 1; w < nwords_; ++w)
            if (mask[w]) return true;
        return false;
    }

    bool prune(int level, std::size_t start) const {
        int rem = t_ - level;
        // Coverage: every uncovered edge still reachable.
        for (int e = 0; e < m_; ++e)
            if (sig_[e] == 0 && !suffix_hits(cover_[e], start)) return true;
        // Every currently dominated ordered pair must stay fixable.
        for (int e = 0; e < m_; ++e) {
            for (int f = 0; f < m_; ++f) {
                if (e == f) continue;
                if ((sig_[e] & ~sig_[f]) == 0 && !suffix_hits(sep_[pairix(e, f)], start))
                    return true;
            }
        }
        // Equal-signature groups must fit in an antichain of the remaining
        // coordinates.
        long long cap = max_antichain(rem);
        for (int e = 0; e < m_; ++e) {
            long long same = 0;
            for (int f = 0; f < m_; ++f)
                if (sig_[f] == sig_[e]) ++same;
            if (same > cap) return true;
        }
        return false;
    }

    bool complete() const {
        for (int e = 0; e < m_; ++e)
            if (sig_[e] == 0) return false;
        for (int e = 0; e < m_; ++e)
            for (int f = 0; f < m_; ++f)
                if (e != f && (sig_[e] & ~sig_[f]) == 0) return false;
        return true;
    }

    bool dfs(int level, std::size_t start) {
        if (level == t_) return complete();
        if (cand_.size() - start < static_cast<std::size_t>(t_ - level)) return false;
        if (prune(level, start)) return false;
        for (std::size_t i = start; i < cand_.size(); ++i) {
            chosen_.push_back(static_cast<int>(i));
            uint64_t bit = uint64_t{1} << level;
            for (int e = 0; e < m_; ++e)
                if (emask_[i] >> e & 1) sig_[e] |= bit;
            if (dfs(level + 1, i + 1)) return true;
            for (int e = 0; e < m_; ++e)
                if (emask_[i] >> e & 1) sig_[e] &= ~bit;
            chosen_.pop_back();
        }
        return false;
    }

    int m_;
    const std::vector<Path>& cand_;
    std::size_t nwords_ = 0;
    int t_ = 0;
    std::vector<uint64_t> emask_;
    std::vector<std::vector<uint64_t>> cover_;
    std::vector<std::vector<uint64_t>> sep_;
    std::vector<uint64_t> sig_;
    std::vector<int> chosen_;
};

} // namespace detail

// Minimum size of a path separator together with a witness, by iterative
// deepening from the entropy/antichain lower bounds. Intended for tiny
// instances only; the guard protects against accidental blowups.
inline ExactResult exact_psn(const Graph& g, const ExactOptions& opt = {}) {
    ExactResult res;
    if (g.m() == 0) {
        res.witness = make_family(g, std::vector<Path>{});
        return res;
    }
    if (g.m() == 1) {
        auto [u, v] = g.edge(0);
        res.psn = 1;
        res.witness = make_family(g, {std::vector<int>{u, v}});
        return res;
    }
    auto candidates = enumerate_paths(g, opt);
    if (g.m() > 62)
        throw std::invalid_argument("exact_psn supports at most 62 edges");

    int lb = detail::sperner_min_t(g.m());
    if (g.n() >= 2 && g.m() >= g.n()) {
        double elb = entropy_lower_bound(g.n(), g.m()).entropy_form;
        lb = std::max(lb, static_cast<int>(std::ceil(elb - 1e-9)));
    }
    lb = std::max(lb, 1);

    detail::ExactSearch search(g, candidates);
    for (int t = lb; t <= g.m(); ++t) {
        auto hit = search.find(t);
        if (hit) {
            res.psn = t;
            std::vector<Path> ps;
            for (int i : *hit) ps.push_back(candidates[i]);
            res.witness = make_family(g, std::move(ps));
            return res;
        }
    }
    throw std::logic_error("exact_psn: singleton family should always succeed");
}

} // namespace pathsep

#endif
