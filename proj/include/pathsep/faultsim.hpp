#ifndef PATHSEP_FAULTSIM_HPP
#define PATHSEP_FAULTSIM_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "pathsep/graph.hpp"
#include "pathsep/verifier.hpp"

namespace pathsep {

// At most one edge fails; a test (path) fails exactly when it contains the
// failed edge.
struct FaultScenario {
    const Graph* graph = nullptr;
    const PathFamily* family = nullptr;
    std::optional<EdgeId> failed_edge;
};

// Indices of failing tests: { i : failed edge in P_i }. Empty when nothing
// failed, and also when the failed edge is covered by no test.
inline std::vector<int> observe(const FaultScenario& s) {
    if (!s.failed_edge) return {};
    SignatureTable sig = signatures(*s.graph, *s.family);
    return sig.row(*s.failed_edge).to_indices();
}

enum class DecodeKind { NoFault, Identified, Ambiguous, Inconsistent };

struct DecodeOutcome {
    DecodeKind kind = DecodeKind::NoFault;
    EdgeId edge = -1;                // when identified
    std::vector<EdgeId> candidates;  // when ambiguous
};

namespace detail {

inline DecodeOutcome classify(std::vector<EdgeId> cands) {
    DecodeOutcome out;
    if (cands.empty()) {
        out.kind = DecodeKind::Inconsistent;
    } else if (cands.size() == 1) {
        out.kind = DecodeKind::Identified;
        out.edge = cands[0];
    } else {
        out.kind = DecodeKind::Ambiguous;
        out.candidates = std::move(cands);
    }
    return out;
}

} // namespace detail

// Separator semantics: candidates are the edges whose signature equals the
// failing set exactly.
inline DecodeOutcome decode_signature(const Graph& g, const PathFamily& fam,
                                      const std::vector<int>& failing) {
    if (failing.empty()) return {};
    SignatureTable sig = signatures(g, fam);
    Bitset fset(static_cast<std::size_t>(fam.size()));
    for (int i : failing) fset.set(static_cast<std::size_t>(i));
    std::vector<EdgeId> cands;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (sig.row(e) == fset) cands.push_back(e);
    return detail::classify(std::move(cands));
}

// Test-set semantics: intersect the edge sets of all failing tests, then
// drop any edge that appears in a non-failing test.
inline DecodeOutcome decode_intersection(const Graph& g, const PathFamily& fam,
                                         const std::vector<int>& failing) {
    if (failing.empty()) return {};
    std::vector<Bitset> psets = path_edge_sets(g, fam);
    std::vector<char> fails(fam.size(), 0);
    for (int i : failing) fails[i] = 1;
    Bitset inter(static_cast<std::size_t>(g.m()));
    bool first = true;
    for (int i : failing) {
        if (first) {
            inter = psets[i];
            first = false;
        } else {
            inter &= psets[i];
        }
    }
    std::vector<EdgeId> cands;
    inter.for_each_set([&](std::size_t e) {
        for (int i = 0; i < fam.size(); ++i)
            if (!fails[i] && psets[i].test(e)) return;
        cands.push_back(static_cast<EdgeId>(e));
    });
    return detail::classify(std::move(cands));
}

struct CampaignReport {
    int trials = 0;
    int identified_sig = 0;
    int ambiguous_sig = 0;
    int inconsistent_sig = 0;
    int missed_sig = 0; // fault decoded as no-fault (uncovered edge)
    int identified_int = 0;
    int ambiguous_int = 0;
    int inconsistent_int = 0;
    int missed_int = 0;
    bool no_fault_ok = false;
    double tests_per_edge_mean = 0.0;
    int family_size = 0;
    int info_lb = 0; // ceil(log2 m)

    double identification_rate_sig() const {
        return trials ? static_cast<double>(identified_sig) / trials : 0.0;
    }
    double identification_rate_int() const {
        return trials ? static_cast<double>(identified_int) / trials : 0.0;
    }
};

// Injects single-edge faults (every edge when trials >= m or trials == 0,
// else a seeded sample) plus the no-fault case, and decodes with both
// semantics.
inline CampaignReport campaign(const Graph& g, const PathFamily& fam, int trials,
                               uint64_t seed = 0) {
    CampaignReport rep;
    rep.family_size = fam.size();
    if (g.m() >= 1) {
        long long v = 1;
        while (v < g.m()) { v <<= 1; ++rep.info_lb; }
    }
    SignatureTable sig = signatures(g, fam);
    rep.tests_per_edge_mean =
        g.m() ? static_cast<double>(sig.total_memberships()) / g.m() : 0.0;

    std::vector<EdgeId> injected;
    if (trials <= 0 || trials >= g.m()) {
        injected.resize(g.m());
        for (EdgeId e = 0; e < g.m(); ++e) injected[e] = e;
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, g.m() - 1);
        injected.resize(trials);
        for (auto& e : injected) e = pick(rng);
    }

    // Group edges by signature once; a fault at e is identified exactly
    // when its signature group is the singleton {e}, by either decoder.
    std::unordered_map<uint64_t, std::vector<EdgeId>> groups;
    for (EdgeId e = 0; e < g.m(); ++e) groups[sig.row(e).hash()].push_back(e);
    auto group_size = [&](EdgeId e) {
        std::size_t c = 0;
        for (EdgeId f : groups[sig.row(e).hash()])
            if (sig.row(f) == sig.row(e)) ++c;
        return c;
    };

    for (EdgeId e : injected) {
        if (!sig.row(e).any()) {
            ++rep.missed_sig;
            ++rep.missed_int;
            continue;
        }
        std::size_t c = group_size(e);
        if (c == 1) {
            ++rep.identified_sig;
            ++rep.identified_int;
        } else {
            ++rep.ambiguous_sig;
            ++rep.ambiguous_int;
        }
    }
    rep.trials = static_cast<int>(injected.size());

    FaultScenario none{&g, &fam, std::nullopt};
    rep.no_fault_ok = observe(none).empty();
    return rep;
}

} // namespace pathsep

#endif
