#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pathsep/constructors.hpp"
#include "pathsep/faultsim.hpp"
#include "pathsep/generators.hpp"

using namespace pathsep;

TEST_CASE("observe returns the failing test set") {
    Graph p4 = gen_path(4);
    auto fam = make_family(p4, {{0, 1, 2}, {1, 2, 3}, {2, 3}});
    FaultScenario none{&p4, &fam, std::nullopt};
    CHECK(observe(none).empty());

    FaultScenario mid{&p4, &fam, 1}; // edge (1,2) sits in tests 0 and 1
    CHECK(observe(mid) == std::vector<int>{0, 1});

    Graph p3 = gen_path(3);
    auto partial = make_family(p3, {{0, 1}});
    FaultScenario uncov{&p3, &partial, 1};
    CHECK(observe(uncov).empty()); // indistinguishable from no fault
}

TEST_CASE("decoding over a separator identifies every edge") {
    Graph t = gen_random_tree(24, 5);
    auto res = separator_forest(t);
    for (EdgeId e = 0; e < t.m(); ++e) {
        FaultScenario s{&t, &res.family, e};
        auto failing = observe(s);
        auto d1 = decode_signature(t, res.family, failing);
        auto d2 = decode_intersection(t, res.family, failing);
        REQUIRE(d1.kind == DecodeKind::Identified);
        REQUIRE(d1.edge == e);
        REQUIRE(d2.kind == DecodeKind::Identified);
        REQUIRE(d2.edge == e);
    }
    CHECK(decode_signature(t, res.family, {}).kind == DecodeKind::NoFault);
}

TEST_CASE("equal signatures decode as ambiguous") {
    Graph p3 = gen_path(3);
    auto fam = make_family(p3, {{0, 1, 2}});
    auto d = decode_signature(p3, fam, {0});
    REQUIRE(d.kind == DecodeKind::Ambiguous);
    CHECK(d.candidates == std::vector<EdgeId>{0, 1});
    auto di = decode_intersection(p3, fam, {0});
    REQUIRE(di.kind == DecodeKind::Ambiguous);
}

TEST_CASE("impossible failing sets decode as inconsistent") {
    Graph p4 = gen_path(4);
    auto fam = make_family(p4, {{0, 1}, {2, 3}});
    auto d = decode_signature(p4, fam, {0, 1});
    CHECK(d.kind == DecodeKind::Inconsistent);
    CHECK(decode_intersection(p4, fam, {0, 1}).kind == DecodeKind::Inconsistent);
}

TEST_CASE("the two decoders always agree") {
    // candidates_sig = { f : sig(f) = F } and candidates_int = { f : F
    // subset sig(f) } minus { f : sig(f) not subset F } coincide, for any
    // family whatsoever.
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 60; ++iter) {
        Graph g = gen_gnp(8, 0.5, rng());
        if (g.m() == 0) continue;
        std::vector<std::vector<int>> vs;
        for (auto [u, v] : g.edges())
            if (rng() % 3) vs.push_back({u, v});
        if (vs.empty()) continue;
        auto fam = make_family(g, vs);
        for (EdgeId e = 0; e < g.m(); ++e) {
            FaultScenario s{&g, &fam, e};
            auto failing = observe(s);
            auto d1 = decode_signature(g, fam, failing);
            auto d2 = decode_intersection(g, fam, failing);
            REQUIRE(d1.kind == d2.kind);
            if (d1.kind == DecodeKind::Identified) REQUIRE(d1.edge == d2.edge);
        }
    }
}

TEST_CASE("campaign over a separator reaches full identification") {
    Graph k8 = gen_complete(8);
    auto res = separator_general(k8);
    auto rep = campaign(k8, res.family, 0);
    CHECK(rep.trials == k8.m());
    CHECK(rep.identified_sig == rep.trials);
    CHECK(rep.identified_int == rep.trials);
    CHECK(rep.no_fault_ok);
    CHECK(rep.family_size >= rep.info_lb);
}

TEST_CASE("campaign on an empty family identifies nothing") {
    Graph p4 = gen_path(4);
    auto rep = campaign(p4, make_family(p4, std::vector<Path>{}), 0);
    CHECK(rep.identified_sig == 0);
    CHECK(rep.missed_sig == rep.trials);
    CHECK(rep.no_fault_ok);
}

TEST_CASE("campaign sampling mode draws the requested number of trials") {
    Graph k8 = gen_complete(8);
    auto res = separator_general(k8);
    auto rep = campaign(k8, res.family, 9, 42);
    CHECK(rep.trials == 9);
    CHECK(rep.identified_sig == 9);
    auto again = campaign(k8, res.family, 9, 42);
    CHECK(again.identified_sig == rep.identified_sig);
}

TEST_CASE("an uncovered edge masquerades as no fault") {
    Graph p3 = gen_path(3);
    auto fam = make_family(p3, {{0, 1}});
    auto rep = campaign(p3, fam, 0);
    CHECK(rep.missed_sig == 1);
    CHECK(rep.identified_sig == 1);
    CHECK(rep.no_fault_ok);
}

TEST_CASE("comparable but distinct signatures still decode cleanly") {
    // Not a separator, yet signature decoding stays injective.
    Graph p3 = gen_path(3);
    auto fam = make_family(p3, {{0, 1}, {0, 1, 2}});
    CHECK(!check_separator(p3, fam, false).is_separator);
    auto rep = campaign(p3, fam, 0);
    CHECK(rep.identified_sig == 2);
    CHECK(rep.identified_int == 2);
}
