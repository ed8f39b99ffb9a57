#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "pathsep/bounds.hpp"
#include "pathsep/constructors.hpp"
#include "pathsep/cover.hpp"
#include "pathsep/exact.hpp"
#include "pathsep/generators.hpp"
#include "pathsep/verifier.hpp"

using namespace pathsep;

namespace {

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph(10, e);
}

Graph random_forest(int n, double drop, std::mt19937_64& rng) {
    Graph tree = gen_random_tree(n, rng());
    std::vector<std::pair<int, int>> kept;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (auto e : tree.edges())
        if (coin(rng) >= drop) kept.push_back(e);
    return Graph(n, kept);
}

} // namespace

TEST_CASE("forest construction: named shapes") {
    auto star = separator_forest(gen_star(4));
    CHECK(star.size() == 3);
    CHECK(star.certified);

    for (int k = 2; k <= 8; ++k) {
        auto res = separator_forest(gen_path(k));
        CHECK(res.size() == k - 1);
        CHECK(res.certified);
    }

    Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    auto res = separator_forest(spider);
    CHECK(res.size() == 6);
    CHECK(res.size() == exact_psn(spider).psn);
}

TEST_CASE("forest construction: random forests hit the formula exactly") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + static_cast<int>(rng() % 199);
        Graph f = random_forest(n, 0.15, rng);
        auto res = separator_forest(f);
        REQUIRE(res.certified);
        REQUIRE(res.size() == forest_psn(f));
        // Discharging bound: any verified forest separator needs at least
        // v1 + v2 - p paths.
        REQUIRE(res.size() >= forest_psn(f));
    }
    CHECK_THROWS_AS(separator_forest(gen_cycle(5)), std::invalid_argument);
}

TEST_CASE("face paths cover every tree edge exactly twice before splitting") {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 4 + static_cast<int>(rng() % 60);
        Graph t = gen_random_tree(n, rng());
        if (t.max_degree() <= 2) continue; // path; no faces
        int root = 0;
        while (t.degree(root) < 3) ++root;
        std::vector<char> seen(t.n(), 0);
        auto faces = detail::tree_face_paths(t, root, seen);
        auto fam = make_family(t, faces);
        auto sig = signatures(t, fam);
        for (EdgeId e = 0; e < t.m(); ++e) REQUIRE(sig.row(e).count() == 2);
    }
}

TEST_CASE("complete construction certifies within bound") {
    Graph k5 = gen_complete(5);
    auto r5 = separator_complete(k5, 1);
    CHECK(r5.certified);
    CHECK(r5.size() <= 14);
    CHECK(check_separator(k5, r5.family, false).is_separator);

    Graph k20 = gen_complete(20);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        auto r = separator_complete(k20, seed);
        REQUIRE(r.certified);
        REQUIRE(r.size() <= 42);
        REQUIRE(check_separator(k20, r.family, false).is_separator);
    }
    CHECK_THROWS_AS(separator_complete(gen_complete(4), 1), std::invalid_argument);
    CHECK_THROWS_AS(separator_complete(petersen(), 1), std::invalid_argument);
}

TEST_CASE("complete construction: unseparated pairs after the union stay small") {
    Graph k20 = gen_complete(20);
    PathFamily base = walecki_paths(k20);
    double total = 0.0;
    const int trials = 1000;
    for (uint64_t seed = 0; seed < trials; ++seed)
        total += static_cast<double>(complete_unseparated_after_union(k20, base, seed));
    CHECK(total / trials < 3.5);
}

TEST_CASE("repair paths strictly reduce the unseparated count") {
    Graph k8 = gen_complete(8);
    PathFamily base = walecki_paths(k8);
    std::vector<std::vector<int>> vs;
    for (const auto& p : base.paths) vs.push_back(p.vertices);
    auto before = check_separator(k8, make_family(k8, vs));
    REQUIRE(!before.is_separator);
    auto [u, v] = k8.edge(before.unseparated_pairs.front().e);
    vs.push_back({u, v});
    auto after = check_separator(k8, make_family(k8, vs));
    CHECK(after.unseparated_count < before.unseparated_count);
}

TEST_CASE("hypercube construction sizes and certificates") {
    Graph q2 = gen_hypercube(2);
    auto r2 = separator_hypercube(q2, 2);
    CHECK(r2.size() == 4);
    CHECK(r2.size() == exact_psn(q2).psn);

    Graph q3 = gen_hypercube(3);
    auto r3 = separator_hypercube(q3, 3);
    CHECK(r3.certified);
    CHECK(r3.size() <= 16);

    Graph q4 = gen_hypercube(4);
    auto r4 = separator_hypercube(q4, 4);
    CHECK(r4.certified);
    CHECK(r4.size() <= 32);
    CHECK(check_separator(q4, r4.family, false).is_separator);
}

TEST_CASE("hypercube groups 1+2 leave only mirror and crossing pairs") {
    for (int d : {3, 4}) {
        Graph qd = gen_hypercube(d);
        const int mask = 1 << (d - 1);
        // Group 1: previous-level separator lifted through one crossing
        // edge per path; group 2: subcube cover plus mirror.
        Graph qprev = gen_hypercube(d - 1);
        auto sub = separator_hypercube(qprev, d - 1);
        std::vector<std::vector<int>> fam;
        for (const auto& p : sub.family.paths) {
            std::vector<int> lifted = p.vertices;
            for (auto it = p.vertices.rbegin(); it != p.vertices.rend(); ++it)
                lifted.push_back(*it | mask);
            fam.push_back(std::move(lifted));
        }
        for (const auto& p : hypercube_cover(qprev, d - 1).paths) {
            fam.push_back(p.vertices);
            std::vector<int> mirror(p.vertices.size());
            for (std::size_t k = 0; k < mirror.size(); ++k)
                mirror[k] = p.vertices[k] | mask;
            fam.push_back(std::move(mirror));
        }
        auto rep = check_separator(qd, make_family(qd, fam));
        REQUIRE(!rep.is_separator);
        auto is_crossing = [&](EdgeId e) {
            auto [u, v] = qd.edge(e);
            return (u ^ v) == mask;
        };
        auto mirror_pair = [&](EdgeId e, EdgeId f) {
            auto [a, b] = qd.edge(e);
            auto [c, dd] = qd.edge(f);
            return (a ^ mask) == c && (b ^ mask) == dd;
        };
        for (const auto& up : rep.unseparated_pairs) {
            bool ok = is_crossing(up.e) || is_crossing(up.f) ||
                      mirror_pair(up.e, up.f) || mirror_pair(up.f, up.e);
            REQUIRE(ok);
        }
    }
}

TEST_CASE("general construction on the corpus") {
    // Degenerate: every piece is one edge, already a separator.
    Graph p5 = gen_path(5);
    auto rp = separator_general(p5);
    CHECK(rp.certified);
    CHECK(rp.patched == 0);
    CHECK(rp.size() == 4);

    Graph k8 = gen_complete(8);
    auto rk = separator_general(k8);
    CHECK(rk.certified);
    CHECK(rk.claimed_bound == 40);
    CHECK(rk.size() <= 48 + rk.patched);

    Graph pet = petersen();
    auto rpet = separator_general(pet);
    CHECK(rpet.certified);
    CHECK(rpet.size() <= 2 * 10 * 1 + 2 * 10 + rpet.patched);

    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 20 + static_cast<int>(rng() % 80);
        Graph g = gen_gnp(n, 0.2, rng());
        if (g.m() == 0) continue;
        auto res = separator_general(g, rng());
        long long per = (g.m() + n - 1) / n;
        int t = per > 1 ? ceil_log2(per) : 0;
        REQUIRE(res.certified);
        REQUIRE(res.size() <= 2LL * n * t + 2 * n + res.patched);
        REQUIRE(res.patched <= n / 20 + 1);
    }
}

TEST_CASE("gnp construction verifies with tiny patch counts") {
    Graph g = gen_gnp(100, 0.4605, 2024);
    auto res = separator_gnp(g, 0.4605, 7);
    CHECK(res.certified);
    CHECK(check_separator(g, res.family, false).is_separator);
    CHECK(res.patched * 100 <= res.size());
    // Entropy sandwich on the produced family.
    double lb = entropy_lower_bound(g.n(), g.m()).entropy_form;
    CHECK(res.size() + 1e-9 >= lb);
}

TEST_CASE("refinement co-location rate matches 1/r per repetition") {
    // Two fixed edges land in the same random class with probability 1/r;
    // repetitions draw independently, so the chance that no repetition
    // splits a pair is (1/r)^s.
    auto par = gnp_parameters(200, 0.26491586832740186);
    REQUIRE(par.r == 30);
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> pick(0, par.r - 1);
    const int trials = 200000;
    int together = 0;
    for (int i = 0; i < trials; ++i)
        together += pick(rng) == pick(rng);
    double freq = static_cast<double>(together) / trials;
    CHECK(freq > 0.8 / par.r);
    CHECK(freq < 1.2 / par.r);
}

TEST_CASE("gnp parameters follow the formulas") {
    auto par = gnp_parameters(400, 0.14978661367769956);
    CHECK(par.r == 30);
    CHECK(par.s == 10);
    auto par2 = gnp_parameters(100, 0.46051701859880916);
    CHECK(par2.r == 30);
    CHECK(par2.s == 8);
}
