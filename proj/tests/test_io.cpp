#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "pathsep/generators.hpp"
#include "pathsep/io.hpp"

using namespace pathsep;

TEST_CASE("graph round trip preserves edge ids") {
    std::mt19937_64 rng(67);
    for (int iter = 0; iter < 20; ++iter) {
        Graph g = gen_gnp(15, 0.3, rng());
        std::ostringstream out;
        emit_graph(out, g);
        Graph back = parse_graph(out.str());
        REQUIRE(back.n() == g.n());
        REQUIRE(back.edges() == g.edges());
    }
    Graph k4 = gen_complete(4);
    std::ostringstream out;
    emit_graph(out, k4);
    CHECK(parse_graph(out.str()).edges() == k4.edges());
}

TEST_CASE("graph parsing errors carry line numbers") {
    CHECK_THROWS_WITH(parse_graph("abc\n"), Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THROWS_WITH(parse_graph("3 1\n0 7\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_graph("3 2\n0 1\n"),
                      Catch::Matchers::ContainsSubstring("declared 2"));
    CHECK_THROWS_WITH(parse_graph("2 1\n0 1 9\n"),
                      Catch::Matchers::ContainsSubstring("trailing"));
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    // Comments and blank lines are fine.
    Graph g = parse_graph("# made by hand\n\n3 2 # header\n0 1\n1 2\n");
    CHECK(g.m() == 2);
}

TEST_CASE("family round trip preserves order") {
    Graph k4 = gen_complete(4);
    auto fam = make_family(k4, {{0, 1, 2}, {2, 3}, {1, 3, 0}});
    std::ostringstream out;
    emit_family(out, fam);
    PathFamily back = parse_family(out.str(), k4);
    REQUIRE(back.size() == fam.size());
    for (int i = 0; i < fam.size(); ++i)
        CHECK(back.paths[i].vertices == fam.paths[i].vertices);
}

TEST_CASE("family parsing rejects bad paths with context") {
    Graph p4 = gen_path(4);
    CHECK_THROWS_WITH(parse_family("0 1\n0 2\n", p4),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_family("0 2\n", p4),
                      Catch::Matchers::ContainsSubstring("(0,2)"));
    CHECK_THROWS_WITH(parse_family("0 1 9\n", p4),
                      Catch::Matchers::ContainsSubstring("out of range"));
    CHECK_THROWS_WITH(parse_family("0 1 0\n", gen_cycle(3)),
                      Catch::Matchers::ContainsSubstring("repeated"));
}
