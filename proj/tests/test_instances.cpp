#include <cstdio>
#include <fstream>
#include <sstream>

#include "csep/dimacs.hpp"
#include "csep/instances.hpp"
#include "csep/recognition.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_helpers.hpp"

using namespace csep;
using namespace csep::testing;

TEST_CASE("generators are seed-deterministic") {
    for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
        CHECK(gen_random(12, 0.5, seed).edges() == gen_random(12, 0.5, seed).edges());
        CHECK(gen_chordal(12, 0.5, seed).edges() == gen_chordal(12, 0.5, seed).edges());
        CHECK(gen_triangle_free(12, 0.4, seed).edges() ==
              gen_triangle_free(12, 0.4, seed).edges());
        CHECK(gen_nearly_chordal_composite(14, seed).edges() ==
              gen_nearly_chordal_composite(14, seed).edges());
        CHECK(gen_capfree_composite(12, 0.35, seed).edges() ==
              gen_capfree_composite(12, 0.35, seed).edges());
    }
    CHECK(gen_random(12, 0.5, 1).edges() != gen_random(12, 0.5, 2).edges());
}

TEST_CASE("generators land in their advertised classes") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(is_chordal(gen_chordal(13, 0.5, seed)).chordal);
        CHECK(is_triangle_free(gen_triangle_free(13, 0.4, seed)));
        Graph atf = gen_almost_triangle_free(12, 0.3, seed);
        CHECK(!universal_vertices(atf).empty());
        CHECK(!is_cap_free(atf).has_value());
        CHECK(is_claw_free(gen_line_graph(6, 0.7, seed)));
        CHECK(!is_cap_free(gen_capfree_composite(12, 0.35, seed)).has_value());
    }
    CHECK_THROWS_AS(gen_almost_triangle_free(4, 0.3, 0), GenerationError);
    CHECK_THROWS_AS(gen_capfree_composite(7, 0.3, 0), GenerationError);
}

TEST_CASE("edge density bounds") {
    CHECK(gen_random(10, 0.0, 1).m() == 0);
    CHECK(gen_random(10, 1.0, 1).m() == 45);
    CHECK(gen_chordal(10, 1.0, 1).m() == 45);
    CHECK(gen_chordal(10, 0.0, 1).m() == 9);  // a tree
}

TEST_CASE("amalgam composition plants a valid split") {
    Graph b1 = gen_chordal(5, 0.5, 1);
    Graph b2 = gen_chordal(6, 0.5, 2);
    auto [g, split] = compose_amalgam(b1, {0, 1}, b2, {3}, 2);
    CHECK(g.n() == 13);
    CHECK(check_amalgam_split(g, split));
    CHECK_THROWS_AS(compose_amalgam(b1, {}, b2, {0}, 1), InputError);
    CHECK_THROWS_AS(compose_amalgam(Graph(1), {0}, b2, {0}, 1), InputError);
}

TEST_CASE("clique glue identifies attach cliques") {
    Graph g = compose_clique_glue(complete_graph(4), {1, 2}, complete_graph(3), {0, 1});
    CHECK(g.n() == 5);
    CHECK(g.adjacent(1, 4));  // glued third vertex of the triangle
    CHECK(g.adjacent(2, 4));
    CHECK(!g.adjacent(0, 4));
    CHECK_THROWS_AS(compose_clique_glue(path_graph(3), {0, 2}, complete_graph(2), {0, 1}),
                    InputError);
    CHECK_THROWS_AS(compose_clique_glue(path_graph(3), {0}, complete_graph(2), {0, 1}),
                    InputError);
}

TEST_CASE("module substitution plants a module") {
    Graph host = cycle_graph(5);
    auto [g, planted] = substitute_module(host, 2, path_graph(3));
    CHECK(g.n() == 7);
    CHECK(planted == VertexSet{2, 5, 6});
    CHECK(is_module_set(g, planted));
    for (int u : host.neighborhood(2))
        for (int m : planted) CHECK(g.adjacent(u, m));
    CHECK_THROWS_AS(substitute_module(host, 9, path_graph(2)), InputError);
}

TEST_CASE("nearly chordal composites reach the requested size") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = gen_nearly_chordal_composite(17, 500 + seed);
        CHECK(g.n() >= 17);
        CHECK(g.n() <= 17 + 6);
    }
}

TEST_CASE("instance files: dimacs plus sidecar") {
    Graph g = gen_chordal(8, 0.5, 9);
    std::string base = "csep_test_instance";
    write_instance(base + ".col", base + ".json", g, "chordal", 9, {{"density", "0.5"}});
    Graph back = read_dimacs_file(base + ".col");
    CHECK(back.edges() == g.edges());
    std::ifstream side(base + ".json");
    auto doc = nlohmann::json::parse(side);
    CHECK(doc["family"] == "chordal");
    CHECK(doc["n"] == 8);
    CHECK(doc["m"] == g.m());
    CHECK(doc["seed"] == 9);
    CHECK(doc["params"]["density"] == "0.5");
    std::remove((base + ".col").c_str());
    std::remove((base + ".json").c_str());
}
