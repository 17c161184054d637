#include <sstream>

#include "csep/dimacs.hpp"
#include "csep/graph.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace csep;
using namespace csep::testing;

TEST_CASE("bits basics") {
    Bits b(130);
    CHECK(b.none());
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.test(64));
    CHECK(b.first() == 0);
    CHECK(b.next(0) == 64);
    CHECK(b.next(64) == 129);
    CHECK(b.next(129) == -1);
    Bits c = b.complemented();
    CHECK(c.count() == 127);
    CHECK(!c.intersects(b));
    Bits all = b | c;
    CHECK(all.count() == 130);
    CHECK(b.subset_of(all));
    b.reset(64);
    CHECK(b.count() == 2);
}

TEST_CASE("vertex set ops") {
    CHECK(vs_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
    CHECK(vs_minus({1, 2, 3}, {2}) == VertexSet{1, 3});
    CHECK(vs_intersect({1, 2, 3}, {2, 4}) == VertexSet{2});
    CHECK(vs_canon({3, 1, 3, 2}) == VertexSet{1, 2, 3});
    CHECK(vs_contains({1, 5, 9}, 5));
    CHECK(!vs_contains({1, 5, 9}, 4));
}

TEST_CASE("graph construction and queries") {
    Graph g = cycle_graph(5);
    CHECK(g.n() == 5);
    CHECK(g.m() == 5);
    CHECK(g.adjacent(0, 1));
    CHECK(!g.adjacent(0, 2));
    CHECK(g.neighborhood(0) == VertexSet{1, 4});
    CHECK(g.closed_neighborhood(0) == VertexSet{0, 1, 4});
    CHECK(g.anti_neighborhood(0) == VertexSet{2, 3});
    CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
}

TEST_CASE("components and anticomponents") {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet{0, 1});
    CHECK(comps[1] == VertexSet{2, 3, 4});
    CHECK(comps[2] == VertexSet{5});
    CHECK(!is_connected(g));
    CHECK(is_anticonnected(g));

    Graph join = complete_graph(4);
    CHECK(anticomponents(join).size() == 4);
    CHECK(is_connected(join));
    CHECK(!is_anticonnected(join));
}

TEST_CASE("clique and stable checks") {
    Graph g = complete_graph(4);
    CHECK(is_complete(g));
    CHECK(is_clique(g, {0, 1, 2}));
    CHECK(is_stable(g, {2}));
    CHECK(!is_stable(g, {0, 1}));
    Graph c5 = cycle_graph(5);
    CHECK(is_complete_between(g, {0, 1}, {2, 3}));
    CHECK(is_anticomplete_between(c5, {0}, {2, 3}));
    CHECK(!is_anticomplete_between(c5, {0}, {1}));
}

TEST_CASE("induced view round trip") {
    Graph g = cycle_graph(6);
    InducedView v = induced_subgraph(g, {0, 1, 2, 4});
    CHECK(v.local.n() == 4);
    CHECK(v.local.m() == 2);  // edges 0-1, 1-2 survive
    CHECK(v.to_host(3) == 4);
    CHECK(v.to_local(4) == 3);
    CHECK(v.to_local(0) == 0);
    CHECK(v.host_to_local[3] == -1);
}

TEST_CASE("complement round trip") {
    Graph g = gen_random(9, 0.4, 123);
    Graph cc = complement(complement(g));
    CHECK(cc.m() == g.m());
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) CHECK(cc.adjacent(u, v) == g.adjacent(u, v));
}

TEST_CASE("dimacs round trip and validation") {
    Graph g = gen_random(7, 0.5, 5);
    g.set_name("x");
    std::ostringstream out;
    write_dimacs(out, g);
    std::istringstream in(out.str());
    Graph h = read_dimacs(in);
    CHECK(h.n() == g.n());
    CHECK(h.edges() == g.edges());

    std::istringstream bad1("e 1 2\np edge 2 1\n");
    CHECK_THROWS_AS(read_dimacs(bad1), InputError);
    std::istringstream bad2("p edge 2 2\ne 1 2\ne 1 2\n");
    CHECK_THROWS_AS(read_dimacs(bad2), InputError);
    std::istringstream bad3("p edge 2 1\ne 1 3\n");
    CHECK_THROWS_AS(read_dimacs(bad3), InputError);
    std::istringstream bad4("p edge 2 2\ne 1 2\n");
    CHECK_THROWS_AS(read_dimacs(bad4), InputError);
    std::istringstream ok("c comment\np edge 3 1\ne 1 3\n");
    CHECK(read_dimacs(ok).adjacent(0, 2));
}
