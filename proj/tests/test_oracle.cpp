#include <sstream>

#include "csep/oracle.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace csep;
using namespace csep::testing;

TEST_CASE("maximal clique enumeration vs brute force") {
    CHECK(maximal_cliques(Graph(0)) == std::vector<VertexSet>{{}});
    CHECK(maximal_cliques(complete_graph(4)) == std::vector<VertexSet>{{0, 1, 2, 3}});
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = gen_random(9, 0.5, 6000 + seed);
        CHECK(maximal_cliques(g) == brute_maximal_cliques(g));
        CHECK(maximal_stable_sets(g) == brute_maximal_cliques(complement(g)));
    }
    CHECK_THROWS_AS(maximal_cliques(complement(complete_graph(8)), 4), EnumerationOverflow);
}

TEST_CASE("reduced verifier agrees with exhaustive") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Graph g = gen_random(8, 0.45, 7000 + seed);
        CutFamily good = maxclique_separator(g);
        CHECK(!verify_separator(g, good).has_value());
        CHECK(!verify_separator_exhaustive(g, good).has_value());

        // break the family by dropping a random nontrivial cut
        if (good.cuts.size() > 2) {
            Rng rng(seed);
            CutFamily broken = good;
            std::size_t drop = 1 + rng.below(broken.cuts.size() - 2);
            broken.cuts.erase(broken.cuts.begin() + long(drop));
            auto r = verify_separator(g, broken);
            auto e = verify_separator_exhaustive(g, broken);
            CHECK(r.has_value() == e.has_value());
            if (r) CHECK(confirm_witness(g, broken, *r));
            if (e) CHECK(confirm_witness(g, broken, *e));
        }
    }
}

TEST_CASE("trivial-only family fails on any graph with an edge and a non-edge") {
    Graph g = path_graph(3);
    FamilyBuilder b(3, "trivial");
    b.add_trivials();
    CutFamily f = b.finish();
    auto w = verify_separator(g, f);
    REQUIRE(w);
    CHECK(confirm_witness(g, f, *w));
}

TEST_CASE("sampled verifier is seed-deterministic and finds planted failures") {
    Graph g = gen_random(10, 0.4, 8000);
    CutFamily good = maxclique_separator(g);
    CHECK(!verify_separator_sampled(g, good, 2000, 42).has_value());

    FamilyBuilder b(g.n(), "trivial");
    b.add_trivials();
    CutFamily bad = b.finish();
    auto w1 = verify_separator_sampled(g, bad, 2000, 42);
    auto w2 = verify_separator_sampled(g, bad, 2000, 42);
    REQUIRE(w1);
    REQUIRE(w2);
    CHECK(w1->clique == w2->clique);
    CHECK(w1->stable == w2->stable);
    CHECK(confirm_witness(g, bad, *w1));
}

TEST_CASE("size mismatch is rejected") {
    Graph g = path_graph(4);
    FamilyBuilder b(5, "x");
    b.add_trivials();
    CutFamily f = b.finish();
    CHECK_THROWS_AS(verify_separator(g, f), InputError);
    CHECK_THROWS_AS(verify_separator_exhaustive(g, f), InputError);
    CHECK_THROWS_AS(verify_separator_exhaustive(Graph(16), all_cuts_fallback(Graph(16))),
                    GuardError);
}

TEST_CASE("witness output format") {
    SeparationWitness w{{0, 2}, {1, 3}};
    std::ostringstream out;
    write_witness(out, w);
    CHECK(out.str() == "K 1 3\nS 2 4\n");
}
