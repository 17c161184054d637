#include <sstream>

#include "csep/oracle.hpp"
#include "csep/separators.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace csep;
using namespace csep::testing;

namespace {

// exact separator for the induced block, lifted back to host ids
CutFamily block_all_cuts(const Graph& g, const VertexSet& block) {
    InducedView v = induced_subgraph(g, block);
    return lift_cuts(all_cuts_fallback(v.local), v, g.n());
}

}  // namespace

TEST_CASE("family builder dedups and tracks raw inserts") {
    FamilyBuilder b(4, "x");
    b.add({2, 0});
    b.add({0, 2});
    b.add({1});
    b.add_trivials();
    CutFamily f = b.finish();
    CHECK(f.cuts.size() == 4);
    CHECK(f.raw_inserted == 5);
    CHECK(f.dedup_savings() == 1);
    CHECK(f.contains({0, 2}));
    CHECK(!f.contains({2}));
    CHECK(stable_side(f, {0, 2}) == VertexSet{1, 3});

    CutFamily g = ensure_trivials(f);
    CHECK(g.cuts.size() == 4);  // trivials already present
    CHECK(g.raw_inserted == f.raw_inserted);
    FamilyBuilder b2(3, "y");
    b2.add({1});
    CutFamily h = ensure_trivials(b2.finish());
    CHECK(h.cuts.size() == 3);
    CHECK(h.raw_inserted == 3);
    CHECK(h.contains({}));
    CHECK(h.contains({0, 1, 2}));
}

TEST_CASE("all cuts fallback") {
    Graph g = cycle_graph(4);
    CutFamily f = all_cuts_fallback(g);
    CHECK(f.size() == 16);
    CHECK(!verify_separator_exhaustive(g, f).has_value());
    CHECK_THROWS_AS(all_cuts_fallback(Graph(21)), GuardError);
}

TEST_CASE("maxclique separator on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = gen_random(9, 0.45, 1000 + seed);
        CutFamily f = maxclique_separator(g);
        CHECK(!verify_separator_exhaustive(g, f).has_value());
        std::size_t q = maximal_cliques(g).size();
        CHECK(f.size() <= std::size_t(g.n() + 1) * q + 2);
    }
}

TEST_CASE("bounded alpha neighborhood separator") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = gen_line_graph(6, 0.6, seed);  // line graphs are claw-free
        if (g.n() == 0 || g.n() > 12) continue;
        CutFamily f = bounded_alpha_neighborhood_separator(g, 2);
        CHECK(!verify_separator_exhaustive(g, f).has_value());
        std::size_t n = std::size_t(g.n());
        CHECK(f.size() <= n * (1 + n + n * (n - 1) / 2) + 2);
    }
    CHECK_THROWS_AS(bounded_alpha_neighborhood_separator(star_graph(3), 2), ClassError);
    try {
        bounded_alpha_neighborhood_separator(star_graph(3), 2);
    } catch (const ClassError& e) {
        CHECK(e.witness == "vertex 1");
    }
}

TEST_CASE("complement separator flips cuts") {
    Graph g = gen_random(8, 0.5, 77);
    CutFamily f = maxclique_separator(g);
    CutFamily cf = complement_separator(f);
    CHECK(cf.size() == f.size());
    CHECK(!verify_separator_exhaustive(complement(g), cf).has_value());
}

TEST_CASE("combiners preserve separation with exact size law") {
    DecomposePolicy policies[] = {
        {{DecompKind::Component}, nullptr},
        {{DecompKind::Anticomponent}, nullptr},
        {{DecompKind::Module}, nullptr},
        {{DecompKind::CliqueCutset}, nullptr},
        {{DecompKind::Neighborhood}, [](const Graph&) { return true; }},
        {{DecompKind::Antineighborhood}, [](const Graph&) { return true; }},
    };
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = gen_random(8, 0.4, 2000 + seed);
        for (const auto& policy : policies) {
            auto d = decompose_step(g, policy);
            if (!d) continue;
            REQUIRE(check_decomposition(g, *d));
            CutFamily f1 = block_all_cuts(g, d->g1);
            CutFamily f2 = block_all_cuts(g, d->g2);
            CutFamily out = combine(g, g.vertices(), *d, f1, f2);
            CHECK(out.size() <= f1.size() + f2.size());
            CHECK(out.raw_inserted == f1.size() + f2.size());
            CHECK(!verify_separator_exhaustive(g, out).has_value());
            ++hits;
            if (d->kind == DecompKind::Anticomponent) {
                CutFamily alt =
                    combine_anticomponent_complement_route(f1, f2, d->A, d->B);
                CHECK(alt.cuts == out.cuts);
            }
            if (d->kind == DecompKind::Antineighborhood) {
                CutFamily alt = combine_antineighborhood_complement_route(
                    f1, f2, d->v, g.neighborhood(d->v), g.vertices());
                CHECK(alt.cuts == out.cuts);
            }
        }
    }
    CHECK(hits > 100);  // every rule must actually fire across the batch
}

TEST_CASE("amalgam combiner on composed instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        Graph b1 = gen_chordal(4, 0.6, rng.next());
        Graph b2 = gen_chordal(4, 0.6, rng.next());
        auto [g, split] = compose_amalgam(b1, {0}, b2, {0}, 1);
        DecomposePolicy policy{{DecompKind::Amalgam}, nullptr};
        auto d = decompose_step(g, policy);
        REQUIRE(d);
        REQUIRE(d->kind == DecompKind::Amalgam);
        CutFamily f1 = block_all_cuts(g, d->g1);
        CutFamily f2 = block_all_cuts(g, d->g2);
        CutFamily out = combine(g, g.vertices(), *d, f1, f2);
        CHECK(out.size() <= f1.size() + f2.size());
        CHECK(!verify_separator_exhaustive(g, out).has_value());
    }
}

TEST_CASE("degeneracy separator") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = gen_random(10, 0.4, 3000 + seed);
        std::vector<int> ordering(g.n());
        for (int i = 0; i < g.n(); ++i) ordering[i] = i;
        std::size_t leaf_sum = 0;
        LeafSolver solver = [&](const Graph& h) {
            CutFamily f = all_cuts_fallback(h);
            leaf_sum += f.size();
            return f;
        };
        CutFamily f = degeneracy_separator(g, ordering, solver);
        CHECK(f.provenance == "degeneracy");
        CHECK(f.size() <= leaf_sum);
        CHECK(!verify_separator_exhaustive(g, f).has_value());
    }
    CHECK_THROWS_AS(
        degeneracy_separator(cycle_graph(4), {0, 1, 2},
                             [](const Graph& h) { return all_cuts_fallback(h); }),
        InputError);
    CHECK_THROWS_AS(
        degeneracy_separator(cycle_graph(4), {0, 1, 2, 2},
                             [](const Graph& h) { return all_cuts_fallback(h); }),
        InputError);
}

TEST_CASE("distance expansion") {
    Graph g = gen_random(9, 0.4, 4000);
    VertexSet d{6, 7, 8};
    VertexSet rest{0, 1, 2, 3, 4, 5};
    CutFamily fp = block_all_cuts(g, rest);
    CutFamily f = distance_expansion(fp, d, g.n());
    CHECK(f.raw_inserted == fp.size() * 8);
    CHECK(!verify_separator_exhaustive(g, f).has_value());
    VertexSet big(31);
    for (int i = 0; i < 31; ++i) big[i] = i;
    CHECK_THROWS_AS(distance_expansion(fp, big, 40), GuardError);
}

TEST_CASE("cut family text round trip") {
    Graph g = gen_random(7, 0.5, 5000);
    CutFamily f = maxclique_separator(g);
    std::ostringstream out;
    write_cut_family(out, f);
    std::istringstream in(out.str());
    CutFamily back = read_cut_family(in);
    CHECK(back.host_n == f.host_n);
    CHECK(back.cuts == f.cuts);
    CHECK(back.provenance == f.provenance);

    std::istringstream bad1("c 1 2\n");
    CHECK_THROWS_AS(read_cut_family(bad1), InputError);
    std::istringstream bad2("s 3 2\nc 1\nc 2\n");
    CHECK_THROWS_AS(read_cut_family(bad2), InputError);
    std::istringstream bad3("s 3 1 x\nc 4\n");
    CHECK_THROWS_AS(read_cut_family(bad3), InputError);
    std::istringstream bad4("s 3 2 x\nc 1\n");
    CHECK_THROWS_AS(read_cut_family(bad4), InputError);
    std::istringstream ok("s 3 2 x\nc\nc 1 2\n");
    CutFamily r = read_cut_family(ok);
    CHECK(r.contains({}));
    CHECK(r.contains({0, 1}));
}
