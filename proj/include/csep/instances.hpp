#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "csep/decompose.hpp"
#include "csep/graph.hpp"

namespace csep {

// Plain G(n, p); the workhorse for randomized tests.
Graph gen_random(int n, double p, std::uint64_t seed);

// Incremental construction: each new vertex attaches to a clique grown inside
// the closed neighborhood of a random existing vertex (so it is simplicial at
// insertion time). density 1 gives K_n, density 0 a tree.
Graph gen_chordal(int n, double density, std::uint64_t seed);

// Random edge insertion skipping triangle-creating edges.
Graph gen_triangle_free(int n, double p, std::uint64_t seed);

// Cycle backbone C_{n-1} plus triangle-avoiding random chords (2-connected,
// triangle-free by construction), plus one universal vertex. Requires n >= 5.
Graph gen_almost_triangle_free(int n, double p, std::uint64_t seed);

// Line graph of a random base graph.
Graph gen_line_graph(int base_n, double p, std::uint64_t seed);

// Disjoint union of g1 and g2 plus a fresh clique C of size c_size complete
// to A1 u A2, and A1 complete to A2. Returns the graph and the planted split
// (B_i = V(g_i) \ A_i). Both sides must have >= 2 vertices and A_i nonempty.
std::pair<Graph, AmalgamSplit> compose_amalgam(const Graph& g1, const VertexSet& A1,
                                               const Graph& g2, const VertexSet& A2,
                                               int c_size);

// Identify the cliques k1 of g1 and k2 of g2 pointwise (equal sizes).
Graph compose_clique_glue(const Graph& g1, const VertexSet& k1, const Graph& g2,
                          const VertexSet& k2);

// Replace vertex v of g by m_graph; v's outside adjacency is copied to every
// module vertex. Returns the graph and the planted module.
std::pair<Graph, VertexSet> substitute_module(const Graph& g, int v, const Graph& m_graph);

// Amalgam composition of two cap-free blocks (chordal / almost triangle-free)
// with singleton attach sets, gated by is_cap_free; at least `n` vertices.
Graph gen_capfree_composite(int n, double p, std::uint64_t seed);

// Random composition of chordal pieces and C5s via union / join / clique glue
// / module substitution; every prime atom is nearly chordal by construction.
// Grows until at least n vertices.
Graph gen_nearly_chordal_composite(int n, std::uint64_t seed);

// DIMACS plus a sidecar JSON recording family, seed, and parameters.
void write_instance(const std::string& dimacs_path, const std::string& sidecar_path,
                    const Graph& g, const std::string& family, std::uint64_t seed,
                    const std::map<std::string, std::string>& params);

}  // namespace csep
