#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>

#include "csep/graph.hpp"

namespace csep {

// Five-part amalgam partition (B1, A1, C, A2, B2) of the host vertex set.
struct AmalgamSplit {
    VertexSet B1, A1, C, A2, B2;
};

bool check_amalgam_split(const Graph& g, const AmalgamSplit& s);

enum class DecompKind {
    Component,
    Anticomponent,
    Cutset,
    CliqueCutset,
    Module,
    Neighborhood,
    Antineighborhood,
    Amalgam,
};

const char* decomp_kind_name(DecompKind k);

struct Decomposition {
    DecompKind kind;
    // cutset-like payload (component/anticomponent use C = {})
    VertexSet A, C, B;
    // module payload
    VertexSet M;
    int m = -1;
    // neighborhood / antineighborhood payload
    int v = -1;
    // amalgam payload
    AmalgamSplit split;
    int a1 = -1, a2 = -1;
    // the two blocks, in host ids
    VertexSet g1, g2;
};

bool check_decomposition(const Graph& g, const Decomposition& d);

using LeafTest = std::function<bool(const Graph&)>;

// A module M with 2 <= |M| <= n-1, or nullopt iff g is prime.
std::optional<VertexSet> find_nontrivial_module(const Graph& g);

// A clique C whose removal disconnects g; A is the smallest component of
// g \ C, B the rest. Requires g connected. nullopt iff g is an atom.
std::optional<std::tuple<VertexSet, VertexSet, VertexSet>> find_clique_cutset(const Graph& g);

std::optional<AmalgamSplit> find_amalgam(const Graph& g);

// Smallest v such that leaf_test(g minus N[v]) holds.
std::optional<int> find_antineighborhood_vertex(const Graph& g, const LeafTest& leaf_test);

struct DecomposePolicy {
    std::vector<DecompKind> rules;
    LeafTest leaf_test;  // used by Antineighborhood
};

// First applicable decomposition in policy order; complete graphs are
// terminal and always yield nullopt.
std::optional<Decomposition> decompose_step(const Graph& g, const DecomposePolicy& policy);

}  // namespace csep
