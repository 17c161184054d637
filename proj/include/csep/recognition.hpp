#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csep/graph.hpp"

namespace csep {

// Cyclically ordered chordless cycle of length >= 4.
struct HoleWitness {
    std::vector<int> cycle;
};

struct PatternWitness {
    std::string pattern_name;
    std::vector<int> embedding;  // host ids, in pattern vertex order
};

enum class Pattern { Triangle, Claw, C5, C6, D6, E6 };

struct PatternDef {
    std::string name;
    int n;
    std::vector<std::pair<int, int>> edges;
};

const PatternDef& pattern_def(Pattern p);
const std::vector<PatternDef>& pattern_table();

struct ChordalResult {
    bool chordal;
    std::vector<int> peo;     // perfect elimination ordering when chordal
    HoleWitness hole;         // a hole when not
};

ChordalResult is_chordal(const Graph& g);

std::optional<PatternWitness> contains_fixed_induced(const Graph& g, Pattern p);

// A hole of length >= 4 through v, if any.
std::optional<HoleWitness> vertex_on_hole(const Graph& g, int v);

// A hole of length >= 4 containing the edge xy, if any. The cycle starts y, x's
// side last, i.e. [y, b, ..., x].
std::optional<HoleWitness> hole_through_edge(const Graph& g, int x, int y);

// A hole of length >= k, if any. k >= 4 required.
std::optional<HoleWitness> has_long_hole(const Graph& g, int k);

struct StemHoleWitness {
    int stem;
    HoleWitness hole;
};

// nullopt = the graph is apple-free; otherwise a stem with exactly one
// neighbor on the returned hole.
std::optional<StemHoleWitness> is_apple_free(const Graph& g);

// nullopt = cap-free; otherwise a stem adjacent to exactly two consecutive
// vertices of the returned hole.
std::optional<StemHoleWitness> is_cap_free(const Graph& g);

enum class BasicCapFreeTag { Chordal, AlmostTriangleFree };
std::optional<BasicCapFreeTag> is_basic_cap_free(const Graph& g);

VertexSet universal_vertices(const Graph& g);
bool is_2connected(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_claw_free(const Graph& g);

// Witness re-verification helpers used by tests and error paths.
bool verify_hole(const Graph& g, const std::vector<int>& cycle);
bool verify_pattern_witness(const Graph& g, const PatternWitness& w);

}  // namespace csep
