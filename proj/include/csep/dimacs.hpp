#pragma once

#include <iosfwd>
#include <string>

#include "csep/graph.hpp"

namespace csep {

// DIMACS edge format: `p edge <n> <m>`, then `e <u> <v>` with 1-based ids.
// Comment lines start with `c`. The writer emits edges sorted with u < v.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

Graph read_dimacs_file(const std::string& path);
void write_dimacs_file(const std::string& path, const Graph& g);

}  // namespace csep
