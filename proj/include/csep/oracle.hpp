#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "csep/graph.hpp"
#include "csep/separators.hpp"

namespace csep {

// All maximal cliques, each sorted, list in lexicographic order. Throws
// EnumerationOverflow past the cap.
std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t cap = 1000000);
std::vector<VertexSet> maximal_stable_sets(const Graph& g, std::size_t cap = 1000000);

// A disjoint clique/stable pair no cut of the family separates.
struct SeparationWitness {
    VertexSet clique;
    VertexSet stable;
};

// Production verifier: maximal-pair reduction. For every maximal clique K and
// maximal stable set S: disjoint pairs must be separated; pairs meeting in
// one vertex v must have cuts for (K\{v}, S) and (K, S\{v}). nullopt = ok;
// otherwise the first failing pair in canonical scan order.
std::optional<SeparationWitness> verify_separator(const Graph& g, const CutFamily& f,
                                                  std::size_t cap = 1000000);

// Direct transcription of the definition, every clique x stable pair
// including empty sets. Guarded at n <= 15.
std::optional<SeparationWitness> verify_separator_exhaustive(const Graph& g,
                                                             const CutFamily& f);

// Reduced checks on `samples` uniformly drawn maximal pairs; deterministic
// given seed.
std::optional<SeparationWitness> verify_separator_sampled(const Graph& g, const CutFamily& f,
                                                          std::size_t samples,
                                                          std::uint64_t seed,
                                                          std::size_t cap = 1000000);

// Re-check a witness by direct scan: disjoint clique/stable pair that no cut
// separates.
bool confirm_witness(const Graph& g, const CutFamily& f, const SeparationWitness& w);

// Two lines: "K <ids...>" / "S <ids...>", 1-based sorted.
void write_witness(std::ostream& out, const SeparationWitness& w);

}  // namespace csep
