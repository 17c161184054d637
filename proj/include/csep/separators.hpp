#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "csep/decompose.hpp"
#include "csep/graph.hpp"

namespace csep {

// A cut (W, W') is stored by its clique side W; the stable side is V \ W.
struct CutFamily {
    int host_n = 0;
    std::vector<VertexSet> cuts;  // clique sides, sorted, duplicate-free
    std::string provenance;
    std::size_t raw_inserted = 0;  // cuts added before dedup

    std::size_t size() const { return cuts.size(); }
    bool contains(const VertexSet& clique_side) const;
    std::size_t dedup_savings() const { return raw_inserted - cuts.size(); }
};

VertexSet stable_side(const CutFamily& f, const VertexSet& clique_side);

class FamilyBuilder {
  public:
    FamilyBuilder(int host_n, std::string provenance);
    void add(VertexSet clique_side);
    void add_trivials();
    CutFamily finish();

  private:
    int n_;
    std::string prov_;
    std::vector<VertexSet> acc_;
};

// Translate a family on an induced view back to host ids.
CutFamily lift_cuts(const CutFamily& child, const InducedView& view, int host_n);

// Add the trivial cuts (V, {}) and ({}, V) if missing.
CutFamily ensure_trivials(const CutFamily& f);

// All 2^n cuts; guarded at n <= 20.
CutFamily all_cuts_fallback(const Graph& g);

// (K, V\K) and (K\{v}, (V\K) u {v}) for every maximal clique K and v in K.
CutFamily maxclique_separator(const Graph& g);

// (N[v] \ T, rest) for every v and every stable T subset of N(v), |T| <= k.
// Requires every neighborhood to have no stable set of size k+1.
CutFamily bounded_alpha_neighborhood_separator(const Graph& g, int k);

// Swap both sides of every cut; CS-separator of the complement.
CutFamily complement_separator(const CutFamily& f);

// Lemma-3 combiners. Child families must already be in host ids; the
// outputs are exactly the mapped cuts, deduplicated, so |out| <= |f1|+|f2|.
CutFamily combine_cutset(const CutFamily& f1, const CutFamily& f2, const VertexSet& A,
                         const VertexSet& C, const VertexSet& B);
CutFamily combine_component(const CutFamily& f1, const CutFamily& f2, const VertexSet& A,
                            const VertexSet& B);
CutFamily combine_anticomponent(const CutFamily& f1, const CutFamily& f2, const VertexSet& A,
                                const VertexSet& B);
// Proof-route variant (complement of component combine); used as a test
// oracle for the direct rule above.
CutFamily combine_anticomponent_complement_route(const CutFamily& f1, const CutFamily& f2,
                                                 const VertexSet& A, const VertexSet& B);
// A = outside vertices complete to M, B = outside vertices anticomplete to M.
CutFamily combine_module(const CutFamily& f1, const CutFamily& f2, const VertexSet& M, int m,
                         const VertexSet& A, const VertexSet& B);
// f1 on G\v, f2 on G[N(v)]; B = anti-neighborhood of v.
CutFamily combine_neighborhood(const CutFamily& f1, const CutFamily& f2, int v,
                               const VertexSet& B);
// f1 on G\v, f2 on G minus N[v]; Nv = N(v).
CutFamily combine_antineighborhood(const CutFamily& f1, const CutFamily& f2, int v,
                                   const VertexSet& Nv);
CutFamily combine_antineighborhood_complement_route(const CutFamily& f1, const CutFamily& f2,
                                                    int v, const VertexSet& Nv,
                                                    const VertexSet& host_vertices);
CutFamily combine_amalgam(const CutFamily& f1, const CutFamily& f2, const AmalgamSplit& split,
                          int a1, int a2);

// Dispatch to the matching combiner for a decomposition of g[phi]; d and the
// families are in host ids.
CutFamily combine(const Graph& g, const VertexSet& phi, const Decomposition& d,
                  const CutFamily& f1, const CutFamily& f2);

using LeafSolver = std::function<CutFamily(const Graph&)>;

// Fold neighborhood combines along an ordering; right children (forward
// neighborhoods) solved by leaf_solver, as is the final suffix.
CutFamily degeneracy_separator(const Graph& g, const std::vector<int>& ordering,
                               const LeafSolver& leaf_solver);

// Expand a family on G\D to all of G: for every cut and every X subset of D,
// add (W u X, W' u (D\X)). Guarded at |D| <= 30.
CutFamily distance_expansion(const CutFamily& f_prime, const VertexSet& D, int host_n);

// Text format: header "s <n> <count> <provenance>", then one "c <ids...>"
// line per cut listing the clique side in ascending 1-based ids, lines
// sorted lexicographically.
void write_cut_family(std::ostream& out, const CutFamily& f);
CutFamily read_cut_family(std::istream& in);
void write_cut_family_file(const std::string& path, const CutFamily& f);
CutFamily read_cut_family_file(const std::string& path);

}  // namespace csep
