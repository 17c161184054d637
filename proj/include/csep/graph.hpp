#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csep/bits.hpp"
#include "csep/errors.hpp"

namespace csep {

// Sorted, duplicate-free list of vertex ids within a host graph.
using VertexSet = std::vector<int>;

VertexSet vs_canon(VertexSet s);
VertexSet vs_union(const VertexSet& a, const VertexSet& b);
VertexSet vs_minus(const VertexSet& a, const VertexSet& b);
VertexSet vs_intersect(const VertexSet& a, const VertexSet& b);
bool vs_contains(const VertexSet& a, int v);

Bits to_bits(int n, const VertexSet& s);
VertexSet to_set(const Bits& b);

// Immutable simple undirected graph over dense ids 0..n-1. Edges are added
// during construction only; everything downstream treats graphs as values.
class Graph {
public:
    explicit Graph(int n = 0, std::string name = "");
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string name = "");

    int n() const { return n_; }
    int m() const { return m_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bits& row(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    VertexSet vertices() const;
    VertexSet neighborhood(int v) const;
    VertexSet closed_neighborhood(int v) const;
    VertexSet anti_neighborhood(int v) const;
    std::vector<std::pair<int, int>> edges() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::string name_;
    std::vector<Bits> adj_;
};

Graph complement(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> anticomponents(const Graph& g);
bool is_connected(const Graph& g);
bool is_anticonnected(const Graph& g);
bool is_complete(const Graph& g);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_stable(const Graph& g, const VertexSet& s);
bool is_complete_between(const Graph& g, const VertexSet& a, const VertexSet& b);
bool is_anticomplete_between(const Graph& g, const VertexSet& a, const VertexSet& b);

// Induced subgraph together with the explicit id maps both ways.
// local id i corresponds to host id kept[i]; kept is sorted.
struct InducedView {
    Graph local;
    VertexSet kept;                 // local -> host
    std::vector<int> host_to_local; // host -> local, -1 when absent

    int to_host(int local_id) const { return kept[local_id]; }
    int to_local(int host_id) const { return host_to_local[host_id]; }
};

InducedView induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace csep
