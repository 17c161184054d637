#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "csep/graph.hpp"
#include "csep/instances.hpp"
#include "csep/rng.hpp"

namespace csep::testing {

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline std::vector<VertexSet> all_subsets(int n) {
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        VertexSet s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

// degree sequence of the induced subgraph on s
inline std::vector<int> induced_degrees(const Graph& g, const VertexSet& s) {
    std::vector<int> d(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (i != j && g.adjacent(s[i], s[j])) ++d[i];
    return d;
}

inline bool induces_connected(const Graph& g, const VertexSet& s) {
    if (s.empty()) return true;
    return is_connected(induced_subgraph(g, s).local);
}

// s induces a chordless cycle of length >= min_len
inline bool induces_hole(const Graph& g, const VertexSet& s, int min_len = 4) {
    if (int(s.size()) < min_len) return false;
    auto d = induced_degrees(g, s);
    for (int x : d)
        if (x != 2) return false;
    return induces_connected(g, s);
}

// s induces an apple: a hole plus a stem with exactly one neighbor on it
inline bool induces_apple(const Graph& g, const VertexSet& s) {
    for (int stem : s) {
        VertexSet rest = vs_minus(s, {stem});
        if (!induces_hole(g, rest)) continue;
        int cnt = 0;
        for (int v : rest) cnt += g.adjacent(stem, v);
        if (cnt == 1) return true;
    }
    return false;
}

// s induces a cap: a hole plus a stem adjacent to exactly two consecutive
// hole vertices
inline bool induces_cap(const Graph& g, const VertexSet& s) {
    for (int stem : s) {
        VertexSet rest = vs_minus(s, {stem});
        if (!induces_hole(g, rest)) continue;
        VertexSet nb;
        for (int v : rest)
            if (g.adjacent(stem, v)) nb.push_back(v);
        if (nb.size() == 2 && g.adjacent(nb[0], nb[1])) return true;
    }
    return false;
}

inline bool brute_has_apple(const Graph& g) {
    for (const VertexSet& s : all_subsets(g.n()))
        if (s.size() >= 5 && induces_apple(g, s)) return true;
    return false;
}

inline bool brute_has_cap(const Graph& g) {
    for (const VertexSet& s : all_subsets(g.n()))
        if (s.size() >= 5 && induces_cap(g, s)) return true;
    return false;
}

inline bool brute_has_long_hole(const Graph& g, int k) {
    for (const VertexSet& s : all_subsets(g.n()))
        if (int(s.size()) >= k && induces_hole(g, s, k)) return true;
    return false;
}

inline bool is_module_set(const Graph& g, const VertexSet& m) {
    for (int w = 0; w < g.n(); ++w) {
        if (vs_contains(m, w)) continue;
        bool any = false, all = true;
        for (int u : m) {
            if (g.adjacent(w, u)) any = true;
            else all = false;
        }
        if (any && !all) return false;
    }
    return true;
}

inline bool brute_has_nontrivial_module(const Graph& g) {
    for (const VertexSet& s : all_subsets(g.n()))
        if (s.size() >= 2 && int(s.size()) <= g.n() - 1 && is_module_set(g, s)) return true;
    return false;
}

inline bool brute_has_clique_cutset(const Graph& g) {
    for (const VertexSet& c : all_subsets(g.n())) {
        if (int(c.size()) >= g.n() - 1) continue;
        if (!is_clique(g, c)) continue;
        if (components(induced_subgraph(g, vs_minus(g.vertices(), c)).local).size() >= 2)
            return true;
    }
    return false;
}

inline std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
    std::vector<VertexSet> cliques;
    for (const VertexSet& s : all_subsets(g.n()))
        if (is_clique(g, s)) cliques.push_back(s);
    std::vector<VertexSet> maximal;
    for (const VertexSet& a : cliques) {
        bool max = true;
        for (const VertexSet& b : cliques)
            if (a != b && vs_intersect(a, b) == a) {
                max = false;
                break;
            }
        if (max) maximal.push_back(a);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

}  // namespace csep::testing
