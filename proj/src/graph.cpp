#include "csep/graph.hpp"

#include <algorithm>

namespace csep {

VertexSet vs_canon(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    r.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet vs_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet vs_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool vs_contains(const VertexSet& a, int v) {
    return std::binary_search(a.begin(), a.end(), v);
}

Bits to_bits(int n, const VertexSet& s) {
    Bits b(n);
    for (int v : s) b.set(v);
    return b;
}

VertexSet to_set(const Bits& b) {
    VertexSet s;
    b.for_each([&](int i) { s.push_back(i); });
    return s;
}

Graph::Graph(int n, std::string name) : n_(n), name_(std::move(name)) {
    if (n < 0) throw InputError("graph: negative vertex count");
    adj_.assign(n, Bits(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::string name) {
    Graph g(n, std::move(name));
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InputError("graph: vertex id out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("graph: self-loop rejected");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

VertexSet Graph::vertices() const {
    VertexSet s(n_);
    for (int i = 0; i < n_; ++i) s[i] = i;
    return s;
}

VertexSet Graph::neighborhood(int v) const {
    check_vertex(v);
    return to_set(adj_[v]);
}

VertexSet Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    Bits b = adj_[v];
    b.set(v);
    return to_set(b);
}

VertexSet Graph::anti_neighborhood(int v) const {
    check_vertex(v);
    Bits b = adj_[v];
    b.set(v);
    Bits all(n_);
    all.set_all();
    all.andnot(b);
    return to_set(all);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) e.emplace_back(u, v);
    return e;
}

Graph complement(const Graph& g) {
    Graph c(g.n(), g.name());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> comps;
    Bits seen(g.n());
    for (int s = 0; s < g.n(); ++s) {
        if (seen.test(s)) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            g.row(v).for_each([&](int u) {
                if (!seen.test(u)) {
                    seen.set(u);
                    stack.push_back(u);
                }
            });
        }
        comps.push_back(vs_canon(std::move(comp)));
    }
    return comps;
}

std::vector<VertexSet> anticomponents(const Graph& g) { return components(complement(g)); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }
bool is_anticonnected(const Graph& g) { return anticomponents(g).size() <= 1; }

bool is_complete(const Graph& g) { return g.m() == g.n() * (g.n() - 1) / 2; }

bool is_clique(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_stable(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_complete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int u : a)
        for (int v : b)
            if (u != v && !g.adjacent(u, v)) return false;
    return true;
}

bool is_anticomplete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int u : a)
        for (int v : b)
            if (u == v || g.adjacent(u, v)) return false;
    return true;
}

InducedView induced_subgraph(const Graph& g, const VertexSet& s) {
    VertexSet kept = vs_canon(s);
    for (int v : kept)
        if (v < 0 || v >= g.n()) throw InputError("induced_subgraph: id out of range");
    InducedView view;
    view.kept = kept;
    view.host_to_local.assign(g.n(), -1);
    for (size_t i = 0; i < kept.size(); ++i) view.host_to_local[kept[i]] = int(i);
    Graph local(int(kept.size()), g.name());
    for (size_t i = 0; i < kept.size(); ++i)
        for (size_t j = i + 1; j < kept.size(); ++j)
            if (g.adjacent(kept[i], kept[j])) local.add_edge(int(i), int(j));
    view.local = std::move(local);
    return view;
}

}  // namespace csep
