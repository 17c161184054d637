#include "csep/instances.hpp"

#include <algorithm>
#include <fstream>

#include "csep/dimacs.hpp"
#include "csep/errors.hpp"
#include "csep/recognition.hpp"
#include "csep/rng.hpp"
#include "json.hpp"

namespace csep {

Graph gen_random(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

Graph gen_chordal(int n, double density, std::uint64_t seed) {
    if (n < 1) throw GenerationError("gen_chordal: n must be >= 1");
    Rng rng(seed);
    Graph g(n);
    for (int i = 1; i < n; ++i) {
        int v = int(rng.below(std::uint64_t(i)));
        // grow a clique containing v inside N[v]; the new vertex attaches to
        // it and is therefore simplicial
        VertexSet clique{v};
        for (int u : g.neighborhood(v)) {
            if (u >= i) continue;
            if (!rng.chance(density)) continue;
            bool ok = true;
            for (int w : clique)
                if (w != u && !g.adjacent(u, w)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(u);
        }
        for (int u : clique) g.add_edge(i, u);
    }
    return g;
}

Graph gen_triangle_free(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!rng.chance(p)) continue;
            Bits common = g.row(u);
            common &= g.row(v);
            if (common.none()) g.add_edge(u, v);
        }
    return g;
}

Graph gen_almost_triangle_free(int n, double p, std::uint64_t seed) {
    if (n < 5) throw GenerationError("gen_almost_triangle_free: n must be >= 5");
    Rng rng(seed);
    int c = n - 1;  // core cycle size, universal vertex added last
    Graph g(n);
    for (int i = 0; i < c; ++i) g.add_edge(i, (i + 1) % c);
    for (int u = 0; u < c; ++u)
        for (int v = u + 2; v < c; ++v) {
            if (g.adjacent(u, v) || !rng.chance(p)) continue;
            Bits common = g.row(u);
            common &= g.row(v);
            if (common.none()) g.add_edge(u, v);
        }
    for (int u = 0; u < c; ++u) g.add_edge(u, c);
    return g;
}

Graph gen_line_graph(int base_n, double p, std::uint64_t seed) {
    Graph base = gen_random(base_n, p, seed);
    auto edges = base.edges();
    Graph lg(int(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) lg.add_edge(int(i), int(j));
        }
    return lg;
}

std::pair<Graph, AmalgamSplit> compose_amalgam(const Graph& g1, const VertexSet& A1,
                                               const Graph& g2, const VertexSet& A2,
                                               int c_size) {
    if (A1.empty() || A2.empty()) throw InputError("compose_amalgam: A sides must be nonempty");
    if (g1.n() < 2 || g2.n() < 2) throw InputError("compose_amalgam: sides need >= 2 vertices");
    if (c_size < 0) throw InputError("compose_amalgam: negative clique size");
    int n1 = g1.n(), n2 = g2.n();
    Graph g(n1 + n2 + c_size);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
    AmalgamSplit split;
    split.A1 = A1;
    split.B1 = vs_minus(g1.vertices(), A1);
    for (int v : A2) split.A2.push_back(n1 + v);
    split.B2 = vs_minus(g2.vertices(), A2);
    for (int& v : split.B2) v += n1;
    for (int i = 0; i < c_size; ++i) split.C.push_back(n1 + n2 + i);
    for (std::size_t i = 0; i < split.C.size(); ++i)
        for (std::size_t j = i + 1; j < split.C.size(); ++j)
            g.add_edge(split.C[i], split.C[j]);
    for (int c : split.C)
        for (int a : vs_union(split.A1, split.A2)) g.add_edge(c, a);
    for (int a : split.A1)
        for (int b : split.A2) g.add_edge(a, b);
    return {std::move(g), std::move(split)};
}

Graph compose_clique_glue(const Graph& g1, const VertexSet& k1, const Graph& g2,
                          const VertexSet& k2) {
    if (k1.size() != k2.size()) throw InputError("compose_clique_glue: clique size mismatch");
    if (!is_clique(g1, k1) || !is_clique(g2, k2))
        throw InputError("compose_clique_glue: attach sets must be cliques");
    int n1 = g1.n();
    // vertices of g2 \ k2 are appended after g1; k2[i] is identified with k1[i]
    std::vector<int> map2(g2.n(), -1);
    for (std::size_t i = 0; i < k2.size(); ++i) map2[k2[i]] = k1[i];
    int next = n1;
    for (int v = 0; v < g2.n(); ++v)
        if (map2[v] < 0) map2[v] = next++;
    Graph g(next);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        if (!g.adjacent(map2[u], map2[v])) g.add_edge(map2[u], map2[v]);
    return g;
}

std::pair<Graph, VertexSet> substitute_module(const Graph& g, int v, const Graph& m_graph) {
    if (v < 0 || v >= g.n()) throw InputError("substitute_module: bad vertex");
    if (m_graph.n() < 1) throw InputError("substitute_module: empty module graph");
    // g's vertices keep their ids except v, whose slot is taken by the first
    // module vertex; the rest of the module is appended
    int n = g.n() + m_graph.n() - 1;
    std::vector<int> mod_id(m_graph.n());
    mod_id[0] = v;
    for (int i = 1; i < m_graph.n(); ++i) mod_id[i] = g.n() + i - 1;
    Graph out(n);
    for (auto [a, b] : g.edges())
        if (a != v && b != v) out.add_edge(a, b);
    for (auto [a, b] : m_graph.edges()) out.add_edge(mod_id[a], mod_id[b]);
    for (int u : g.neighborhood(v))
        for (int mi : mod_id) out.add_edge(u, mi);
    VertexSet planted = vs_canon(VertexSet(mod_id.begin(), mod_id.end()));
    return {std::move(out), std::move(planted)};
}

Graph gen_capfree_composite(int n, double p, std::uint64_t seed) {
    if (n < 8) throw GenerationError("gen_capfree_composite: n must be >= 8");
    Rng rng(seed);
    for (int attempt = 0; attempt < 50; ++attempt) {
        int n1 = n / 2;
        int n2 = n - n1 - 1;  // one vertex for the joint clique C
        auto block = [&](int k) -> Graph {
            if (k >= 6 && rng.chance(0.5)) return gen_almost_triangle_free(k, p, rng.next());
            // dense blocks keep the maximal-stable-set count of the composite
            // within the verifier's enumeration cap
            return gen_chordal(k, 0.9, rng.next());
        };
        Graph b1 = block(n1), b2 = block(n2);
        int a1 = int(rng.below(std::uint64_t(b1.n())));
        int a2 = int(rng.below(std::uint64_t(b2.n())));
        auto [g, split] = compose_amalgam(b1, {a1}, b2, {a2}, 1);
        if (!is_cap_free(g)) return g;
    }
    throw GenerationError("gen_capfree_composite: rejection budget exhausted");
}

Graph gen_nearly_chordal_composite(int n, std::uint64_t seed) {
    if (n < 1) throw GenerationError("gen_nearly_chordal_composite: n must be >= 1");
    Rng rng(seed);
    auto piece = [&](int k) -> Graph {
        if (k == 5 && rng.chance(0.5)) {
            Graph c5(5);
            for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
            return c5;
        }
        return gen_chordal(k, 0.5, rng.next());
    };
    Graph g = piece(std::min(n, rng.range(3, 6)));
    while (g.n() < n) {
        Graph h = piece(std::min(std::max(n - g.n(), 2), rng.range(3, 6)));
        switch (rng.range(0, 3)) {
            case 0: {  // disjoint union
                Graph u(g.n() + h.n());
                for (auto [a, b] : g.edges()) u.add_edge(a, b);
                for (auto [a, b] : h.edges()) u.add_edge(g.n() + a, g.n() + b);
                g = std::move(u);
                break;
            }
            case 1: {  // join
                Graph u(g.n() + h.n());
                for (auto [a, b] : g.edges()) u.add_edge(a, b);
                for (auto [a, b] : h.edges()) u.add_edge(g.n() + a, g.n() + b);
                for (int a = 0; a < g.n(); ++a)
                    for (int b = 0; b < h.n(); ++b) u.add_edge(a, g.n() + b);
                g = std::move(u);
                break;
            }
            case 2: {  // glue on a single shared vertex
                int v1 = int(rng.below(std::uint64_t(g.n())));
                int v2 = int(rng.below(std::uint64_t(h.n())));
                g = compose_clique_glue(g, {v1}, h, {v2});
                break;
            }
            case 3: {  // substitute a vertex by the piece as a module
                int v = int(rng.below(std::uint64_t(g.n())));
                g = substitute_module(g, v, h).first;
                break;
            }
        }
    }
    return g;
}

void write_instance(const std::string& dimacs_path, const std::string& sidecar_path,
                    const Graph& g, const std::string& family, std::uint64_t seed,
                    const std::map<std::string, std::string>& params) {
    write_dimacs_file(dimacs_path, g);
    nlohmann::ordered_json doc;
    doc["family"] = family;
    doc["n"] = g.n();
    doc["m"] = g.m();
    doc["seed"] = seed;
    nlohmann::ordered_json pj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) pj[k] = v;
    doc["params"] = std::move(pj);
    std::ofstream out(sidecar_path);
    if (!out) throw InputError("cannot open " + sidecar_path);
    out << doc.dump(2) << '\n';
}

}  // namespace csep
