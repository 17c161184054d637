#include "csep/recognition.hpp"

#include <algorithm>
#include <queue>

namespace csep {

const std::vector<PatternDef>& pattern_table() {
    // Vertex ordering convention: cycles are numbered along the cycle; the
    // claw center is vertex 0; the single chord of D6 joins opposite cycle
    // vertices (0,3), the chord of E6 joins vertices at distance two (0,2).
    static const std::vector<PatternDef> table = {
        {"triangle", 3, {{0, 1}, {1, 2}, {0, 2}}},
        {"claw", 4, {{0, 1}, {0, 2}, {0, 3}}},
        {"C5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}},
        {"C6", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}},
        {"D6", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}}},
        {"E6", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}}},
    };
    return table;
}

const PatternDef& pattern_def(Pattern p) { return pattern_table()[size_t(p)]; }

bool verify_hole(const Graph& g, const std::vector<int>& cycle) {
    size_t k = cycle.size();
    if (k < 4) return false;
    VertexSet uniq = vs_canon(VertexSet(cycle.begin(), cycle.end()));
    if (uniq.size() != k) return false;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

bool verify_pattern_witness(const Graph& g, const PatternWitness& w) {
    for (const auto& def : pattern_table()) {
        if (def.name != w.pattern_name) continue;
        if (int(w.embedding.size()) != def.n) return false;
        VertexSet uniq = vs_canon(VertexSet(w.embedding.begin(), w.embedding.end()));
        if (int(uniq.size()) != def.n) return false;
        Graph pat = Graph::from_edges(def.n, def.edges);
        for (int i = 0; i < def.n; ++i)
            for (int j = i + 1; j < def.n; ++j)
                if (g.adjacent(w.embedding[i], w.embedding[j]) != pat.adjacent(i, j))
                    return false;
        return true;
    }
    return false;
}

std::optional<PatternWitness> contains_fixed_induced(const Graph& g, Pattern p) {
    const PatternDef& def = pattern_def(p);
    if (g.n() < def.n) return std::nullopt;
    Graph pat = Graph::from_edges(def.n, def.edges);

    std::vector<Bits> nonrow(g.n(), Bits(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        nonrow[v] = g.row(v).complemented();
        nonrow[v].reset(v);
    }

    std::vector<int> map(def.n, -1);
    Bits used(g.n());

    auto search = [&](auto&& self, int k) -> bool {
        if (k == def.n) return true;
        Bits cand(g.n());
        cand.set_all();
        cand.andnot(used);
        for (int j = 0; j < k; ++j)
            cand &= pat.adjacent(j, k) ? g.row(map[j]) : nonrow[map[j]];
        int dk = pat.degree(k);
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            if (g.degree(v) < dk) continue;
            map[k] = v;
            used.set(v);
            if (self(self, k + 1)) return true;
            used.reset(v);
        }
        map[k] = -1;
        return false;
    };

    if (!search(search, 0)) return std::nullopt;
    return PatternWitness{def.name, map};
}

namespace {

// Shortest path from any vertex in `from` to `to` inside the vertex set
// `allowed` (which must contain `to`). Returns the path or empty.
std::vector<int> bfs_path(const Graph& g, const Bits& from, int to, const Bits& allowed) {
    std::vector<int> prev(g.n(), -2);
    std::queue<int> q;
    for (int v = from.first(); v >= 0; v = from.next(v)) {
        if (!allowed.test(v)) continue;
        prev[v] = -1;
        q.push(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == to) {
            std::vector<int> path{v};
            while (prev[v] >= 0) {
                v = prev[v];
                path.push_back(v);
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (int u = g.row(v).first(); u >= 0; u = g.row(v).next(u)) {
            if (!allowed.test(u) || prev[u] != -2) continue;
            prev[u] = v;
            q.push(u);
        }
    }
    return {};
}

}  // namespace

std::optional<HoleWitness> vertex_on_hole(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw InputError("vertex_on_hole: id out of range");
    VertexSet nv = g.neighborhood(v);
    for (size_t i = 0; i < nv.size(); ++i)
        for (size_t j = i + 1; j < nv.size(); ++j) {
            int x = nv[i], y = nv[j];
            if (g.adjacent(x, y)) continue;
            // allowed = (V \ N[v]) plus x, y
            Bits allowed = g.row(v);
            allowed.set(v);
            allowed = allowed.complemented();
            allowed.set(x);
            allowed.set(y);
            Bits from(g.n());
            from.set(x);
            auto path = bfs_path(g, from, y, allowed);
            if (path.empty()) continue;
            std::vector<int> cycle{v};
            cycle.insert(cycle.end(), path.begin(), path.end());
            return HoleWitness{cycle};
        }
    return std::nullopt;
}

std::optional<HoleWitness> hole_through_edge(const Graph& g, int x, int y) {
    if (!g.adjacent(x, y)) throw InputError("hole_through_edge: xy is not an edge");
    Bits starts = g.row(y);
    starts.andnot(g.row(x));
    starts.reset(x);
    for (int b = starts.first(); b >= 0; b = starts.next(b)) {
        // allowed = V \ (N[y] \ {b, x})
        Bits allowed = g.row(y);
        allowed.set(y);
        allowed = allowed.complemented();
        allowed.set(b);
        allowed.set(x);
        Bits from(g.n());
        from.set(b);
        auto path = bfs_path(g, from, x, allowed);
        if (path.size() < 3) continue;  // need b ... x with an intermediate
        std::vector<int> cycle{y};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return HoleWitness{cycle};
    }
    return std::nullopt;
}

ChordalResult is_chordal(const Graph& g) {
    int n = g.n();
    // Maximum cardinality search; tie-break on smallest id.
    std::vector<int> weight(n, 0), number(n, -1);
    for (int i = n; i >= 1; --i) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (number[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
        number[best] = i;
        g.row(best).for_each([&](int u) {
            if (number[u] < 0) ++weight[u];
        });
    }
    std::vector<int> order(n);  // elimination order, number 1 first
    for (int v = 0; v < n; ++v) order[number[v] - 1] = v;

    bool ok = true;
    for (int v : order) {
        // later neighbors and their minimum-numbered representative
        int parent = -1;
        VertexSet later;
        g.row(v).for_each([&](int u) {
            if (number[u] > number[v]) {
                later.push_back(u);
                if (parent < 0 || number[u] < number[parent]) parent = u;
            }
        });
        for (int u : later)
            if (u != parent && !g.adjacent(parent, u)) {
                ok = false;
                break;
            }
        if (!ok) break;
    }
    if (ok) return {true, order, {}};

    for (int v = 0; v < n; ++v)
        if (auto h = vertex_on_hole(g, v)) return {false, {}, *h};
    // unreachable: a failed elimination check implies a hole exists
    throw std::logic_error("is_chordal: no hole found on non-chordal graph");
}

std::optional<HoleWitness> has_long_hole(const Graph& g, int k) {
    if (k < 4) throw InputError("has_long_hole: k must be >= 4");
    int n = g.n();
    if (k == 4) {
        for (auto [x, y] : g.edges())
            if (auto h = hole_through_edge(g, x, y)) return h;
        return std::nullopt;
    }
    int plen = k - 2;  // vertices on the seed induced path
    std::vector<int> p;
    std::optional<HoleWitness> found;

    auto try_close = [&]() -> bool {
        int p0 = p.front(), pl = p.back();
        Bits allowed(n);
        allowed.set_all();
        for (int j = 1; j + 1 < plen; ++j) {
            allowed.andnot(g.row(p[j]));
            allowed.reset(p[j]);
        }
        Bits common = g.row(p0);
        common &= g.row(pl);
        allowed.andnot(common);
        allowed.reset(p0);
        allowed.set(pl);
        // start BFS from p0's neighbors within allowed, excluding pl itself
        Bits from = g.row(p0);
        from &= allowed;
        from.reset(pl);
        auto path = bfs_path(g, from, pl, allowed);
        if (path.empty()) return false;
        // cycle: p0 .. pl along the seed path, then back through `path` reversed
        std::vector<int> cycle(p);
        for (auto it = path.rbegin() + 1; it != path.rend(); ++it) cycle.push_back(*it);
        if (!verify_hole(g, cycle) || int(cycle.size()) < k) return false;
        found = HoleWitness{cycle};
        return true;
    };

    auto extend = [&](auto&& self) -> bool {
        if (int(p.size()) == plen) return try_close();
        int last = p.back();
        for (int v = g.row(last).first(); v >= 0; v = g.row(last).next(v)) {
            bool induced_ok = true;
            for (size_t j = 0; j + 1 < p.size(); ++j)
                if (v == p[j] || g.adjacent(v, p[j])) {
                    induced_ok = false;
                    break;
                }
            if (!induced_ok || v == last) continue;
            p.push_back(v);
            if (self(self)) return true;
            p.pop_back();
        }
        return false;
    };

    for (int s = 0; s < n; ++s) {
        p = {s};
        if (extend(extend)) return found;
    }
    return std::nullopt;
}

std::optional<StemHoleWitness> is_apple_free(const Graph& g) {
    for (int a = 0; a < g.n(); ++a) {
        VertexSet na = g.neighborhood(a);
        VertexSet keep = vs_minus(g.vertices(), g.closed_neighborhood(a));
        for (int b : na) {
            InducedView view = induced_subgraph(g, vs_union(keep, {b}));
            if (auto h = vertex_on_hole(view.local, view.to_local(b))) {
                std::vector<int> cycle;
                for (int v : h->cycle) cycle.push_back(view.to_host(v));
                return StemHoleWitness{a, HoleWitness{cycle}};
            }
        }
    }
    return std::nullopt;
}

std::optional<StemHoleWitness> is_cap_free(const Graph& g) {
    for (int a = 0; a < g.n(); ++a) {
        VertexSet na = g.neighborhood(a);
        VertexSet keep = vs_minus(g.vertices(), g.closed_neighborhood(a));
        for (size_t i = 0; i < na.size(); ++i)
            for (size_t j = i + 1; j < na.size(); ++j) {
                int x = na[i], y = na[j];
                if (!g.adjacent(x, y)) continue;
                InducedView view = induced_subgraph(g, vs_union(keep, {x, y}));
                if (auto h = hole_through_edge(view.local, view.to_local(x),
                                               view.to_local(y))) {
                    std::vector<int> cycle;
                    for (int v : h->cycle) cycle.push_back(view.to_host(v));
                    return StemHoleWitness{a, HoleWitness{cycle}};
                }
            }
    }
    return std::nullopt;
}

VertexSet universal_vertices(const Graph& g) {
    VertexSet r;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == g.n() - 1) r.push_back(v);
    return r;
}

bool is_2connected(const Graph& g) {
    if (g.n() < 3) return false;
    if (!is_connected(g)) return false;
    for (int v = 0; v < g.n(); ++v) {
        InducedView view = induced_subgraph(g, vs_minus(g.vertices(), {v}));
        if (!is_connected(view.local)) return false;
    }
    return true;
}

bool is_triangle_free(const Graph& g) {
    return !contains_fixed_induced(g, Pattern::Triangle).has_value();
}

bool is_claw_free(const Graph& g) {
    return !contains_fixed_induced(g, Pattern::Claw).has_value();
}

std::optional<BasicCapFreeTag> is_basic_cap_free(const Graph& g) {
    if (is_chordal(g).chordal) return BasicCapFreeTag::Chordal;
    if (is_triangle_free(g) && is_2connected(g)) return BasicCapFreeTag::AlmostTriangleFree;
    for (int u : universal_vertices(g)) {
        InducedView view = induced_subgraph(g, vs_minus(g.vertices(), {u}));
        if (is_triangle_free(view.local) && is_2connected(view.local))
            return BasicCapFreeTag::AlmostTriangleFree;
    }
    return std::nullopt;
}

}  // namespace csep
