#include "csep/decompose.hpp"

#include <algorithm>
#include <array>

namespace csep {

const char* decomp_kind_name(DecompKind k) {
    switch (k) {
        case DecompKind::Component: return "component";
        case DecompKind::Anticomponent: return "anticomponent";
        case DecompKind::Cutset: return "cutset";
        case DecompKind::CliqueCutset: return "clique-cutset";
        case DecompKind::Module: return "module";
        case DecompKind::Neighborhood: return "neighborhood";
        case DecompKind::Antineighborhood: return "antineighborhood";
        case DecompKind::Amalgam: return "amalgam";
    }
    return "?";
}

bool check_amalgam_split(const Graph& g, const AmalgamSplit& s) {
    VertexSet all = vs_union(vs_union(s.B1, s.A1), vs_union(s.C, vs_union(s.A2, s.B2)));
    if (all != g.vertices()) return false;
    size_t total = s.B1.size() + s.A1.size() + s.C.size() + s.A2.size() + s.B2.size();
    if (total != size_t(g.n())) return false;  // disjointness
    if (s.A1.empty() || s.A2.empty()) return false;
    if (s.A1.size() + s.B1.size() < 2 || s.A2.size() + s.B2.size() < 2) return false;
    if (!is_clique(g, s.C)) return false;
    if (!is_complete_between(g, s.C, vs_union(s.A1, s.A2))) return false;
    if (!is_complete_between(g, s.A1, s.A2)) return false;
    if (!is_anticomplete_between(g, s.B1, vs_union(s.A2, s.B2))) return false;
    if (!is_anticomplete_between(g, s.B2, vs_union(s.A1, s.B1))) return false;
    return true;
}

bool check_decomposition(const Graph& g, const Decomposition& d) {
    const VertexSet all = g.vertices();
    if (d.g1.empty() || d.g2.empty()) return false;
    if (d.g1 == all || d.g2 == all) return false;  // proper induced subgraphs
    switch (d.kind) {
        case DecompKind::Component:
        case DecompKind::Cutset:
        case DecompKind::CliqueCutset: {
            if (d.A.empty() || d.B.empty()) return false;
            if (vs_union(vs_union(d.A, d.C), d.B) != all) return false;
            if (d.A.size() + d.B.size() + d.C.size() != all.size()) return false;
            if (!is_anticomplete_between(g, d.A, d.B)) return false;
            if (d.kind == DecompKind::Component && !d.C.empty()) return false;
            if (d.kind == DecompKind::CliqueCutset && !is_clique(g, d.C)) return false;
            return d.g1 == vs_union(d.A, d.C) && d.g2 == vs_union(d.B, d.C);
        }
        case DecompKind::Anticomponent: {
            if (d.A.empty() || d.B.empty() || !d.C.empty()) return false;
            if (vs_union(d.A, d.B) != all) return false;
            if (d.A.size() + d.B.size() != all.size()) return false;
            if (!is_complete_between(g, d.A, d.B)) return false;
            return d.g1 == d.A && d.g2 == d.B;
        }
        case DecompKind::Module: {
            if (d.M.size() < 2 || int(d.M.size()) > g.n() - 1) return false;
            if (!vs_contains(d.M, d.m)) return false;
            for (int w : vs_minus(all, d.M)) {
                bool adj_any = false, adj_all = true;
                for (int u : d.M) {
                    if (g.adjacent(w, u)) adj_any = true;
                    else adj_all = false;
                }
                if (adj_any && !adj_all) return false;
            }
            return d.g1 == d.M && d.g2 == vs_union({d.m}, vs_minus(all, d.M));
        }
        case DecompKind::Neighborhood:
            return d.v >= 0 && d.v < g.n() && d.g1 == vs_minus(all, {d.v}) &&
                   d.g2 == g.neighborhood(d.v);
        case DecompKind::Antineighborhood:
            return d.v >= 0 && d.v < g.n() && d.g1 == vs_minus(all, {d.v}) &&
                   d.g2 == g.anti_neighborhood(d.v);
        case DecompKind::Amalgam: {
            if (!check_amalgam_split(g, d.split)) return false;
            if (!vs_contains(d.split.A1, d.a1) || !vs_contains(d.split.A2, d.a2)) return false;
            VertexSet g1 = vs_union(vs_union(d.split.B1, d.split.A1),
                                    vs_union(d.split.C, {d.a2}));
            VertexSet g2 = vs_union(vs_union({d.a1}, d.split.C),
                                    vs_union(d.split.A2, d.split.B2));
            return d.g1 == g1 && d.g2 == g2;
        }
    }
    return false;
}

std::optional<VertexSet> find_nontrivial_module(const Graph& g) {
    int n = g.n();
    if (n <= 2) return std::nullopt;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            // grow the minimal module containing {u, v}
            Bits mod(n);
            mod.set(u);
            mod.set(v);
            bool grew = true;
            while (grew && mod.count() < n) {
                grew = false;
                for (int w = 0; w < n && !grew; ++w) {
                    if (mod.test(w)) continue;
                    Bits inter = g.row(w);
                    inter &= mod;
                    int c = inter.count();
                    int target = mod.count() - (mod.test(w) ? 1 : 0);
                    if (c != 0 && c != target) {
                        mod.set(w);
                        grew = true;
                    }
                }
            }
            if (mod.count() < n) return to_set(mod);
        }
    return std::nullopt;
}

namespace {

// MCS-M (Berry et al.): produces a minimal elimination ordering together with
// the fill edges of a minimal triangulation.
struct McsM {
    std::vector<int> number;            // 1..n, elimination position
    std::vector<Bits> fill_adj;         // triangulated adjacency
};

McsM mcs_m(const Graph& g) {
    int n = g.n();
    McsM r;
    r.number.assign(n, 0);
    r.fill_adj.resize(n, Bits(n));
    for (int v = 0; v < n; ++v) r.fill_adj[v] = g.row(v);
    std::vector<int> weight(n, 0);
    std::vector<char> numbered(n, 0);
    for (int i = n; i >= 1; --i) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!numbered[u] && (v < 0 || weight[u] > weight[v])) v = u;
        // S = unnumbered u reachable from v through unnumbered internal
        // vertices of strictly smaller weight than u
        std::vector<int> reach_weight(n, -1);  // best (max) bottleneck seen
        std::vector<int> stack;
        VertexSet S;
        for (int u = 0; u < n; ++u) {
            if (numbered[u] || u == v) continue;
            // BFS with per-target threshold; simple and fine at desk scale
            std::vector<char> seen(n, 0);
            std::vector<int> q{v};
            seen[v] = 1;
            bool hit = false;
            while (!q.empty() && !hit) {
                int x = q.back();
                q.pop_back();
                for (int y = g.row(x).first(); y >= 0; y = g.row(x).next(y)) {
                    if (seen[y] || numbered[y]) continue;
                    if (y == u) {
                        hit = true;
                        break;
                    }
                    if (weight[y] < weight[u]) {
                        seen[y] = 1;
                        q.push_back(y);
                    }
                }
            }
            if (hit) S.push_back(u);
        }
        for (int u : S) {
            ++weight[u];
            r.fill_adj[v].set(u);
            r.fill_adj[u].set(v);
        }
        numbered[v] = 1;
        r.number[v] = i;
    }
    return r;
}

}  // namespace

std::optional<std::tuple<VertexSet, VertexSet, VertexSet>> find_clique_cutset(const Graph& g) {
    if (!is_connected(g)) throw InputError("find_clique_cutset: graph must be connected");
    int n = g.n();
    if (n <= 2) return std::nullopt;
    McsM t = mcs_m(g);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[t.number[v] - 1] = v;
    for (int v : order) {
        VertexSet c;
        t.fill_adj[v].for_each([&](int u) {
            if (t.number[u] > t.number[v]) c.push_back(u);
        });
        if (int(c.size()) >= n - 1) continue;
        if (!is_clique(g, c)) continue;
        InducedView rest = induced_subgraph(g, vs_minus(g.vertices(), c));
        auto comps = components(rest.local);
        if (comps.size() < 2) continue;
        // A = smallest component (ties by smallest id), B = the rest
        size_t best = 0;
        for (size_t i = 1; i < comps.size(); ++i)
            if (comps[i].size() < comps[best].size()) best = i;
        VertexSet a, b;
        for (size_t i = 0; i < comps.size(); ++i)
            for (int x : comps[i]) (i == best ? a : b).push_back(rest.to_host(x));
        return std::make_tuple(vs_canon(a), vs_canon(c), vs_canon(b));
    }
    return std::nullopt;
}

namespace {

enum Label { LA1, LB1, LC, LA2, LB2, LCOUNT };

// complete / anticomplete obligations between label classes; -1 = free
inline int pair_requirement(int la, int lb) {
    auto req = [](int x, int y) -> int {
        if (x > y) std::swap(x, y);
        if (x == LC && y == LC) return 1;
        if ((x == LA1 && y == LC) || (x == LC && y == LA2)) return 1;
        if (x == LA1 && y == LA2) return 1;
        if (x == LB1 && (y == LA2 || y == LB2)) return 0;
        if (x == LA1 && y == LB2) return 0;
        return -1;
    };
    // normalize order: enum values LA1<LB1<LC<LA2<LB2
    return req(std::min(la, lb), std::max(la, lb));
}

struct AmalgamSearch {
    const Graph& g;
    std::vector<int> label;        // -1 unassigned
    std::vector<std::array<char, LCOUNT>> domain;
    bool b1_empty, b2_empty;

    explicit AmalgamSearch(const Graph& gg) : g(gg) {}

    bool consistent(int v, int lv) const {
        for (int u = 0; u < g.n(); ++u) {
            if (u == v || label[u] < 0) continue;
            int req = pair_requirement(lv, label[u]);
            if (req >= 0 && int(g.adjacent(u, v)) != req) return false;
        }
        return true;
    }

    bool assign_and_solve(std::vector<int> order_hint) {
        // unit propagation: prune domains against assigned vertices
        for (;;) {
            bool changed = false;
            for (int v = 0; v < g.n(); ++v) {
                if (label[v] >= 0) continue;
                int options = 0, last = -1;
                for (int l = 0; l < LCOUNT; ++l) {
                    if (!domain[v][l]) continue;
                    if (!consistent(v, l)) {
                        domain[v][l] = 0;
                        changed = true;
                        continue;
                    }
                    ++options;
                    last = l;
                }
                if (options == 0) return false;
                if (options == 1) {
                    label[v] = last;
                    changed = true;
                }
            }
            if (!changed) break;
        }
        int pick = -1;
        for (int v = 0; v < g.n(); ++v)
            if (label[v] < 0) {
                pick = v;
                break;
            }
        if (pick < 0) return finish();
        for (int l = 0; l < LCOUNT; ++l) {
            if (!domain[pick][l] || !consistent(pick, l)) continue;
            auto saved_label = label;
            auto saved_domain = domain;
            label[pick] = l;
            if (assign_and_solve(order_hint)) return true;
            label = saved_label;
            domain = saved_domain;
        }
        return false;
    }

    bool finish() const {
        int cnt[LCOUNT] = {0, 0, 0, 0, 0};
        for (int v = 0; v < g.n(); ++v) ++cnt[label[v]];
        if (cnt[LA1] == 0 || cnt[LA2] == 0) return false;
        if (cnt[LA1] + cnt[LB1] < 2 || cnt[LA2] + cnt[LB2] < 2) return false;
        if (b1_empty && cnt[LB1] > 0) return false;
        if (b2_empty && cnt[LB2] > 0) return false;
        return true;
    }
};

}  // namespace

std::optional<AmalgamSplit> find_amalgam(const Graph& g) {
    int n = g.n();
    if (n < 4) return std::nullopt;
    // Seeds: adjacent pair (a1, a2), plus per side a designated B vertex or an
    // empty-B flag (-1). First valid assignment in seed order wins.
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = g.row(a1).first(); a2 >= 0; a2 = g.row(a1).next(a2)) {
            if (a2 == a1) continue;
            for (int b1 = -1; b1 < n; ++b1) {
                if (b1 == a1 || b1 == a2) continue;
                if (b1 >= 0 && g.adjacent(b1, a2)) continue;  // B1 anticomplete to A2
                for (int b2 = -1; b2 < n; ++b2) {
                    if (b2 == a1 || b2 == a2 || (b2 >= 0 && b2 == b1)) continue;
                    if (b2 >= 0 && g.adjacent(b2, a1)) continue;
                    if (b1 >= 0 && b2 >= 0 && g.adjacent(b1, b2)) continue;
                    AmalgamSearch s(g);
                    s.label.assign(n, -1);
                    s.domain.assign(n, {1, 1, 1, 1, 1});
                    s.b1_empty = (b1 < 0);
                    s.b2_empty = (b2 < 0);
                    s.label[a1] = LA1;
                    s.label[a2] = LA2;
                    if (b1 >= 0) s.label[b1] = LB1;
                    if (b2 >= 0) s.label[b2] = LB2;
                    for (int v = 0; v < n; ++v) {
                        if (s.b1_empty) s.domain[v][LB1] = 0;
                        if (s.b2_empty) s.domain[v][LB2] = 0;
                    }
                    if (!s.assign_and_solve({})) continue;
                    AmalgamSplit split;
                    for (int v = 0; v < n; ++v) {
                        switch (s.label[v]) {
                            case LA1: split.A1.push_back(v); break;
                            case LB1: split.B1.push_back(v); break;
                            case LC: split.C.push_back(v); break;
                            case LA2: split.A2.push_back(v); break;
                            case LB2: split.B2.push_back(v); break;
                        }
                    }
                    if (check_amalgam_split(g, split)) return split;
                }
            }
        }
    return std::nullopt;
}

std::optional<int> find_antineighborhood_vertex(const Graph& g, const LeafTest& leaf_test) {
    for (int v = 0; v < g.n(); ++v) {
        VertexSet anti = g.anti_neighborhood(v);
        if (anti.empty()) continue;  // universal v: blocks must be non-empty
        if (leaf_test(induced_subgraph(g, anti).local)) return v;
    }
    return std::nullopt;
}

std::optional<Decomposition> decompose_step(const Graph& g, const DecomposePolicy& policy) {
    if (g.n() <= 1 || is_complete(g)) return std::nullopt;  // cliques are terminal
    const VertexSet all = g.vertices();
    for (DecompKind kind : policy.rules) {
        Decomposition d;
        d.kind = kind;
        switch (kind) {
            case DecompKind::Component: {
                auto comps = components(g);
                if (comps.size() < 2) break;
                d.A = comps[0];
                for (size_t i = 1; i < comps.size(); ++i) d.B = vs_union(d.B, comps[i]);
                d.g1 = d.A;
                d.g2 = d.B;
                return d;
            }
            case DecompKind::Anticomponent: {
                auto comps = anticomponents(g);
                if (comps.size() < 2) break;
                d.A = comps[0];
                for (size_t i = 1; i < comps.size(); ++i) d.B = vs_union(d.B, comps[i]);
                d.g1 = d.A;
                d.g2 = d.B;
                return d;
            }
            case DecompKind::Module: {
                auto m = find_nontrivial_module(g);
                if (!m) break;
                d.M = *m;
                d.m = d.M.front();
                d.g1 = d.M;
                d.g2 = vs_union({d.m}, vs_minus(all, d.M));
                return d;
            }
            case DecompKind::Cutset:
            case DecompKind::CliqueCutset: {
                if (!is_connected(g)) break;
                auto cut = find_clique_cutset(g);
                if (!cut) break;
                std::tie(d.A, d.C, d.B) = *cut;
                d.kind = DecompKind::CliqueCutset;
                d.g1 = vs_union(d.A, d.C);
                d.g2 = vs_union(d.B, d.C);
                return d;
            }
            case DecompKind::Antineighborhood: {
                if (!policy.leaf_test) break;
                auto v = find_antineighborhood_vertex(g, policy.leaf_test);
                if (!v) break;
                d.v = *v;
                d.g1 = vs_minus(all, {d.v});
                d.g2 = g.anti_neighborhood(d.v);
                return d;
            }
            case DecompKind::Neighborhood: {
                if (!policy.leaf_test) break;
                std::optional<int> v;
                for (int u = 0; u < g.n(); ++u) {
                    VertexSet nb = g.neighborhood(u);
                    if (nb.empty()) continue;  // isolated u: blocks must be non-empty
                    if (policy.leaf_test(induced_subgraph(g, nb).local)) {
                        v = u;
                        break;
                    }
                }
                if (!v) break;
                d.v = *v;
                d.g1 = vs_minus(all, {d.v});
                d.g2 = g.neighborhood(d.v);
                return d;
            }
            case DecompKind::Amalgam: {
                auto split = find_amalgam(g);
                if (!split) break;
                d.split = *split;
                d.a1 = d.split.A1.front();
                d.a2 = d.split.A2.front();
                d.g1 = vs_union(vs_union(d.split.B1, d.split.A1), vs_union(d.split.C, {d.a2}));
                d.g2 = vs_union(vs_union({d.a1}, d.split.C), vs_union(d.split.A2, d.split.B2));
                return d;
            }
        }
    }
    return std::nullopt;
}

}  // namespace csep
