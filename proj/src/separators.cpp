#include "csep/separators.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "csep/errors.hpp"
#include "csep/oracle.hpp"

namespace csep {

bool CutFamily::contains(const VertexSet& clique_side) const {
    return std::binary_search(cuts.begin(), cuts.end(), clique_side);
}

VertexSet stable_side(const CutFamily& f, const VertexSet& clique_side) {
    VertexSet all(f.host_n);
    for (int i = 0; i < f.host_n; ++i) all[i] = i;
    return vs_minus(all, clique_side);
}

FamilyBuilder::FamilyBuilder(int host_n, std::string provenance)
    : n_(host_n), prov_(std::move(provenance)) {}

void FamilyBuilder::add(VertexSet clique_side) {
    acc_.push_back(vs_canon(std::move(clique_side)));
}

void FamilyBuilder::add_trivials() {
    VertexSet all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    acc_.push_back({});
    acc_.push_back(std::move(all));
}

CutFamily FamilyBuilder::finish() {
    CutFamily f;
    f.host_n = n_;
    f.provenance = std::move(prov_);
    f.raw_inserted = acc_.size();
    std::sort(acc_.begin(), acc_.end());
    acc_.erase(std::unique(acc_.begin(), acc_.end()), acc_.end());
    f.cuts = std::move(acc_);
    return f;
}

CutFamily lift_cuts(const CutFamily& child, const InducedView& view, int host_n) {
    FamilyBuilder b(host_n, child.provenance);
    for (const VertexSet& w : child.cuts) {
        VertexSet h;
        h.reserve(w.size());
        for (int x : w) h.push_back(view.to_host(x));
        b.add(std::move(h));
    }
    CutFamily f = b.finish();
    f.raw_inserted = child.raw_inserted;
    return f;
}

CutFamily ensure_trivials(const CutFamily& f) {
    FamilyBuilder b(f.host_n, f.provenance);
    for (const VertexSet& w : f.cuts) b.add(w);
    b.add_trivials();
    CutFamily out = b.finish();
    out.raw_inserted = f.raw_inserted + (out.cuts.size() - f.cuts.size());
    return out;
}

CutFamily all_cuts_fallback(const Graph& g) {
    if (g.n() > 20) throw GuardError("all_cuts_fallback: n > 20");
    int n = g.n();
    FamilyBuilder b(n, "all-cuts");
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        VertexSet w;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) w.push_back(i);
        b.add(std::move(w));
    }
    return b.finish();
}

CutFamily maxclique_separator(const Graph& g) {
    FamilyBuilder b(g.n(), "maxclique");
    b.add_trivials();
    for (const VertexSet& k : maximal_cliques(g)) {
        b.add(k);
        for (int v : k) b.add(vs_minus(k, {v}));
    }
    return b.finish();
}

namespace {

// All stable subsets of cand (a Bits set) up to size max_size; calls sink for
// each, including the empty set.
template <typename Sink>
void stable_subsets(const Graph& g, const Bits& cand, int max_size, Sink&& sink) {
    VertexSet cur;
    std::vector<int> pool = to_set(cand);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        sink(cur);
        if (int(cur.size()) == max_size) return;
        for (std::size_t j = i; j < pool.size(); ++j) {
            int x = pool[j];
            bool ok = true;
            for (int y : cur)
                if (g.adjacent(x, y)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(x);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

CutFamily bounded_alpha_neighborhood_separator(const Graph& g, int k) {
    if (k < 0) throw InputError("bounded_alpha: k must be non-negative");
    // precondition: no neighborhood has a stable set of size k+1
    for (int v = 0; v < g.n(); ++v) {
        bool bad = false;
        stable_subsets(g, g.row(v), k + 1, [&](const VertexSet& t) {
            if (int(t.size()) == k + 1) bad = true;
        });
        if (bad) {
            ClassError e("bounded_alpha: neighborhood of vertex " + std::to_string(v + 1) +
                         " has a stable set of size " + std::to_string(k + 1));
            e.witness = "vertex " + std::to_string(v + 1);
            throw e;
        }
    }
    FamilyBuilder b(g.n(), "bounded-alpha");
    b.add_trivials();
    for (int v = 0; v < g.n(); ++v) {
        VertexSet closed = g.closed_neighborhood(v);
        stable_subsets(g, g.row(v), k,
                       [&](const VertexSet& t) { b.add(vs_minus(closed, t)); });
    }
    return b.finish();
}

CutFamily complement_separator(const CutFamily& f) {
    FamilyBuilder b(f.host_n, f.provenance + "-complement");
    for (const VertexSet& w : f.cuts) b.add(stable_side(f, w));
    return b.finish();
}

namespace {

template <typename Map1, typename Map2>
CutFamily combine_map(int host_n, const char* prov, const CutFamily& f1, const CutFamily& f2,
                      Map1&& map1, Map2&& map2) {
    FamilyBuilder b(host_n, prov);
    for (const VertexSet& w : f1.cuts) b.add(map1(w));
    for (const VertexSet& w : f2.cuts) b.add(map2(w));
    return b.finish();
}

int host_n_of(const CutFamily& f1, const CutFamily& f2) {
    if (f1.host_n != f2.host_n)
        throw InputError("combine: child families disagree on host size");
    return f1.host_n;
}

}  // namespace

CutFamily combine_cutset(const CutFamily& f1, const CutFamily& f2, const VertexSet&,
                         const VertexSet&, const VertexSet&) {
    return combine_map(
        host_n_of(f1, f2), "combine-cutset", f1, f2, [](const VertexSet& w) { return w; },
        [](const VertexSet& w) { return w; });
}

CutFamily combine_component(const CutFamily& f1, const CutFamily& f2, const VertexSet& A,
                            const VertexSet& B) {
    CutFamily f = combine_cutset(f1, f2, A, {}, B);
    f.provenance = "combine-component";
    return f;
}

CutFamily combine_anticomponent(const CutFamily& f1, const CutFamily& f2, const VertexSet& A,
                                const VertexSet& B) {
    return combine_map(
        host_n_of(f1, f2), "combine-anticomponent", f1, f2,
        [&](const VertexSet& w) { return vs_union(w, B); },
        [&](const VertexSet& w) { return vs_union(w, A); });
}

CutFamily combine_anticomponent_complement_route(const CutFamily& f1, const CutFamily& f2,
                                                 const VertexSet& A, const VertexSet& B) {
    // swap cuts of each child, combine as components, swap back
    VertexSet host = vs_union(A, B);
    return combine_map(
        host_n_of(f1, f2), "combine-anticomponent", f1, f2,
        [&](const VertexSet& w) { return vs_minus(host, vs_minus(A, w)); },
        [&](const VertexSet& w) { return vs_minus(host, vs_minus(B, w)); });
}

CutFamily combine_module(const CutFamily& f1, const CutFamily& f2, const VertexSet& M, int m,
                         const VertexSet& A, const VertexSet&) {
    return combine_map(
        host_n_of(f1, f2), "combine-module", f1, f2,
        [&](const VertexSet& w) { return vs_union(w, A); },
        [&](const VertexSet& w) {
            return vs_contains(w, m) ? vs_union(w, M) : w;
        });
}

CutFamily combine_neighborhood(const CutFamily& f1, const CutFamily& f2, int v,
                               const VertexSet&) {
    return combine_map(
        host_n_of(f1, f2), "combine-neighborhood", f1, f2,
        [](const VertexSet& w) { return w; },
        [&](const VertexSet& w) { return vs_union(w, {v}); });
}

CutFamily combine_antineighborhood(const CutFamily& f1, const CutFamily& f2, int v,
                                   const VertexSet& Nv) {
    return combine_map(
        host_n_of(f1, f2), "combine-antineighborhood", f1, f2,
        [&](const VertexSet& w) { return vs_union(w, {v}); },
        [&](const VertexSet& w) { return vs_union(w, Nv); });
}

CutFamily combine_antineighborhood_complement_route(const CutFamily& f1, const CutFamily& f2,
                                                    int v, const VertexSet& Nv,
                                                    const VertexSet& host_vertices) {
    // In the complement this is a neighborhood decomposition at v; swap,
    // apply the neighborhood rule, swap back.
    VertexSet block1 = vs_minus(host_vertices, {v});
    VertexSet block2 = vs_minus(block1, Nv);
    return combine_map(
        host_n_of(f1, f2), "combine-antineighborhood", f1, f2,
        [&](const VertexSet& w) { return vs_minus(host_vertices, vs_minus(block1, w)); },
        [&](const VertexSet& w) {
            return vs_minus(host_vertices, vs_union(vs_minus(block2, w), {v}));
        });
}

CutFamily combine_amalgam(const CutFamily& f1, const CutFamily& f2, const AmalgamSplit& split,
                          int a1, int a2) {
    return combine_map(
        host_n_of(f1, f2), "combine-amalgam", f1, f2,
        [&](const VertexSet& w) {
            return vs_contains(w, a2) ? vs_union(w, split.A2) : w;
        },
        [&](const VertexSet& w) {
            return vs_contains(w, a1) ? vs_union(w, split.A1) : w;
        });
}

CutFamily combine(const Graph& g, const VertexSet& phi, const Decomposition& d,
                  const CutFamily& f1, const CutFamily& f2) {
    switch (d.kind) {
        case DecompKind::Component:
            return combine_component(f1, f2, d.A, d.B);
        case DecompKind::Anticomponent:
            return combine_anticomponent(f1, f2, d.A, d.B);
        case DecompKind::Cutset:
        case DecompKind::CliqueCutset:
            return combine_cutset(f1, f2, d.A, d.C, d.B);
        case DecompKind::Module: {
            VertexSet outside = vs_minus(phi, d.M);
            VertexSet A, B;
            int any = d.M.front();
            for (int w : outside) (g.adjacent(w, any) ? A : B).push_back(w);
            return combine_module(f1, f2, d.M, d.m, A, B);
        }
        case DecompKind::Neighborhood:
            return combine_neighborhood(f1, f2, d.v,
                                        vs_minus(vs_minus(phi, g.neighborhood(d.v)), {d.v}));
        case DecompKind::Antineighborhood:
            return combine_antineighborhood(f1, f2, d.v,
                                            vs_intersect(phi, g.neighborhood(d.v)));
        case DecompKind::Amalgam:
            return combine_amalgam(f1, f2, d.split, d.a1, d.a2);
    }
    throw InputError("combine: unknown decomposition kind");
}

CutFamily degeneracy_separator(const Graph& g, const std::vector<int>& ordering,
                               const LeafSolver& leaf_solver) {
    int n = g.n();
    {
        std::vector<char> seen(n, 0);
        if (int(ordering.size()) != n) throw InputError("degeneracy: bad ordering size");
        for (int v : ordering) {
            if (v < 0 || v >= n || seen[v]) throw InputError("degeneracy: not a permutation");
            seen[v] = 1;
        }
    }
    if (n == 0) {
        CutFamily f = leaf_solver(g);
        f.provenance = "degeneracy";
        return f;
    }
    // suffix graphs processed back to front; cuts kept in host ids throughout
    Bits suffix(n);
    suffix.set(ordering.back());
    InducedView last = induced_subgraph(g, {ordering.back()});
    CutFamily fam = lift_cuts(leaf_solver(last.local), last, n);
    for (int i = n - 2; i >= 0; --i) {
        int v = ordering[i];
        Bits fwd = g.row(v);
        fwd &= suffix;
        InducedView nb = induced_subgraph(g, to_set(fwd));
        CutFamily f2 = lift_cuts(leaf_solver(nb.local), nb, n);
        Bits anti = suffix;
        anti.andnot(fwd);
        fam = combine_neighborhood(fam, f2, v, to_set(anti));
        suffix.set(v);
    }
    fam.provenance = "degeneracy";
    return fam;
}

CutFamily distance_expansion(const CutFamily& f_prime, const VertexSet& D, int host_n) {
    if (D.size() > 30) throw GuardError("distance_expansion: |D| > 30");
    FamilyBuilder b(host_n, "distance-expansion");
    for (const VertexSet& w : f_prime.cuts) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << D.size()); ++mask) {
            VertexSet x;
            for (std::size_t i = 0; i < D.size(); ++i)
                if (mask >> i & 1) x.push_back(D[i]);
            b.add(vs_union(w, x));
        }
    }
    return b.finish();
}

void write_cut_family(std::ostream& out, const CutFamily& f) {
    std::string prov = f.provenance.empty() ? "unknown" : f.provenance;
    for (char& c : prov)
        if (c == ' ' || c == '\t') c = '-';
    out << "s " << f.host_n << ' ' << f.cuts.size() << ' ' << prov << '\n';
    std::vector<std::string> lines;
    lines.reserve(f.cuts.size());
    for (const VertexSet& w : f.cuts) {
        std::string line = "c";
        for (int v : w) line += ' ' + std::to_string(v + 1);
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    for (const std::string& l : lines) out << l << '\n';
}

CutFamily read_cut_family(std::istream& in) {
    std::string line;
    int n = -1;
    long count = -1;
    std::string prov;
    long seen = 0;
    FamilyBuilder* builder = nullptr;
    std::optional<FamilyBuilder> b;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 's') {
            if (n >= 0) throw InputError("cut file: duplicate header");
            if (!(ls >> n >> count >> prov) || n < 0 || count < 0)
                throw InputError("cut file: bad header: " + line);
            b.emplace(n, prov);
            builder = &*b;
        } else if (tag == 'c') {
            if (!builder) throw InputError("cut file: cut before header");
            VertexSet w;
            int id;
            while (ls >> id) {
                if (id < 1 || id > n) throw InputError("cut file: id out of range: " + line);
                w.push_back(id - 1);
            }
            builder->add(std::move(w));
            ++seen;
        } else {
            throw InputError("cut file: unrecognized line: " + line);
        }
    }
    if (!builder) throw InputError("cut file: missing header");
    CutFamily f = builder->finish();
    if (seen != count || long(f.cuts.size()) != count)
        throw InputError("cut file: count mismatch");
    return f;
}

void write_cut_family_file(const std::string& path, const CutFamily& f) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path);
    write_cut_family(out, f);
}

CutFamily read_cut_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_cut_family(in);
}

}  // namespace csep
