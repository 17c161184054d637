#include "csep/pipelines.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "csep/errors.hpp"
#include "csep/oracle.hpp"
#include "csep/recognition.hpp"
#include "json.hpp"

namespace csep {

int DecompositionTree::internal_count() const {
    int c = 0;
    for (const TreeNode& t : nodes) c += !t.is_leaf();
    return c;
}

int DecompositionTree::leaf_count() const {
    int c = 0;
    for (const TreeNode& t : nodes) c += t.is_leaf();
    return c;
}

namespace {

std::string ids_1based(const VertexSet& s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v + 1);
    }
    return out;
}

VertexSet map_set(const VertexSet& s, const InducedView& view) {
    VertexSet h;
    h.reserve(s.size());
    for (int x : s) h.push_back(view.to_host(x));
    return vs_canon(h);
}

Decomposition to_host_ids(const Decomposition& d, const InducedView& view) {
    Decomposition h;
    h.kind = d.kind;
    h.A = map_set(d.A, view);
    h.C = map_set(d.C, view);
    h.B = map_set(d.B, view);
    h.M = map_set(d.M, view);
    h.m = d.m >= 0 ? view.to_host(d.m) : -1;
    h.v = d.v >= 0 ? view.to_host(d.v) : -1;
    h.split.B1 = map_set(d.split.B1, view);
    h.split.A1 = map_set(d.split.A1, view);
    h.split.C = map_set(d.split.C, view);
    h.split.A2 = map_set(d.split.A2, view);
    h.split.B2 = map_set(d.split.B2, view);
    h.a1 = d.a1 >= 0 ? view.to_host(d.a1) : -1;
    h.a2 = d.a2 >= 0 ? view.to_host(d.a2) : -1;
    h.g1 = map_set(d.g1, view);
    h.g2 = map_set(d.g2, view);
    return h;
}

// smallest non-edge inside s, by (u, v) lexicographic order
std::optional<std::pair<int, int>> smallest_nonedge(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return std::make_pair(s[i], s[j]);
    return std::nullopt;
}

// Trio labels per the proofs' rules, "any vertex" resolved as smallest id.
VertexSet label_for(const Graph& g, const VertexSet& phi, const Decomposition& d) {
    switch (d.kind) {
        case DecompKind::Component:
        case DecompKind::Cutset:
        case DecompKind::CliqueCutset:
            return vs_canon({d.A.front(), d.B.front()});
        case DecompKind::Anticomponent: {
            if (auto uv = smallest_nonedge(g, d.A))
                return vs_canon({uv->first, uv->second, d.B.front()});
            if (auto uv = smallest_nonedge(g, d.B))
                return vs_canon({uv->first, uv->second, d.A.front()});
            throw ClassError("label: anticomponent node induces a clique");
        }
        case DecompKind::Module: {
            // x must sit outside the module, else the trio survives in it
            int u = d.M[0], v = d.M[1];
            for (int x : vs_minus(phi, d.M))
                if (!g.adjacent(x, u) && !g.adjacent(x, v)) return vs_canon({u, v, x});
            throw ClassError("label: module vertices have no outside common non-neighbor");
        }
        case DecompKind::Neighborhood:
        case DecompKind::Antineighborhood: {
            for (int w : phi)
                if (w != d.v && !g.adjacent(w, d.v)) return vs_canon({d.v, w});
            throw ClassError("label: decomposition vertex is universal");
        }
        case DecompKind::Amalgam: {
            const AmalgamSplit& s = d.split;
            if (!s.B1.empty()) {
                VertexSet other = vs_union(s.A2, s.B2);
                return vs_canon({s.B1.front(), other[0], other[1]});
            }
            if (!s.B2.empty()) {
                VertexSet other = vs_union(s.A1, s.B1);
                return vs_canon({s.B2.front(), other[0], other[1]});
            }
            throw ClassError("label: amalgam with empty B sides");
        }
    }
    throw InputError("label: unknown decomposition kind");
}

// returns (tag, family in local ids) when the subgraph is a leaf
using LeafClassifier =
    std::function<std::optional<std::pair<std::string, CutFamily>>(const Graph&)>;

struct TreeBuilder {
    const Graph& g;
    DecomposePolicy policy;
    LeafClassifier leaf;
    std::string class_name;

    DecompositionTree tree;
    std::map<int, CutFamily> leaf_families;
    std::size_t leaf_sum = 0;

    int build(const VertexSet& phi) {
        int id = int(tree.nodes.size());
        tree.nodes.emplace_back();
        tree.nodes[id].id = id;
        tree.nodes[id].phi = phi;
        InducedView view = induced_subgraph(g, phi);
        if (auto lf = leaf(view.local)) {
            tree.nodes[id].rule = "leaf-" + lf->first;
            CutFamily fam = lift_cuts(lf->second, view, g.n());
            leaf_sum += fam.size();
            leaf_families.emplace(id, std::move(fam));
            return id;
        }
        auto dl = decompose_step(view.local, policy);
        if (!dl) {
            ClassError e(class_name + ": undecomposable non-leaf atom on vertices " +
                         ids_1based(phi));
            e.witness = "atom " + ids_1based(phi);
            throw e;
        }
        Decomposition d = to_host_ids(*dl, view);
        tree.nodes[id].rule = decomp_kind_name(d.kind);
        tree.nodes[id].label = label_for(g, phi, d);
        tree.nodes[id].decomp = d;
        int c1 = build(d.g1);
        int c2 = build(d.g2);
        tree.nodes[id].child1 = c1;
        tree.nodes[id].child2 = c2;
        return id;
    }
};

DecompositionTree single_leaf_tree(const Graph& g, const std::string& tag) {
    DecompositionTree t;
    TreeNode n;
    n.id = 0;
    n.phi = g.vertices();
    n.rule = "leaf-" + tag;
    t.nodes.push_back(std::move(n));
    return t;
}

PipelineReport make_report(const DecompositionTree& tree, const Graph& g,
                           const CutFamily& fam, std::size_t leaf_sum,
                           const std::string& branch) {
    PipelineReport r;
    r.sep_size = fam.size();
    r.leaf_size_sum = leaf_sum;
    r.internal_nodes = tree.internal_count();
    r.leaves = tree.leaf_count();
    for (const TreeNode& t : tree.nodes) ++r.rule_counts[t.rule];
    r.labels_injective = label_audit(tree, g).ok();
    r.branch = branch;
    return r;
}

}  // namespace

LabelAudit label_audit(const DecompositionTree& tree, const Graph& g) {
    LabelAudit a;
    std::vector<VertexSet> labels;
    for (const TreeNode& t : tree.nodes) {
        if (t.is_leaf()) continue;
        if (t.label.size() < 2 || t.label.size() > 3 || !smallest_nonedge(g, t.label)) {
            a.labels_valid = false;
            a.detail += "node " + std::to_string(t.id) + ": label is not a trio\n";
        }
        const TreeNode& s1 = tree.nodes[t.child1];
        const TreeNode& s2 = tree.nodes[t.child2];
        if (vs_intersect(t.label, s1.phi) == t.label ||
            vs_intersect(t.label, s2.phi) == t.label) {
            a.breaks_children = false;
            a.detail += "node " + std::to_string(t.id) + ": label survives in a child\n";
        }
        if (!s1.is_leaf() && !s2.is_leaf()) {
            VertexSet inter = vs_intersect(s1.phi, s2.phi);
            if (!is_clique(g, inter)) {
                a.no_shared_trio = false;
                a.detail += "node " + std::to_string(t.id) + ": children share a trio\n";
            }
        }
        labels.push_back(t.label);
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        a.injective = false;
        a.detail += "duplicate labels\n";
    }
    long long n = g.n();
    if (static_cast<long long>(labels.size()) > n * n * n) {
        a.size_bound = false;
        a.detail += "internal node count exceeds n^3\n";
    }
    return a;
}

CutFamily assemble(const Graph& g, const DecompositionTree& tree,
                   const std::map<int, CutFamily>& leaf_families) {
    std::function<CutFamily(int)> rec = [&](int id) -> CutFamily {
        const TreeNode& t = tree.nodes[id];
        if (t.is_leaf()) {
            auto it = leaf_families.find(id);
            if (it == leaf_families.end())
                throw InputError("assemble: missing family for leaf " + std::to_string(id));
            return it->second;
        }
        if (!t.decomp) throw InputError("assemble: internal node without decomposition");
        return combine(g, t.phi, *t.decomp, rec(t.child1), rec(t.child2));
    };
    if (tree.nodes.empty()) throw InputError("assemble: empty tree");
    return rec(0);
}

EngineResult engine_nearly(const Graph& g, const LeafTest& leaf_test,
                           const LeafSolver& leaf_solver, const std::string& leaf_tag) {
    TreeBuilder b{
        g,
        DecomposePolicy{{DecompKind::Component, DecompKind::Anticomponent, DecompKind::Module,
                         DecompKind::CliqueCutset, DecompKind::Antineighborhood},
                        leaf_test},
        [&](const Graph& local) -> std::optional<std::pair<std::string, CutFamily>> {
            if (leaf_test(local)) return std::make_pair(leaf_tag, leaf_solver(local));
            if (is_complete(local)) return std::make_pair("clique", maxclique_separator(local));
            return std::nullopt;
        },
        "nearly-" + leaf_tag};
    b.build(g.vertices());
    EngineResult r;
    r.tree = std::move(b.tree);
    r.family = assemble(g, r.tree, b.leaf_families);
    r.leaf_size_sum = b.leaf_sum;
    return r;
}

namespace {

ClassError apple_error(const StemHoleWitness& w) {
    ClassError e("input is not apple-free: stem " + std::to_string(w.stem + 1) +
                 " on hole " + ids_1based(w.hole.cycle));
    e.witness = "stem " + std::to_string(w.stem + 1) + "\nhole " + ids_1based(w.hole.cycle);
    return e;
}

ClassError hole_error(const char* what, const HoleWitness& w) {
    ClassError e(std::string(what) + ": hole " + ids_1based(w.cycle));
    e.witness = "hole " + ids_1based(w.cycle);
    return e;
}

bool d6_e6_free(const Graph& h) {
    return !contains_fixed_induced(h, Pattern::D6) && !contains_fixed_induced(h, Pattern::E6);
}

bool c5_free(const Graph& h) { return !contains_fixed_induced(h, Pattern::C5); }

CutFamily chordal_engine(const Graph& h) {
    return engine_nearly(
               h, [](const Graph& k) { return is_chordal(k).chordal; },
               [](const Graph& k) { return maxclique_separator(k); }, "chordal")
        .family;
}

CutFamily c5_engine(const Graph& h) {
    return engine_nearly(h, c5_free, chordal_engine, "c5-free").family;
}

// checks are only affordable at small n; heredity covers the rest
constexpr int kSpotCheckMaxN = 18;

}  // namespace

PipelineResult applefree_separator(const Graph& g, bool verify_assumptions) {
    auto t0 = std::chrono::steady_clock::now();
    if (verify_assumptions)
        if (auto w = is_apple_free(g)) throw apple_error(*w);
    PipelineResult r;
    if (is_claw_free(g)) {
        r.family = ensure_trivials(bounded_alpha_neighborhood_separator(g, 2));
        r.tree = single_leaf_tree(g, "claw-free");
        r.report = make_report(r.tree, g, r.family, r.family.size(), "claw-free");
    } else {
        if (verify_assumptions && g.n() <= kSpotCheckMaxN)
            if (auto h = has_long_hole(g, 7))
                throw hole_error("not claw-free yet has a hole of length >= 7", *h);
        LeafSolver l3 = [&](const Graph& h) -> CutFamily {
            if (is_claw_free(h)) return bounded_alpha_neighborhood_separator(h, 2);
            if (verify_assumptions)
                if (auto w = contains_fixed_induced(h, Pattern::C6)) {
                    ClassError e("leaf is neither claw-free nor C6-free");
                    e.witness = "pattern C6 " + ids_1based(vs_canon(w->embedding));
                    throw e;
                }
            return c5_engine(h);
        };
        EngineResult er = engine_nearly(g, d6_e6_free, l3, "d6-e6-free");
        r.family = ensure_trivials(er.family);
        r.tree = std::move(er.tree);
        r.report = make_report(r.tree, g, r.family, er.leaf_size_sum, "layered");
    }
    r.report.build_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return r;
}

PipelineResult capfree_separator(const Graph& g, bool verify_assumptions) {
    auto t0 = std::chrono::steady_clock::now();
    if (verify_assumptions)
        if (auto w = is_cap_free(g)) {
            ClassError e("input is not cap-free: stem " + std::to_string(w->stem + 1) +
                         " on hole " + ids_1based(w->hole.cycle));
            e.witness =
                "stem " + std::to_string(w->stem + 1) + "\nhole " + ids_1based(w->hole.cycle);
            throw e;
        }
    TreeBuilder b{
        g,
        DecomposePolicy{
            {DecompKind::Component, DecompKind::Anticomponent, DecompKind::Amalgam}, {}},
        [&](const Graph& local) -> std::optional<std::pair<std::string, CutFamily>> {
            auto tag = is_basic_cap_free(local);
            if (!tag) return std::nullopt;
            const char* name =
                *tag == BasicCapFreeTag::Chordal ? "chordal" : "almost-triangle-free";
            return std::make_pair(std::string(name), maxclique_separator(local));
        },
        "cap-free"};
    try {
        b.build(g.vertices());
    } catch (const ClassError& orig) {
        // an undecomposable non-basic piece means the input was not cap-free
        if (auto w = is_cap_free(g)) {
            ClassError e("input is not cap-free: stem " + std::to_string(w->stem + 1) +
                         " on hole " + ids_1based(w->hole.cycle) + " (" + orig.what() + ")");
            e.witness =
                "stem " + std::to_string(w->stem + 1) + "\nhole " + ids_1based(w->hole.cycle);
            throw e;
        }
        throw;
    }
    PipelineResult r;
    r.tree = std::move(b.tree);
    r.family = ensure_trivials(assemble(g, r.tree, b.leaf_families));
    r.report = make_report(r.tree, g, r.family, b.leaf_sum, "cap-free");
    r.report.build_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return r;
}

void write_tree_json(std::ostream& out, const DecompositionTree& tree) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const TreeNode& t : tree.nodes) {
        nlohmann::ordered_json node;
        node["id"] = t.id;
        node["rule"] = t.rule;
        nlohmann::ordered_json phi = nlohmann::ordered_json::array();
        for (int v : t.phi) phi.push_back(v + 1);
        node["phi"] = std::move(phi);
        nlohmann::ordered_json label = nlohmann::ordered_json::array();
        for (int v : t.label) label.push_back(v + 1);
        node["label"] = std::move(label);
        nlohmann::ordered_json children = nlohmann::ordered_json::array();
        if (!t.is_leaf()) {
            children.push_back(t.child1);
            children.push_back(t.child2);
        }
        node["children"] = std::move(children);
        doc.push_back(std::move(node));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace csep
