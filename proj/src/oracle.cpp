#include "csep/oracle.hpp"

#include <algorithm>
#include <ostream>

#include "csep/errors.hpp"
#include "csep/rng.hpp"

namespace csep {

namespace {

void bron_kerbosch(const Graph& g, Bits r, Bits p, Bits x, std::size_t cap,
                   std::vector<VertexSet>& out) {
    if (p.none() && x.none()) {
        if (out.size() >= cap) throw EnumerationOverflow("maximal clique cap exceeded");
        out.push_back(to_set(r));
        return;
    }
    // pivot: vertex of P u X with most neighbors in P
    int pivot = -1, best = -1;
    Bits px = p;
    px |= x;
    px.for_each([&](int u) {
        Bits t = g.row(u);
        t &= p;
        int c = t.count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    Bits cand = p;
    if (pivot >= 0) cand.andnot(g.row(pivot));
    cand.for_each([&](int v) {
        Bits r2 = r;
        r2.set(v);
        Bits p2 = p, x2 = x;
        p2 &= g.row(v);
        x2 &= g.row(v);
        bron_kerbosch(g, r2, p2, x2, cap, out);
        p.reset(v);
        x.set(v);
    });
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t cap) {
    std::vector<VertexSet> out;
    Bits r(g.n()), p(g.n()), x(g.n());
    p.set_all();
    bron_kerbosch(g, r, p, x, cap, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> maximal_stable_sets(const Graph& g, std::size_t cap) {
    return maximal_cliques(complement(g), cap);
}

namespace {

struct CutBits {
    std::vector<Bits> w;
    explicit CutBits(const CutFamily& f) {
        w.reserve(f.cuts.size());
        for (const VertexSet& c : f.cuts) w.push_back(to_bits(f.host_n, c));
    }
    bool separates(const Bits& k, const Bits& s) const {
        for (const Bits& cut : w)
            if (k.subset_of(cut) && !s.intersects(cut)) return true;
        return false;
    }
};

// Runs the reduced checks on one maximal pair; fills `bad` with the first
// failing reduced pair if any.
bool check_pair(const Graph& g, const CutBits& cb, const VertexSet& k, const VertexSet& s,
                SeparationWitness& bad) {
    VertexSet inter = vs_intersect(k, s);
    if (inter.size() >= 2) return true;  // impossible for clique x stable, skip
    Bits kb = to_bits(g.n(), k), sb = to_bits(g.n(), s);
    if (inter.empty()) {
        if (cb.separates(kb, sb)) return true;
        bad = {k, s};
        return false;
    }
    int v = inter[0];
    Bits kv = kb;
    kv.reset(v);
    if (!cb.separates(kv, sb)) {
        bad = {vs_minus(k, {v}), s};
        return false;
    }
    Bits sv = sb;
    sv.reset(v);
    if (!cb.separates(kb, sv)) {
        bad = {k, vs_minus(s, {v})};
        return false;
    }
    return true;
}

}  // namespace

std::optional<SeparationWitness> verify_separator(const Graph& g, const CutFamily& f,
                                                  std::size_t cap) {
    if (f.host_n != g.n()) throw InputError("verify: family/graph size mismatch");
    auto cliques = maximal_cliques(g, cap);
    auto stables = maximal_stable_sets(g, cap);
    CutBits cb(f);
    SeparationWitness bad;
    for (const VertexSet& k : cliques)
        for (const VertexSet& s : stables)
            if (!check_pair(g, cb, k, s, bad)) return bad;
    return std::nullopt;
}

std::optional<SeparationWitness> verify_separator_exhaustive(const Graph& g,
                                                             const CutFamily& f) {
    if (g.n() > 15) throw GuardError("exhaustive verify: n > 15");
    if (f.host_n != g.n()) throw InputError("verify: family/graph size mismatch");
    int n = g.n();
    std::vector<Bits> cliques, stables;
    std::vector<VertexSet> csets, ssets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        VertexSet s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i);
        if (is_clique(g, s)) {
            cliques.push_back(to_bits(n, s));
            csets.push_back(s);
        }
        if (is_stable(g, s)) {
            stables.push_back(to_bits(n, s));
            ssets.push_back(s);
        }
    }
    CutBits cb(f);
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = 0; j < stables.size(); ++j) {
            if (cliques[i].intersects(stables[j])) continue;
            if (!cb.separates(cliques[i], stables[j])) return SeparationWitness{csets[i], ssets[j]};
        }
    return std::nullopt;
}

std::optional<SeparationWitness> verify_separator_sampled(const Graph& g, const CutFamily& f,
                                                          std::size_t samples,
                                                          std::uint64_t seed, std::size_t cap) {
    if (f.host_n != g.n()) throw InputError("verify: family/graph size mismatch");
    auto cliques = maximal_cliques(g, cap);
    auto stables = maximal_stable_sets(g, cap);
    if (cliques.empty() || stables.empty()) return std::nullopt;
    CutBits cb(f);
    Rng rng(seed);
    SeparationWitness bad;
    for (std::size_t t = 0; t < samples; ++t) {
        const VertexSet& k = cliques[rng.below(cliques.size())];
        const VertexSet& s = stables[rng.below(stables.size())];
        if (!check_pair(g, cb, k, s, bad)) return bad;
    }
    return std::nullopt;
}

bool confirm_witness(const Graph& g, const CutFamily& f, const SeparationWitness& w) {
    if (!is_clique(g, w.clique) || !is_stable(g, w.stable)) return false;
    if (!vs_intersect(w.clique, w.stable).empty()) return false;
    CutBits cb(f);
    return !cb.separates(to_bits(g.n(), w.clique), to_bits(g.n(), w.stable));
}

void write_witness(std::ostream& out, const SeparationWitness& w) {
    out << 'K';
    for (int v : w.clique) out << ' ' << v + 1;
    out << "\nS";
    for (int v : w.stable) out << ' ' << v + 1;
    out << '\n';
}

}  // namespace csep
