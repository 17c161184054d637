#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csep/decompose.hpp"
#include "csep/graph.hpp"
#include "csep/separators.hpp"

namespace csep {

// Nodes are stored in preorder, root at index 0. Leaves carry a tag and the
// solver family index; internal nodes carry the decomposition (host ids) and
// a trio label.
struct TreeNode {
    int id = 0;
    VertexSet phi;  // host ids
    std::string rule;  // decomposition kind name, or "leaf-<tag>"
    VertexSet label;   // trio; empty on leaves
    int child1 = -1, child2 = -1;
    std::optional<Decomposition> decomp;

    bool is_leaf() const { return child1 < 0; }
};

struct DecompositionTree {
    std::vector<TreeNode> nodes;

    int internal_count() const;
    int leaf_count() const;
};

struct LabelAudit {
    bool labels_valid = true;     // trios: size <= 3 with a non-edge
    bool breaks_children = true;  // label not inside either child's phi
    bool no_shared_trio = true;   // phi(s) ^ phi(s') clique unless a leaf child
    bool injective = true;
    bool size_bound = true;  // internal nodes <= n^3
    std::string detail;

    bool ok() const {
        return labels_valid && breaks_children && no_shared_trio && injective && size_bound;
    }
};

LabelAudit label_audit(const DecompositionTree& tree, const Graph& g);

struct PipelineReport {
    std::size_t sep_size = 0;
    std::size_t leaf_size_sum = 0;
    int internal_nodes = 0;
    int leaves = 0;
    std::map<std::string, int> rule_counts;
    bool labels_injective = true;
    std::string branch;  // which dispatch path was taken
    double build_ms = 0.0;
};

struct PipelineResult {
    DecompositionTree tree;
    CutFamily family;
    PipelineReport report;
};

struct EngineResult {
    DecompositionTree tree;
    CutFamily family;
    std::size_t leaf_size_sum = 0;
};

// Recursive engine: rule order component, anticomponent, module,
// clique-cutset, antineighborhood; leaves are leaf_test members (solved by
// leaf_solver) or cliques (solved by maxclique_separator). Throws ClassError
// when a prime atom is neither a leaf nor nearly in the leaf class.
EngineResult engine_nearly(const Graph& g, const LeafTest& leaf_test,
                           const LeafSolver& leaf_solver, const std::string& leaf_tag);

// Bottom-up fold of the matching combiner; families indexed by leaf node id.
CutFamily assemble(const Graph& g, const DecompositionTree& tree,
                   const std::map<int, CutFamily>& leaf_families);

// Apple-free pipeline (claw-free top split, then the layered engines).
PipelineResult applefree_separator(const Graph& g, bool verify_assumptions);

// Cap-free pipeline: component / anticomponent / amalgam down to basic
// cap-free leaves.
PipelineResult capfree_separator(const Graph& g, bool verify_assumptions);

// JSON array of nodes, root first; keys id, rule, phi (1-based), label,
// children, in that order.
void write_tree_json(std::ostream& out, const DecompositionTree& tree);

}  // namespace csep
