#pragma once

// Signed graphs: vertices 0..n-1, simple undirected edges carrying a sign.
// Values are immutable after construction; all operations are pure.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sgspec {

struct SignedEdge {
    int u = 0;
    int v = 0;
    int sign = 1;
    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

class SignedGraph {
public:
    SignedGraph() = default;

    // Normalizes endpoint order and sorts; throws std::invalid_argument on
    // loops, duplicate pairs or out-of-range vertices.
    static SignedGraph from_edge_list(int n, std::vector<SignedEdge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<SignedEdge>& edges() const { return edges_; }

    // adjacency()[u] lists (neighbor, sign), neighbors ascending.
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;
    std::vector<int> degrees() const;

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    int n_ = 0;
    std::vector<SignedEdge> edges_;
};

// Flip the sign of every edge with exactly one endpoint in X.
SignedGraph switched(const SignedGraph& g, const std::vector<int>& X);

// perm[old] = new vertex label; perm must be a bijection on 0..n-1.
SignedGraph relabeled(const SignedGraph& g, const std::vector<int>& perm);

SignedGraph induced_subgraph(const SignedGraph& g, const std::vector<int>& keep);
SignedGraph vertex_deleted(const SignedGraph& g, int v);

SignedGraph disjoint_union(const std::vector<SignedGraph>& parts);

// Connected components, each re-indexed by ascending original label, ordered
// by (order, canonical_key).
std::vector<SignedGraph> components(const SignedGraph& g);
bool is_connected(const SignedGraph& g);

// Deterministic spanning forest: BFS from the lowest-index vertex of each
// component, neighbors visited in ascending order.
struct SpanningForest {
    std::vector<int> parent;        // -1 at roots
    std::vector<int> parent_sign;   // +1 at roots
    std::vector<int> sign_to_root;  // product of signs on the tree path to the root
    std::vector<char> is_tree_edge;  // indexed like g.edges()
};
SpanningForest lex_bfs_forest(const SignedGraph& g);

// (co-tree edge, sign of its fundamental cycle), in sorted edge order.
std::vector<std::pair<SignedEdge, int>> fundamental_cycle_signs(const SignedGraph& g);

// Switching-equivalent graph with every forest edge positive; co-tree edges
// then carry their fundamental cycle signs. Idempotent.
SignedGraph forest_normalized(const SignedGraph& g);

enum class FilterReason {
    none,
    odd_cycle,
    balanced_cycle,
    degree_gt3,
    proper_theta,
    long_induced_unbalanced_cycle,
    non_simple_spectrum,
    root_outside_interval,
};

struct FilterVerdict {
    bool pass = true;
    FilterReason reason = FilterReason::none;
};

std::string filter_reason_name(FilterReason r);

// Structural pruning predicate for catalog membership (sound, not complete):
// rejects degree > 3, odd cycles, balanced cycles, proper theta subgraphs and
// induced unbalanced cycles of order >= 8.
FilterVerdict structural_filter(const SignedGraph& g);

bool is_bipartite(const SignedGraph& g);

// Visits every simple cycle once as (vertices in cycle order, sign product,
// chordless flag). Intended for bounded-degree graphs.
void for_each_simple_cycle(
    const SignedGraph& g,
    const std::function<void(const std::vector<int>&, int, bool)>& fn);

}  // namespace sgspec
