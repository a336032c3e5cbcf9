#include "sgspec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "sgspec/canonical.hpp"

namespace sgspec {

SignedGraph SignedGraph::from_edge_list(int n, std::vector<SignedEdge> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("loop edge not allowed");
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw std::invalid_argument("vertex index out of range");
        if (e.sign != 1 && e.sign != -1)
            throw std::invalid_argument("edge sign must be +1 or -1");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
            throw std::invalid_argument("duplicate edge pair");
    SignedGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    return g;
}

std::vector<std::vector<std::pair<int, int>>> SignedGraph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.u].emplace_back(e.v, e.sign);
        adj[e.v].emplace_back(e.u, e.sign);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::vector<int> SignedGraph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const auto& e : edges_) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

SignedGraph switched(const SignedGraph& g, const std::vector<int>& X) {
    std::vector<char> in(g.order(), 0);
    for (int v : X) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("switch set vertex out of range");
        in[v] = 1;
    }
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges)
        if (in[e.u] != in[e.v]) e.sign = -e.sign;
    return SignedGraph::from_edge_list(g.order(), std::move(edges));
}

SignedGraph relabeled(const SignedGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<char> seen(g.order(), 0);
    for (int p : perm) {
        if (p < 0 || p >= g.order() || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = 1;
    }
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges) {
        e.u = perm[e.u];
        e.v = perm[e.v];
    }
    return SignedGraph::from_edge_list(g.order(), std::move(edges));
}

SignedGraph induced_subgraph(const SignedGraph& g, const std::vector<int>& keep) {
    std::vector<int> map(g.order(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.order() || map[v] != -1)
            throw std::invalid_argument("invalid vertex selection");
        map[v] = static_cast<int>(i);
    }
    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges())
        if (map[e.u] != -1 && map[e.v] != -1)
            edges.push_back({map[e.u], map[e.v], e.sign});
    return SignedGraph::from_edge_list(static_cast<int>(keep.size()), std::move(edges));
}

SignedGraph vertex_deleted(const SignedGraph& g, int v) {
    std::vector<int> keep;
    for (int i = 0; i < g.order(); ++i)
        if (i != v) keep.push_back(i);
    return induced_subgraph(g, keep);
}

SignedGraph disjoint_union(const std::vector<SignedGraph>& parts) {
    int n = 0;
    std::vector<SignedEdge> edges;
    for (const auto& p : parts) {
        for (const auto& e : p.edges()) edges.push_back({e.u + n, e.v + n, e.sign});
        n += p.order();
    }
    return SignedGraph::from_edge_list(n, std::move(edges));
}

namespace {

std::vector<int> component_labels(const SignedGraph& g, int& count) {
    std::vector<int> label(g.order(), -1);
    auto adj = g.adjacency();
    count = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (label[s] != -1) continue;
        std::queue<int> q;
        q.push(s);
        label[s] = count;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, sgn] : adj[u])
                if (label[v] == -1) {
                    label[v] = count;
                    q.push(v);
                }
        }
        ++count;
    }
    return label;
}

}  // namespace

bool is_connected(const SignedGraph& g) {
    if (g.order() <= 1) return true;
    int count = 0;
    component_labels(g, count);
    return count == 1;
}

std::vector<SignedGraph> components(const SignedGraph& g) {
    int count = 0;
    auto label = component_labels(g, count);
    std::vector<std::vector<int>> verts(count);
    for (int v = 0; v < g.order(); ++v) verts[label[v]].push_back(v);
    std::vector<SignedGraph> out;
    out.reserve(count);
    for (const auto& vs : verts) out.push_back(induced_subgraph(g, vs));
    std::vector<std::pair<std::string, size_t>> keyed;
    keyed.reserve(out.size());
    for (size_t i = 0; i < out.size(); ++i) keyed.emplace_back(canonical_key(out[i]), i);
    std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
        int oa = out[a.second].order(), ob = out[b.second].order();
        return oa != ob ? oa < ob : a.first < b.first;
    });
    std::vector<SignedGraph> sorted;
    sorted.reserve(out.size());
    for (const auto& [k, i] : keyed) sorted.push_back(std::move(out[i]));
    return sorted;
}

SpanningForest lex_bfs_forest(const SignedGraph& g) {
    SpanningForest f;
    f.parent.assign(g.order(), -1);
    f.parent_sign.assign(g.order(), 1);
    f.sign_to_root.assign(g.order(), 1);
    f.is_tree_edge.assign(g.edges().size(), 0);

    auto adj = g.adjacency();
    // edge index lookup for tree marking
    std::vector<std::pair<std::pair<int, int>, int>> idx;
    idx.reserve(g.edges().size());
    for (size_t i = 0; i < g.edges().size(); ++i)
        idx.push_back({{g.edges()[i].u, g.edges()[i].v}, static_cast<int>(i)});
    auto edge_index = [&idx](int u, int v) {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(idx.begin(), idx.end(),
                                   std::make_pair(std::make_pair(u, v), -1));
        return it->second;
    };

    std::vector<char> visited(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (visited[s]) continue;
        visited[s] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, sgn] : adj[u]) {
                if (visited[v]) continue;
                visited[v] = 1;
                f.parent[v] = u;
                f.parent_sign[v] = sgn;
                f.sign_to_root[v] = f.sign_to_root[u] * sgn;
                f.is_tree_edge[edge_index(u, v)] = 1;
                q.push(v);
            }
        }
    }
    return f;
}

std::vector<std::pair<SignedEdge, int>> fundamental_cycle_signs(const SignedGraph& g) {
    SpanningForest f = lex_bfs_forest(g);
    std::vector<std::pair<SignedEdge, int>> out;
    for (size_t i = 0; i < g.edges().size(); ++i) {
        if (f.is_tree_edge[i]) continue;
        const auto& e = g.edges()[i];
        out.emplace_back(e, e.sign * f.sign_to_root[e.u] * f.sign_to_root[e.v]);
    }
    return out;
}

SignedGraph forest_normalized(const SignedGraph& g) {
    SpanningForest f = lex_bfs_forest(g);
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges) e.sign = e.sign * f.sign_to_root[e.u] * f.sign_to_root[e.v];
    return SignedGraph::from_edge_list(g.order(), std::move(edges));
}

bool is_bipartite(const SignedGraph& g) {
    std::vector<int> color(g.order(), -1);
    auto adj = g.adjacency();
    for (int s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, sgn] : adj[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

void for_each_simple_cycle(
    const SignedGraph& g,
    const std::function<void(const std::vector<int>&, int, bool)>& fn) {
    auto adj = g.adjacency();
    int n = g.order();
    std::vector<std::vector<char>> am(n, std::vector<char>(n, 0));
    for (const auto& e : g.edges()) am[e.u][e.v] = am[e.v][e.u] = 1;
    std::vector<char> on_path(n, 0);
    std::vector<int> path;

    // Cycles are reported once: the start is the smallest vertex on the cycle
    // and the second vertex is smaller than the last.
    std::function<void(int, int, int)> dfs = [&](int start, int u, int cur_sign) {
        for (auto [v, sgn] : adj[u]) {
            if (v == start && path.size() >= 3) {
                if (path[1] < path.back()) {
                    int total = cur_sign * sgn;
                    bool chordless = true;
                    for (size_t i = 0; i + 1 < path.size() && chordless; ++i)
                        for (size_t j = i + 2; j < path.size() && chordless; ++j) {
                            if (i == 0 && j == path.size() - 1) continue;
                            if (am[path[i]][path[j]]) chordless = false;
                        }
                    fn(path, total, chordless);
                }
                continue;
            }
            if (v <= start || on_path[v]) continue;
            on_path[v] = 1;
            path.push_back(v);
            dfs(start, v, cur_sign * sgn);
            path.pop_back();
            on_path[v] = 0;
        }
    };

    for (int s = 0; s < n; ++s) {
        on_path[s] = 1;
        path = {s};
        dfs(s, s, 1);
        on_path[s] = 0;
    }
}

namespace {

// Three internally disjoint a-b paths, each with at least one internal vertex.
// Unit vertex capacities via node splitting; the direct a-b edge is dropped.
bool has_three_disjoint_paths(const SignedGraph& g, int a, int b,
                              const std::vector<std::vector<std::pair<int, int>>>& adj) {
    int n = g.order();
    // node u -> in 2u, out 2u+1
    int N = 2 * n;
    std::vector<std::vector<std::pair<int, int>>> cap(N);  // (node, capacity index)
    std::vector<int> capacity;
    auto add_edge = [&](int from, int to, int c) {
        cap[from].emplace_back(to, static_cast<int>(capacity.size()));
        capacity.push_back(c);
        cap[to].emplace_back(from, static_cast<int>(capacity.size()));
        capacity.push_back(0);
    };
    for (int v = 0; v < n; ++v) add_edge(2 * v, 2 * v + 1, (v == a || v == b) ? 3 : 1);
    for (const auto& e : g.edges()) {
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) continue;
        add_edge(2 * e.u + 1, 2 * e.v, 1);
        add_edge(2 * e.v + 1, 2 * e.u, 1);
    }
    int source = 2 * a, sink = 2 * b + 1, flow = 0;
    while (flow < 3) {
        std::vector<int> prev_edge(N, -1), prev_node(N, -1);
        std::queue<int> q;
        q.push(source);
        prev_node[source] = source;
        while (!q.empty() && prev_node[sink] == -1) {
            int u = q.front();
            q.pop();
            for (auto [v, ci] : cap[u]) {
                if (prev_node[v] == -1 && capacity[ci] > 0) {
                    prev_node[v] = u;
                    prev_edge[v] = ci;
                    q.push(v);
                }
            }
        }
        if (prev_node[sink] == -1) break;
        for (int v = sink; v != source; v = prev_node[v]) {
            capacity[prev_edge[v]] -= 1;
            capacity[prev_edge[v] ^ 1] += 1;
        }
        ++flow;
    }
    return flow >= 3;
}

}  // namespace

std::string filter_reason_name(FilterReason r) {
    switch (r) {
        case FilterReason::none: return "none";
        case FilterReason::odd_cycle: return "odd-cycle";
        case FilterReason::balanced_cycle: return "balanced-cycle";
        case FilterReason::degree_gt3: return "degree>3";
        case FilterReason::proper_theta: return "proper-theta";
        case FilterReason::long_induced_unbalanced_cycle: return "long-induced-unbalanced-cycle";
        case FilterReason::non_simple_spectrum: return "non-simple-spectrum";
        case FilterReason::root_outside_interval: return "root-outside-interval";
    }
    return "none";
}

FilterVerdict structural_filter(const SignedGraph& g) {
    for (int d : g.degrees())
        if (d >= 4) return {false, FilterReason::degree_gt3};
    if (!is_bipartite(g)) return {false, FilterReason::odd_cycle};

    bool balanced = false, long_unbalanced = false;
    for_each_simple_cycle(g, [&](const std::vector<int>& cyc, int sign, bool chordless) {
        if (sign > 0) balanced = true;
        if (sign < 0 && chordless && cyc.size() >= 8) long_unbalanced = true;
    });
    if (balanced) return {false, FilterReason::balanced_cycle};

    int cyclomatic = g.size() - g.order() + [&] {
        int c = 0;
        component_labels(g, c);
        return c;
    }();
    if (cyclomatic >= 2) {
        auto adj = g.adjacency();
        auto deg = g.degrees();
        for (int a = 0; a < g.order(); ++a) {
            if (deg[a] < 3) continue;
            for (int b = a + 1; b < g.order(); ++b) {
                if (deg[b] < 3) continue;
                if (has_three_disjoint_paths(g, a, b, adj))
                    return {false, FilterReason::proper_theta};
            }
        }
    }
    if (long_unbalanced) return {false, FilterReason::long_induced_unbalanced_cycle};
    return {true, FilterReason::none};
}

}  // namespace sgspec
